"""Directed last-passage percolation on Z^{p+1} with pluggable weights.

Two path semantics live here:

* ``lpp_t2``: classic corner-to-corner maximum over monotone North/East
  unit-step paths on a dense 2D array; every visited cell contributes.
* ``lpp_t3`` / ``lpp_tp``: level lattices (n_1, ..., n_p, m).  Paths start
  at the free column (0, ..., 0, level 1), climb one level at a time or
  jump horizontally with all p coordinates strictly increasing, and may
  end anywhere (a fixed far-corner endpoint would be unreachable from
  matches on the far faces, since jumps advance every coordinate).  With
  indicator weights from p words this equals their common
  weakly-increasing subsequence length, exactly.

Horizontal jumps are never enumerated: the prefix-maximum DP is the
semantics.
"""

import csv
from dataclasses import dataclass

import numpy as np

from . import kernels
from .rng import stream
from .words import Word

SUPPORTED_P = (1, 2, 3)


@dataclass(frozen=True)
class WeightLattice:
    """Dense nonnegative weights on a (p+1)-dimensional level lattice.

    ``weights`` has shape (n_1+1, ..., n_p+1, m): horizontal positions
    0..n_i and m levels.  The start column (0, ..., 0, level) is a free
    entry point for the jump semantics; factories zero it and the jump
    DPs never read it.
    """

    p: int
    weights: np.ndarray

    def __post_init__(self):
        w = np.ascontiguousarray(self.weights)
        if w.ndim != self.p + 1:
            raise ValueError(f"weights must have {self.p + 1} axes for p={self.p}")
        if w.size and (not np.isfinite(w).all() or w.min() < 0):
            raise ValueError("weights must be finite and nonnegative")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def dims(self) -> tuple:
        horiz = tuple(s - 1 for s in self.weights.shape[:-1])
        return horiz + (self.weights.shape[-1],)


def indicator_lattice(*words: Word) -> WeightLattice:
    """Integer indicator weights w[i_1,...,i_p,k] = [all words carry letter
    k+1 at those positions]; start column zeroed."""
    if len(words) < 1:
        raise ValueError("need at least one word")
    m = words[0].m
    if any(w.m != m for w in words):
        raise ValueError("alphabet mismatch")
    p = len(words)
    shape = tuple(w.n + 1 for w in words) + (m,)
    out = np.zeros(shape, np.int64)
    if all(w.n > 0 for w in words):
        grids = np.ix_(*[np.arange(1, w.n + 1) for w in words])
        first = words[0].letters[grids[0] - 1]
        same = np.ones(np.broadcast_shapes(*[g.shape for g in grids]), bool)
        for g, w in zip(grids[1:], words[1:]):
            same = same & (first == w.letters[g - 1])
        for k in range(1, m + 1):
            out[(*grids, k - 1)] = same & (first == k)
    return WeightLattice(p, out)


def sample_exponential_lattice(dims, rate: float, seed: int) -> WeightLattice:
    """IID exponential weights with the given rate; start column zeroed.

    dims = (n_1, ..., n_p, m); deterministic per seed.
    """
    if rate <= 0:
        raise ValueError("rate must be positive")
    dims = tuple(int(d) for d in dims)
    if len(dims) < 2:
        raise ValueError("dims must be (n_1, ..., n_p, m)")
    p = len(dims) - 1
    shape = tuple(d + 1 for d in dims[:-1]) + (dims[-1],)
    rng = stream(seed, 0)
    w = rng.exponential(1.0 / rate, size=shape)
    w[(0,) * p] = 0.0
    return WeightLattice(p, w)


def lpp_t2(lat: WeightLattice | np.ndarray) -> float:
    """Last-passage time over North/East unit-step paths on a 2D array."""
    w = lat.weights if isinstance(lat, WeightLattice) else np.asarray(lat, float)
    if w.ndim != 2:
        raise ValueError("lpp_t2 needs a 2D lattice")
    return float(kernels.lpp_unit2(np.ascontiguousarray(w, np.float64)))


def lpp_tp(lat: WeightLattice, p: int | None = None) -> float:
    """Last-passage time under the climb/jump semantics for p in 1..3."""
    if p is None:
        p = lat.p
    if p != lat.p:
        raise ValueError(f"lattice has p={lat.p}, requested p={p}")
    if p not in SUPPORTED_P:
        raise ValueError(f"supported p values are {SUPPORTED_P}")
    w = np.ascontiguousarray(lat.weights, np.float64)
    if p == 1:
        return float(kernels.lpp_jump1(w))
    if p == 2:
        return float(kernels.lpp_jump2(w))
    return float(kernels.lpp_jump3(w))


def lpp_t3(lat: WeightLattice) -> float:
    """Last-passage time on Z^3 (two horizontal axes plus levels)."""
    if lat.p != 2:
        raise ValueError("lpp_t3 needs a p=2 lattice")
    return lpp_tp(lat, 2)


def lci_via_percolation(x: Word, y: Word) -> int:
    """LCI length as the last-passage time of the indicator lattice."""
    return int(round(lpp_t3(indicator_lattice(x, y))))


def save_lattice(lat: WeightLattice, path) -> None:
    """Flat CSV: header row ``p,dims...``, then one weight per row in
    row-major order."""
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(["p"] + [f"dim{i}" for i in range(len(lat.dims))])
        wr.writerow([lat.p] + list(lat.dims))
        for v in lat.weights.ravel(order="C"):
            wr.writerow([repr(float(v))])


def load_lattice(path) -> WeightLattice:
    with open(path, newline="") as fh:
        rd = csv.reader(fh)
        header = next(rd)
        if not header or header[0] != "p":
            raise ValueError("not a lattice CSV")
        meta = next(rd)
        p = int(meta[0])
        dims = [int(v) for v in meta[1:]]
        shape = tuple(d + 1 for d in dims[:-1]) + (dims[-1],)
        vals = np.array([float(row[0]) for row in rd])
        if vals.size != int(np.prod(shape)):
            raise ValueError("weight count does not match dims")
        return WeightLattice(p, vals.reshape(shape))
