"""Brownian max/min limit functionals over discretized Weyl chambers,
and the matched pre-limit samplers for centered/scaled common-subsequence
statistics.

The chamber max is evaluated exhaustively over grid vectors
0 <= g_1 <= ... <= g_d <= G (the min over the two driving paths prevents
a dynamic-programming decomposition, so enumeration is the semantics).
Discretization only shrinks the feasible set, so grid values
underestimate the continuum max; distributional acceptance tolerances
carry an explicit bias allowance for this.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .exact import lci_banded
from .laws import LetterLaw, sample_word
from .rng import stream
from .stats import SampleBatch
from .words import Word

KINDS = (
    "uniform_eq00",
    "binary_form",
    "nonuniform_eq00max",
    "single_letter_lconst",
    "driftfree_conjecture",
)

# grid defaults per alphabet size (bias/cost tradeoff)
DEFAULT_GRIDS = {2: 2000, 3: 500, 4: 120}


def default_grid(m: int) -> int:
    return DEFAULT_GRIDS.get(m, 60)


@dataclass(frozen=True)
class FunctionalSpec:
    """Which limit functional to evaluate.

    kind selects the formula; m is the alphabet size; p_max and
    multiplicity describe the top-probability letters for the
    non-uniform variant.
    """

    kind: str
    m: int
    p_max: float | None = None
    multiplicity: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown functional kind {self.kind!r}")
        if self.kind in ("uniform_eq00", "driftfree_conjecture") and self.m < 2:
            raise ValueError("chamber functionals need m >= 2")
        if self.kind == "nonuniform_eq00max":
            if self.p_max is None or self.multiplicity is None:
                raise ValueError("non-uniform functional needs p_max and multiplicity")
            if not 0 < self.p_max <= 1 or self.multiplicity < 1:
                raise ValueError("invalid p_max or multiplicity")
            if self.multiplicity * self.p_max > 1 + 1e-12:
                raise ValueError("multiplicity * p_max cannot exceed 1")
        if self.m < 1:
            raise ValueError("m must be >= 1")

    @classmethod
    def from_law(cls, law: LetterLaw) -> "FunctionalSpec":
        """Uniform chamber functional for uniform laws, the multiplicity
        chamber otherwise."""
        if law.probs == (1.0 / law.m,) * law.m:
            return cls("uniform_eq00", law.m)
        return cls("nonuniform_eq00max", law.m, law.p_max, law.multiplicity())

    @property
    def path_dim(self) -> int:
        """Brownian coordinates per path required by this functional."""
        if self.kind in ("uniform_eq00", "driftfree_conjecture"):
            return self.m
        if self.kind == "nonuniform_eq00max":
            return self.multiplicity
        return 1

    @property
    def chamber_dim(self) -> int:
        """Number of free grid variables."""
        if self.kind in ("uniform_eq00", "driftfree_conjecture"):
            return self.m - 1
        if self.kind == "nonuniform_eq00max":
            return self.multiplicity - 1
        if self.kind == "binary_form":
            return 1
        return 0


@dataclass(frozen=True)
class BrownianPathPair:
    """Two independent dim-coordinate standard Brownian motions sampled
    on the uniform grid t = g/G, g = 0..G."""

    grid: int
    paths: np.ndarray  # shape (2, dim, G+1), value 0 at t=0

    def __post_init__(self):
        p = np.ascontiguousarray(self.paths, np.float64)
        if p.ndim != 3 or p.shape[0] != 2 or p.shape[2] != self.grid + 1:
            raise ValueError("paths must have shape (2, dim, grid+1)")
        if p.size and np.abs(p[:, :, 0]).max() != 0.0:
            raise ValueError("paths must start at 0")
        p.setflags(write=False)
        object.__setattr__(self, "paths", p)

    @property
    def dim(self) -> int:
        return self.paths.shape[1]


def sample_path_pair(m: int, G: int, seed) -> BrownianPathPair:
    """2m independent Brownian coordinates on G+1 grid points;
    deterministic per seed."""
    if G < 1:
        raise ValueError("grid must be >= 1")
    rng = seed if isinstance(seed, np.random.Generator) else stream(int(seed), 0)
    inc = rng.standard_normal((2, m, G)) * math.sqrt(1.0 / G)
    paths = np.zeros((2, m, G + 1))
    np.cumsum(inc, axis=2, out=paths[:, :, 1:])
    return BrownianPathPair(G, paths)


def chamber_terms(pair: BrownianPathPair, spec: FunctionalSpec):
    """Per-path constant c_j and difference paths D_j[i] such that the
    functional is max over the chamber of min_j(c_j + sum_i D_j[i, g_i])."""
    if pair.dim != spec.path_dim:
        raise ValueError(
            f"functional {spec.kind} needs {spec.path_dim} path coordinates, got {pair.dim}"
        )
    G = pair.grid
    P = pair.paths
    term = P[:, :, G]
    if spec.kind == "uniform_eq00":
        c = -term.sum(axis=1) / spec.m + term[:, spec.m - 1]
        D = P[:, :-1, :] - P[:, 1:, :]
    elif spec.kind == "driftfree_conjecture":
        c = term[:, spec.m - 1].copy()
        D = P[:, :-1, :] - P[:, 1:, :]
    elif spec.kind == "nonuniform_eq00max":
        k = spec.multiplicity
        lam = (math.sqrt(1.0 - k * spec.p_max) - 1.0) / k
        c = lam * term.sum(axis=1) + term[:, k - 1]
        D = P[:, :-1, :] - P[:, 1:, :]
    elif spec.kind == "binary_form":
        c = -term[:, 0] * math.sqrt(2.0) / 2.0
        D = math.sqrt(2.0) * P[:, :1, :]
    else:  # single_letter_lconst
        c = math.sqrt(1.0 - 1.0 / spec.m) * term[:, 0]
        D = np.zeros((2, 0, G + 1))
    return np.ascontiguousarray(c), np.ascontiguousarray(D)


def eval_functional(pair: BrownianPathPair, spec: FunctionalSpec) -> float:
    """Exhaustive maximum of the discretized max/min functional."""
    c, D = chamber_terms(pair, spec)
    return float(kernels.chamber_max(c[0], c[1], D[0], D[1]))


def chamber_objective(pair: BrownianPathPair, spec: FunctionalSpec, g) -> float:
    """Objective at one fixed grid vector (a feasible chamber point)."""
    c, D = chamber_terms(pair, spec)
    g = [int(v) for v in g]
    if len(g) != D.shape[1]:
        raise ValueError(f"need {D.shape[1]} grid indices")
    if any(b < a for a, b in zip(g, g[1:])) or (g and (g[0] < 0 or g[-1] > pair.grid)):
        raise ValueError("grid vector must be nondecreasing within 0..G")
    vals = c + sum(D[:, i, gi] for i, gi in enumerate(g))
    return float(np.min(vals))


# ---------------------------------------------------------------------------
# batch drivers (per-sample derived streams; order-deterministic)


def _limit_one(spec: FunctionalSpec, G: int, seed: int, idx: int) -> float:
    rng = stream(seed, idx)
    pair = sample_path_pair(spec.path_dim, G, rng)
    return eval_functional(pair, spec)


def _limit_worker(args):
    spec_fields, G, seed, idx = args
    return _limit_one(FunctionalSpec(*spec_fields), G, seed, idx)


def sample_functional_batch(
    spec: FunctionalSpec, G: int, samples: int, seed: int, workers: int = 1
) -> SampleBatch:
    """Independent draws of the limit functional; sample i uses stream
    (seed, i), so the batch is reproducible and worker-count invariant."""
    if samples < 1:
        raise ValueError("need at least one sample")
    spec_fields = (spec.kind, spec.m, spec.p_max, spec.multiplicity)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            vals = list(
                ex.map(
                    _limit_worker,
                    [(spec_fields, G, seed, i) for i in range(samples)],
                    chunksize=max(1, samples // (8 * workers)),
                )
            )
    else:
        vals = [_limit_one(spec, G, seed, i) for i in range(samples)]
    return SampleBatch(np.array(vals), spec.kind, spec.m, G, seed)


def _align_length(x: Word, y: Word, letter: int) -> int:
    """Alignment count of one designated letter: min(N_r(x), N_r(y))."""
    cx = int(np.count_nonzero(x.letters == letter))
    cy = int(np.count_nonzero(y.letters == letter))
    return min(cx, cy)


def _prelimit_one(
    m: int, n: int, probs: tuple, seed: int, idx: int, statistic: str, band: int | None
) -> float:
    law = LetterLaw(probs)
    rng = stream(seed, idx)
    x = sample_word(law, n, rng)
    y = sample_word(law, n, rng)
    center = n * law.p_max
    scale = math.sqrt(center)
    if m == 1:
        return 0.0
    if statistic == "align":
        # the aligned letter is the lowest-index letter of maximal
        # probability (for skewed laws: the letter every optimal
        # single-letter alignment uses asymptotically)
        v = _align_length(x, y, 1 + int(np.argmax(law.probs)))
    else:
        v = lci_banded(x, y, band=band)
    return (v - center) / scale


def _prelimit_worker(args):
    return _prelimit_one(*args)


def sample_prelimit_batch(
    m: int,
    n: int,
    law: LetterLaw | None,
    samples: int,
    seed: int,
    statistic: str = "lci",
    workers: int = 1,
    band: int | None = None,
) -> SampleBatch:
    """Centered and scaled pre-limit samples from fresh word pairs.

    statistic "lci": (LCI_n - n p_max)/sqrt(n p_max) with p_max = 1/m for
    the uniform law; "align": the single-letter alignment statistic
    min(N_r(X), N_r(Y)) for the designated top-probability letter r,
    centered and scaled the same way.  (Maximizing over tied letters
    would inflate the statistic: for uniform laws the max over m tied
    alignment counts has a strictly larger law than any fixed one.)
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    if statistic not in ("lci", "align"):
        raise ValueError("statistic must be 'lci' or 'align'")
    if law is None:
        law = LetterLaw.uniform(m)
    if law.m != m:
        raise ValueError("law does not match m")
    if n < m:
        raise ValueError("need n >= m")
    args = [(m, n, law.probs, seed, i, statistic, band) for i in range(samples)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            vals = list(ex.map(_prelimit_worker, args, chunksize=max(1, samples // (8 * workers))))
    else:
        vals = [_prelimit_one(*a) for a in args]
    kind = f"prelimit_{statistic}"
    return SampleBatch(np.array(vals), kind, m, n, seed)
