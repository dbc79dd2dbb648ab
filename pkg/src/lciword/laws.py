"""Closed-form laws for the occurrence statistics of iid letter words:
generating functions and moments of gap counts and wasted-letter counts,
Chernoff-style tail bounds for centered geometric sums, the limiting
covariance across letter channels, and the matching samplers.

Tail bounds are evaluated in log space (they span hundreds of orders of
magnitude); linear-scale values saturate to 0 below exp(-700).
"""

import math
from dataclasses import dataclass

import numpy as np

from .rng import stream
from .words import Word

TIE_TOL = 1e-12


@dataclass(frozen=True)
class LetterLaw:
    """Letter distribution (p_1, ..., p_m) on the ordered alphabet."""

    probs: tuple

    def __post_init__(self):
        p = tuple(float(v) for v in self.probs)
        if len(p) < 1:
            raise ValueError("need at least one letter")
        if min(p) < 0:
            raise ValueError("probabilities must be nonnegative")
        if abs(sum(p) - 1.0) > TIE_TOL:
            raise ValueError(f"probabilities must sum to 1, got {sum(p)}")
        object.__setattr__(self, "probs", p)

    @classmethod
    def uniform(cls, m: int) -> "LetterLaw":
        if m < 1:
            raise ValueError("m must be >= 1")
        return cls((1.0 / m,) * m)

    @property
    def m(self) -> int:
        return len(self.probs)

    @property
    def p_max(self) -> float:
        return max(self.probs)

    def multiplicity(self, tol: float = TIE_TOL) -> int:
        """Number of letters attaining the maximal probability."""
        pm = self.p_max
        return sum(1 for v in self.probs if v >= pm - tol)

    def _p(self, i: int) -> float:
        if not (1 <= i <= self.m):
            raise ValueError(f"letter {i} outside 1..{self.m}")
        return self.probs[i - 1]


# ---------------------------------------------------------------------------
# gap counts: the number of r's strictly between consecutive i's


def pgf_gap_count(law: LetterLaw, i: int, r: int, x: float) -> float:
    """E[x^N] for the count N of letter r inside one letter-i gap:
    p_i / (p_i + p_r - p_r x)."""
    if i == r:
        raise ValueError("gap counts need two distinct letters")
    pi, pr = law._p(i), law._p(r)
    den = pi + pr - pr * x
    if den <= 0:
        raise ValueError(f"generating function undefined: denominator {den} <= 0")
    return pi / den


def moments_gap_count(law: LetterLaw, i: int, r: int) -> tuple:
    """(mean, variance) of one gap count: (p_r/p_i, (p_r/p_i)(1 + p_r/p_i))."""
    if i == r:
        raise ValueError("gap counts need two distinct letters")
    pi, pr = law._p(i), law._p(r)
    if pi == 0:
        raise ValueError("conditioning letter has probability 0")
    rho = pr / pi
    return rho, rho * (1.0 + rho)


def cov_gap_count(law: LetterLaw, i: int, r: int, s: int) -> float:
    """Covariance of the r- and s-counts inside the same letter-i gap:
    p_r p_s / p_i^2 (r != s)."""
    if i in (r, s) or r == s:
        raise ValueError("need three distinct letters")
    pi = law._p(i)
    if pi == 0:
        raise ValueError("conditioning letter has probability 0")
    return law._p(r) * law._p(s) / pi**2


def pgf_gap_vector(law: LetterLaw, i: int, xs) -> float:
    """Joint generating function E[prod_r x_r^{N_r}] over one letter-i gap:
    p_i / (1 - sum_{r != i} p_r x_r).

    xs has length m with the i-th entry ignored.
    """
    xs = tuple(float(v) for v in xs)
    if len(xs) != law.m:
        raise ValueError(f"xs must have length {law.m}")
    pi = law._p(i)
    acc = sum(law.probs[r] * xs[r] for r in range(law.m) if r != i - 1)
    den = 1.0 - acc
    if den <= 0:
        raise ValueError(f"generating function undefined: denominator {den} <= 0")
    return pi / den


# ---------------------------------------------------------------------------
# wasted-letter counts for a pick vector


def pgf_nstar_component(law: LetterLaw, i: int, j: int, k_j: int, x: float) -> float:
    """E[x^{N*_{i,j}}] = (p_j / (p_j + p_i - p_i x))^{k_j} for stage j < i."""
    if not j < i:
        raise ValueError("component index j must be below i")
    if k_j < 0:
        raise ValueError("pick count must be >= 0")
    pj, pi = law._p(j), law._p(i)
    den = pj + pi - pi * x
    if den <= 0:
        raise ValueError(f"generating function undefined: denominator {den} <= 0")
    return (pj / den) ** k_j


def moments_nstar_component(law: LetterLaw, i: int, j: int, k_j: int) -> tuple:
    """(mean, variance) of one stage's waste: ((p_i/p_j)k_j,
    (1+p_i/p_j)(p_i/p_j)k_j)."""
    if not j < i:
        raise ValueError("component index j must be below i")
    pj, pi = law._p(j), law._p(i)
    if pj == 0:
        raise ValueError("stage letter has probability 0")
    rho = pi / pj
    return rho * k_j, (1.0 + rho) * rho * k_j


def pgf_nstar(law: LetterLaw, i: int, k, x: float) -> float:
    """E[x^{N*_i}] = prod_{j<i} pgf_nstar_component; the stages are
    independent, so the generating function factorizes."""
    if i < 2:
        raise ValueError("wasted counts start at letter 2")
    k = tuple(int(v) for v in k)
    if len(k) < i - 1:
        raise ValueError(f"need pick counts for stages 1..{i - 1}")
    out = 1.0
    for j in range(1, i):
        out *= pgf_nstar_component(law, i, j, k[j - 1], x)
    return out


def moments_nstar(law: LetterLaw, i: int, k) -> tuple:
    """(mean, variance) of N*_i: sums of the per-stage moments."""
    if i < 2:
        raise ValueError("wasted counts start at letter 2")
    k = tuple(int(v) for v in k)
    mean = 0.0
    var = 0.0
    for j in range(1, i):
        mu, v = moments_nstar_component(law, i, j, k[j - 1])
        mean += mu
        var += v
    return mean, var


# ---------------------------------------------------------------------------
# Chernoff bounds for sums of centered unit-geometric gap counts
#
# theta_r(k, x) bounds P(sum of k centered gaps >= x); theta_l(k, x)
# bounds P(sum <= -x).  The closed forms come from the exact minimizers
# of the exponential bound; outside its validity range theta_l falls
# back to a minimization over a fixed t-grid (log-spaced, 1e-4..40,
# 2048 points).

_THETA_L_TGRID = np.geomspace(1e-4, 40.0, 2048)


def _xlogx(v: float) -> float:
    return 0.0 if v == 0.0 else v * math.log(v)


def log_theta_r(k: int, x: float) -> float:
    """log of the right-tail bound (x+2k)^{x+2k} / ((2x+2k)^{x+k} (2k)^k).

    Limits at k = 0 (-> -x log 2) and x = 0 (-> 0) taken by continuity.
    """
    if x < 0:
        raise ValueError("right-tail deviation must be >= 0")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return -x * math.log(2.0)
    return (
        (x + 2.0 * k) * math.log(x + 2.0 * k)
        - (x + k) * math.log(2.0 * x + 2.0 * k)
        - k * math.log(2.0 * k)
    )


def theta_r(k: int, x: float) -> float:
    return _linear(log_theta_r(k, x))


def log_theta_l(k: int, x: float) -> float:
    """log of the left-tail bound (2k-x)^{2k-x} / ((2k-2x)^{k-x} (2k)^k).

    The closed form is the exact minimizer value for 0 <= x <= k; beyond
    that range the bound is evaluated by minimizing
    exp(-(t(x-k) + k log(2 - e^{-t}))) over the fixed t-grid.
    """
    if x < 0:
        raise ValueError("left-tail deviation must be >= 0")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 0.0 if x == 0.0 else -float("inf")
    if x <= k:
        w = k - x
        wterm = w * math.log(2.0 * w) if w > 0 else 0.0
        return (
            (2.0 * k - x) * math.log(2.0 * k - x)
            - wterm
            - k * math.log(2.0 * k)
        )
    t = _THETA_L_TGRID
    expo = -(t * (x - k) + k * np.log(2.0 - np.exp(-t)))
    return float(expo.min())


def theta_l(k: int, x: float) -> float:
    return _linear(log_theta_l(k, x))


def log_k_bound(n: int, x: float) -> float:
    """log of (x+2n)^{x+2n} / ((2x+2n)^{x+n} (2n)^n) for x >= -n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if x < -n:
        raise ValueError("x must be >= -n")
    return (
        _xlogx(x + 2.0 * n)
        - ((x + n) * math.log(2.0 * x + 2.0 * n) if x > -n else 0.0)
        - n * math.log(2.0 * n)
    )


def k_bound(n: int, x: float) -> float:
    return _linear(log_k_bound(n, x))


def _linear(logv: float) -> float:
    return 0.0 if logv < -700.0 else math.exp(logv)


# calibrated envelope constants: K_n(x) <= ENVELOPE_C * exp(-ENVELOPE_c * n *
# min(|x|/n, x^2/n^2)).  The binding regime is x ~ n where K_n(n) = (27/32)^n,
# so any c < ln(32/27) ~ 0.16990 works with C = 1; calibrated over
# n in 10..10^4 (log grid) x in [-n, 10n].
ENVELOPE_C = 1.0
ENVELOPE_c = 0.169


def k_envelope_holds(n: int, x: float, c: float = ENVELOPE_c, C: float = ENVELOPE_C) -> bool:
    """Check K_n(x) <= C exp(-c n min(|x|/n, x^2/n^2)) at one point."""
    lhs = log_k_bound(n, x)
    rhs = math.log(C) - c * min(abs(x), x * x / n)
    return lhs <= rhs + 1e-12


# ---------------------------------------------------------------------------
# samplers


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return stream(int(seed), 0)


def sample_word(law: LetterLaw, n: int, seed) -> Word:
    """IID word of length n under the letter law; deterministic per seed."""
    rng = _as_rng(seed)
    m = law.m
    if law.probs == (1.0 / m,) * m:
        letters = rng.integers(1, m + 1, size=n, dtype=np.int32)
    else:
        letters = rng.choice(np.arange(1, m + 1, dtype=np.int32), size=n, p=law.probs)
    return Word(letters, m)


def sample_geometric(p: float, seed, size=None):
    """Geometric on {1, 2, ...} with success probability p (mean 1/p)."""
    if not 0 < p <= 1:
        raise ValueError("p must be in (0, 1]")
    rng = _as_rng(seed)
    out = rng.geometric(p, size=size)
    return out if size is not None else int(out)


def sample_negative_binomial(j: int, p: float, seed, size=None):
    """Sum of j geometrics on {1, 2, ...}: the arrival time of the j-th
    success."""
    if j < 0:
        raise ValueError("j must be >= 0")
    if not 0 < p <= 1:
        raise ValueError("p must be in (0, 1]")
    rng = _as_rng(seed)
    if j == 0:
        return np.zeros(size, np.int64) if size is not None else 0
    out = rng.negative_binomial(j, p, size=size) + j
    return out if size is not None else int(out)


# ---------------------------------------------------------------------------
# limiting covariance across letter channels


def limit_covariance(m: int) -> np.ndarray:
    """(m-1) x (m-1) matrix with unit diagonal and 1/2 off-diagonal."""
    if m < 2:
        raise ValueError("m must be >= 2")
    out = np.full((m - 1, m - 1), 0.5)
    np.fill_diagonal(out, 1.0)
    return out
