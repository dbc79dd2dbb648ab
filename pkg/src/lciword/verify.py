"""Named invariant suites: each returns a machine-readable report with a
top-level pass flag and the first counterexample when one exists.
Failures are reported, never raised.
"""

import math

import numpy as np

from . import laws as L
from .exact import lci_dp, verify_representation
from .kernels import star_batch
from .percolation import (
    WeightLattice,
    indicator_lattice,
    lpp_t2,
    lpp_t3,
    lpp_tp,
)
from .rng import stream
from .stats import empirical_pgf, moment_check
from .words import Word, gap_counts


def suite_representation(seed: int = 0, trials: int = 500) -> dict:
    rep = verify_representation(seed=seed, trials=trials)
    return rep.to_dict()


def suite_percolation(seed: int = 0, trials: int = 300) -> dict:
    rng = stream(seed, 0)
    failures = 0
    first = None
    total = 0

    def record(kind, detail):
        nonlocal failures, first
        failures += 1
        if first is None:
            first = {"check": kind, **detail}

    for _ in range(trials):
        m = int(rng.integers(1, 5))
        n = int(rng.integers(1, 101))
        x = Word(rng.integers(1, m + 1, n), m)
        y = Word(rng.integers(1, m + 1, n), m)
        total += 1
        t3 = lpp_t3(indicator_lattice(x, y))
        dp = lci_dp(x, y).length
        if int(round(t3)) != dp:
            record(
                "indicator_equivalence",
                {"m": m, "x": x.letters.tolist(), "y": y.letters.tolist(), "t3": t3, "dp": dp},
            )

    # jump semantics with one horizontal axis agrees with unit-step paths
    for _ in range(40):
        n1 = int(rng.integers(1, 30))
        m = int(rng.integers(1, 6))
        w = rng.exponential(1.0, size=(n1 + 1, m))
        w[0] = 0.0
        total += 1
        a = lpp_tp(WeightLattice(1, w), 1)
        b = lpp_t2(w)
        if not math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-12):
            record("jump1_vs_unit2", {"n1": n1, "m": m, "jump": a, "unit": b})

    # three identical words: the p=3 time is the weakly increasing LIS
    for _ in range(20):
        m = int(rng.integers(1, 4))
        n = int(rng.integers(1, 20))
        x = Word(rng.integers(1, m + 1, n), m)
        total += 1
        t = lpp_tp(indicator_lattice(x, x, x), 3)
        dp = lci_dp(x, x).length
        if int(round(t)) != dp:
            record("triple_word_lis", {"m": m, "x": x.letters.tolist(), "tp": t, "dp": dp})

    return {
        "suite": "percolation",
        "trials": total,
        "failures": failures,
        "first_counterexample": first,
        "pass": failures == 0,
    }


def suite_laws(seed: int = 0) -> dict:
    checks = []
    law3 = L.LetterLaw.uniform(3)

    # gap-count moments over one long uniform word
    w = L.sample_word(law3, 10**4, stream(seed, 1))
    g = gap_counts(w, 1, 3).astype(float)
    rep = moment_check(g, 1.0, 2.0, z=4.0)
    checks.append({"check": "gap_moments", **rep.to_dict()})

    # lag-1 autocorrelation of the gap-count sequence
    gc = g - g.mean()
    denom = float((gc * gc).sum())
    rho = float((gc[:-1] * gc[1:]).sum() / denom) if denom > 0 else 0.0
    tol = 4.0 / math.sqrt(g.size)
    checks.append({"check": "gap_autocorr", "rho": rho, "tol": tol, "pass": abs(rho) <= tol})

    # empirical generating function of the wasted top-letter count;
    # chunked so the numpy fallback's cumulative tables stay small
    kvec = np.array([5, 3], np.int64)
    nword = 400
    batchsize = 10**5
    rng = stream(seed, 2)
    rparts = []
    fparts = []
    for start in range(0, batchsize, 20000):
        wordmat = rng.integers(1, 4, size=(20000, nword), dtype=np.int32)
        _, rpart, fpart = star_batch(wordmat, kvec, 3)
        rparts.append(rpart)
        fparts.append(fpart)
    rstat = np.concatenate(rparts)
    feas = np.concatenate(fparts)
    ok_feas = bool(feas.all())
    checks.append({"check": "nstar_sampler_feasible", "pass": ok_feas})
    if ok_feas:
        for x in (0.0, 0.25, 0.5, 0.75):
            est, se = empirical_pgf(rstat.astype(float), x)
            target = L.pgf_nstar(law3, 3, kvec, x)
            ok = abs(est - target) <= 4.0 * max(se, 1e-12)
            checks.append(
                {
                    "check": f"nstar_pgf_x{x}",
                    "estimate": est,
                    "target": target,
                    "se": se,
                    "pass": ok,
                }
            )

    # letter-count concentration: no excursion of sqrt(n) log(n) in 1e4 trials
    n = 10**4
    xn = math.sqrt(n) * math.log(n)
    rng = stream(seed, 3)
    for m in (2, 3):
        counts = rng.binomial(n, 1.0 / m, size=10**4)
        exceed = int((np.abs(counts - n / m) >= xn).sum())
        checks.append({"check": f"count_concentration_m{m}", "exceed": exceed, "pass": exceed == 0})

    failures = sum(0 if c["pass"] else 1 for c in checks)
    first = next((c for c in checks if not c["pass"]), None)
    return {
        "suite": "laws",
        "trials": len(checks),
        "failures": failures,
        "first_counterexample": first,
        "pass": failures == 0,
    }


TAIL_K_GRID = (1, 10, 100, 1000)
TAIL_X_FACTORS = (0.5, 1.0, 2.0, 4.0)


def _count_ucl(n_trials: int, bound: float) -> float:
    """z=4 binomial upper band on the exceedance count, with a small
    integer-granularity cushion for tiny expected counts."""
    b = min(bound, 1.0)
    return n_trials * b + 4.0 * math.sqrt(n_trials * b * (1.0 - b)) + 4.0


def suite_tails(seed: int = 0, trials: int = 10**5) -> dict:
    checks = []
    rng = stream(seed, 0)
    for k in TAIL_K_GRID:
        # sum of k centered unit-geometric gap counts, scaled by 1/sqrt(2)
        tot = rng.negative_binomial(k, 0.5, size=trials).astype(np.int64)
        s = (tot - k) / math.sqrt(2.0)
        for f in TAIL_X_FACTORS:
            x = f * math.sqrt(k)
            right = int((s >= x).sum())
            left = int((s <= -x).sum())
            br = L.theta_r(k, x * math.sqrt(2.0))
            bl = L.theta_l(k, x * math.sqrt(2.0))
            okr = right <= _count_ucl(trials, br)
            okl = left <= _count_ucl(trials, bl)
            checks.append(
                {
                    "check": f"tail_k{k}_x{f}",
                    "right_freq": right / trials,
                    "right_bound": br,
                    "left_freq": left / trials,
                    "left_bound": bl,
                    "pass": okr and okl,
                }
            )

    # calibrated envelope over the documented grid
    bad = 0
    for n in np.unique(np.round(np.geomspace(10, 10**4, 40)).astype(int)):
        xs = np.linspace(-n, 10 * n, 401)
        for x in xs:
            if not L.k_envelope_holds(int(n), float(x)):
                bad += 1
    checks.append({"check": "k_envelope", "violations": bad, "pass": bad == 0})

    failures = sum(0 if c["pass"] else 1 for c in checks)
    first = next((c for c in checks if not c["pass"]), None)
    return {
        "suite": "tails",
        "trials": len(checks),
        "failures": failures,
        "first_counterexample": first,
        "pass": failures == 0,
    }


def suite_lemma_ineg(seed: int = 0, trials: int = 10**6) -> dict:
    """max-min stability: |max min(a,b) - max min(a+c,b+d)| <= max(|c| v |d|).

    Values live on a dyadic grid so float arithmetic is exact and the
    inequality can be asserted with zero tolerance.
    """
    rng = stream(seed, 0)
    sizes = (1, 2, 3, 4, 6, 8)
    per = trials // len(sizes)
    failures = 0
    first = None
    total = 0
    for K in sizes:
        a, b, c, d = (
            rng.integers(-(2**20), 2**20, size=(per, K)).astype(np.float64) / 1024.0
            for _ in range(4)
        )
        lhs = np.abs(
            np.minimum(a, b).max(axis=1) - np.minimum(a + c, b + d).max(axis=1)
        )
        rhs = np.maximum(np.abs(c), np.abs(d)).max(axis=1)
        bad = lhs > rhs
        total += per
        if bad.any():
            failures += int(bad.sum())
            if first is None:
                i = int(np.argmax(bad))
                first = {
                    "a": a[i].tolist(),
                    "b": b[i].tolist(),
                    "c": c[i].tolist(),
                    "d": d[i].tolist(),
                }
    return {
        "suite": "lemma-ineg",
        "trials": total,
        "failures": failures,
        "first_counterexample": first,
        "pass": failures == 0,
    }


SUITES = {
    "representation": suite_representation,
    "percolation": suite_percolation,
    "laws": suite_laws,
    "tails": suite_tails,
    "lemma-ineg": suite_lemma_ineg,
}
