"""Statistical verification kit: ECDFs, the exact two-sample
Kolmogorov-Smirnov sweep with fixed-level critical values, moment checks
with CLT bands, and empirical generating-function estimates.

All reports are pure functions of (values, parameters): byte-identical
on rerun.
"""

import csv
import json
import math
from dataclasses import dataclass

import numpy as np

CSV_HEADER = ["kind", "m", "n_or_G", "seed", "sample_index", "value"]


@dataclass(frozen=True)
class SampleBatch:
    """Tagged scalar samples with the config that produced them."""

    values: np.ndarray
    kind: str
    m: int
    n_or_g: int
    seed: int

    def __post_init__(self):
        v = np.asarray(self.values, np.float64)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return int(self.values.size)

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            wr = csv.writer(fh)
            wr.writerow(CSV_HEADER)
            for i, v in enumerate(self.values):
                wr.writerow([self.kind, self.m, self.n_or_g, self.seed, i, repr(float(v))])

    def to_json(self, path) -> None:
        doc = {
            "kind": self.kind,
            "m": self.m,
            "n_or_G": self.n_or_g,
            "seed": self.seed,
            "values": [float(v) for v in self.values],
        }
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")

    @classmethod
    def from_csv(cls, path) -> "SampleBatch":
        with open(path, newline="") as fh:
            rd = csv.reader(fh)
            header = next(rd, None)
            if header != CSV_HEADER:
                raise ValueError(f"unexpected sample CSV header: {header}")
            kind = None
            meta = None
            vals = []
            for row in rd:
                if kind is None:
                    kind = row[0]
                    meta = (int(row[1]), int(row[2]), int(row[3]))
                vals.append(float(row[5]))
        if kind is None:
            raise ValueError("empty sample CSV")
        return cls(np.array(vals), kind, meta[0], meta[1], meta[2])


def _values(batch) -> np.ndarray:
    v = batch.values if isinstance(batch, SampleBatch) else np.asarray(batch, np.float64)
    if v.size == 0:
        raise ValueError("empty sample batch")
    if not np.isfinite(v).all():
        raise ValueError("samples must be finite")
    return v


class Ecdf:
    """Right-continuous empirical distribution function."""

    def __init__(self, batch):
        v = _values(batch)
        self.sorted = np.sort(v)
        self.n = v.size

    def __call__(self, q):
        return np.searchsorted(self.sorted, q, side="right") / self.n


def ecdf(batch) -> Ecdf:
    return Ecdf(batch)


def ks_critical(alpha: float, n1: int, n2: int) -> float:
    """Level-alpha two-sample critical value c(alpha) sqrt((n1+n2)/(n1 n2))
    with c(alpha) = sqrt(log(2/alpha)/2); c(0.05)=1.358, c(0.01)=1.628."""
    if not 0 < alpha < 1:
        raise ValueError("alpha must be in (0, 1)")
    c = math.sqrt(math.log(2.0 / alpha) / 2.0)
    return c * math.sqrt((n1 + n2) / (n1 * n2))


@dataclass(frozen=True)
class KsReport:
    statistic: float
    n1: int
    n2: int
    alpha: float
    critical: float
    bias_allowance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "n1": self.n1,
            "n2": self.n2,
            "alpha": self.alpha,
            "critical": self.critical,
            "bias_allowance": self.bias_allowance,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def ks_two_sample(a, b, alpha: float = 0.01, bias_allowance: float = 0.0) -> KsReport:
    """Exact sup-distance between the two ECDFs by a merged sweep.

    Passes iff statistic <= critical(alpha) + bias_allowance.
    """
    va = np.sort(_values(a))
    vb = np.sort(_values(b))
    n1, n2 = va.size, vb.size
    grid = np.concatenate([va, vb])
    fa = np.searchsorted(va, grid, side="right") / n1
    fb = np.searchsorted(vb, grid, side="right") / n2
    stat = float(np.abs(fa - fb).max())
    crit = ks_critical(alpha, n1, n2)
    return KsReport(stat, n1, n2, alpha, crit, bias_allowance, stat <= crit + bias_allowance)


@dataclass(frozen=True)
class MomentReport:
    sample_mean: float
    sample_var: float
    target_mean: float
    target_var: float
    z: float
    n: int
    mean_ok: bool
    var_ok: bool

    @property
    def passed(self) -> bool:
        return self.mean_ok and self.var_ok

    def to_dict(self) -> dict:
        return {
            "sample_mean": self.sample_mean,
            "sample_var": self.sample_var,
            "target_mean": self.target_mean,
            "target_var": self.target_var,
            "z": self.z,
            "n": self.n,
            "mean_ok": self.mean_ok,
            "var_ok": self.var_ok,
            "pass": self.passed,
        }


def moment_check(batch, target_mean: float, target_var: float, z: float = 4.0) -> MomentReport:
    """Mean and variance against targets within z standard errors.

    The variance band uses the CLT standard error of the sample variance
    with the plug-in fourth moment, sqrt((m4 - s^4)/N); for Gaussian data
    this is the usual chi-square/normal band sqrt(2/N) s^2.
    """
    v = _values(batch)
    n = v.size
    if n < 30 and not (target_var == 0.0):
        raise ValueError("moment checks need at least 30 samples")
    mean = float(v.mean())
    var = float(v.var(ddof=1)) if n > 1 else 0.0
    mean_ok = abs(mean - target_mean) <= z * math.sqrt(max(var, 0.0) / n)
    if target_var == 0.0:
        var_ok = var == 0.0
    else:
        centered = v - mean
        m4 = float((centered**4).mean())
        se = math.sqrt(max(m4 - var * var, 0.0) / n)
        var_ok = abs(var - target_var) <= z * se
    return MomentReport(mean, var, target_mean, target_var, z, n, mean_ok, var_ok)


def empirical_pgf(batch, x: float) -> tuple:
    """(mean of x**value, standard error) over an integer-valued batch."""
    v = _values(batch)
    iv = np.rint(v)
    if not np.array_equal(iv, v) or iv.min() < 0:
        raise ValueError("empirical generating functions need nonnegative integers")
    if abs(x) > 1:
        raise ValueError("|x| must be <= 1")
    powed = np.power(float(x), iv)
    est = float(powed.mean())
    se = float(powed.std(ddof=1) / math.sqrt(powed.size)) if powed.size > 1 else 0.0
    return est, se
