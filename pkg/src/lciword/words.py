"""Words over a totally ordered finite alphabet and their occurrence
statistics.

Letters are the integers 1..m in increasing order.  All objects are
immutable after construction and every operation is a pure function, so
they are safe to share across workers.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Alphabet:
    """Ordered alphabet of m letters, identified with 1..m."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.m}")


class Word:
    """Finite word over 1..m, stored as a read-only int32 array."""

    __slots__ = ("letters", "m")

    def __init__(self, letters, m: int):
        if m < 1:
            raise ValueError(f"alphabet size must be >= 1, got {m}")
        arr = np.ascontiguousarray(letters, dtype=np.int32)
        if arr.ndim != 1:
            raise ValueError("letters must be one-dimensional")
        if arr.size and (arr.min() < 1 or arr.max() > m):
            raise ValueError(f"letters must lie in 1..{m}")
        arr.setflags(write=False)
        object.__setattr__(self, "letters", arr)
        object.__setattr__(self, "m", m)

    def __setattr__(self, *a):
        raise AttributeError("Word is immutable")

    def __len__(self):
        return int(self.letters.size)

    @property
    def n(self) -> int:
        return int(self.letters.size)

    def __repr__(self):
        body = ",".join(str(int(c)) for c in self.letters[:16])
        tail = ",..." if self.n > 16 else ""
        return f"Word([{body}{tail}], m={self.m})"


@dataclass(frozen=True)
class StarCounts:
    """Wasted-letter counts and top-letter consumption for one pick vector.

    nstar[i-1] is the number of letter-i occurrences already passed when
    the collection of letter i starts; r_stat counts the top letters m
    consumed before the collection ends.  When feasible is False the
    collection ran past the end of the word and nstar entries after the
    failing stage are unspecified.
    """

    nstar: tuple
    r_stat: int
    feasible: bool


class WordStats:
    """Precomputed occurrence tables for a word.

    Built once in O(n*m); supports O(1) window counts, occurrence lookups
    and the incremental quantities the representation scan needs.
    """

    __slots__ = ("word", "m", "n", "counts", "occ", "cum", "occ_flat", "occ_off")

    def __init__(self, word: Word):
        letters = word.letters
        m, n = word.m, word.n
        self.word = word
        self.m = m
        self.n = n
        cum = np.zeros((m + 1, n + 1), np.int32)
        occ = [None] * (m + 1)
        for r in range(1, m + 1):
            hits = letters == r
            np.cumsum(hits, dtype=np.int32, out=cum[r, 1:])
            occ[r] = (np.flatnonzero(hits) + 1).astype(np.int64)
        self.cum = cum
        self.occ = occ
        self.counts = tuple(int(cum[r, n]) for r in range(1, m + 1))
        off = np.zeros(m + 2, np.int64)
        for r in range(1, m + 1):
            off[r + 1] = off[r] + occ[r].size
        flat = np.empty(off[m + 1], np.int64)
        for r in range(1, m + 1):
            flat[off[r]:off[r + 1]] = occ[r]
        self.occ_flat = flat
        self.occ_off = off

    def window(self, r: int, s: int, t: int) -> int:
        """Number of occurrences of letter r at positions s+1..t."""
        self._check_letter(r)
        if not (0 <= s <= t <= self.n):
            raise ValueError(f"invalid window 0 <= {s} <= {t} <= {self.n}")
        return int(self.cum[r, t] - self.cum[r, s])

    def occurrence(self, r: int, j: int):
        """1-based position of the j-th occurrence of r; None if absent.

        occurrence(r, 0) is 0 by convention.
        """
        self._check_letter(r)
        if j < 0:
            raise ValueError("occurrence index must be >= 0")
        if j == 0:
            return 0
        o = self.occ[r]
        if j > o.size:
            return None
        return int(o[j - 1])

    def _check_letter(self, r: int):
        if not (1 <= r <= self.m):
            raise ValueError(f"letter {r} outside 1..{self.m}")


def count_letters(w: Word, a: Alphabet | None = None) -> tuple:
    """Occurrence counts (N_1, ..., N_m); they always sum to len(w)."""
    if a is not None and a.m != w.m:
        raise ValueError("alphabet mismatch")
    return WordStats(w).counts


def window_count(w: Word, r: int, s: int, t: int) -> int:
    """Count of letter r at positions s+1..t of w."""
    return WordStats(w).window(r, s, t)


def occurrence_position(w: Word, r: int, j: int):
    """Position of the j-th occurrence of r in w, or None when absent."""
    return WordStats(w).occurrence(r, j)


def star_counts(w: Word, k, stats: WordStats | None = None) -> StarCounts:
    """Sequential letter-collection statistics for pick vector k.

    Scans the word left to right collecting k_1 ones, then k_2 twos after
    them, and so on.  nstar[i-1] counts the letter-i occurrences wasted
    before stage i starts; r_stat counts the top letters consumed before
    the final collected position.  Infeasible picks (the word runs out of
    some letter) are a normal result, not an error.
    """
    m = w.m
    if m < 2:
        raise ValueError("star counts need an alphabet of size >= 2")
    k = tuple(int(v) for v in k)
    if len(k) != m - 1:
        raise ValueError(f"pick vector must have length {m - 1}")
    if any(v < 0 for v in k):
        raise ValueError("pick counts must be >= 0")
    st = stats if stats is not None else WordStats(w)
    nstar = []
    pos = 0
    for i in range(1, m):
        ns = int(st.cum[i, pos])
        nstar.append(ns)
        if k[i - 1] > 0:
            target = ns + k[i - 1]
            if target > st.counts[i - 1]:
                return StarCounts(tuple(nstar), 0, False)
            pos = int(st.occ[i][target - 1])
    return StarCounts(tuple(nstar), int(st.cum[m, pos]), True)


def tail_residual(w: Word, i: int, r: int) -> int:
    """Count of letter r after the last occurrence of letter i.

    Covers the whole word when i never occurs; undefined for i == r.
    """
    if i == r:
        raise ValueError("tail residual needs two distinct letters")
    st = WordStats(w)
    st._check_letter(i)
    st._check_letter(r)
    last = st.occ[i][-1] if st.occ[i].size else 0
    return st.window(r, int(last), st.n)


def gap_counts(w: Word, i: int, r: int) -> np.ndarray:
    """Counts of letter r inside consecutive letter-i gaps.

    Entry j-1 counts the r's strictly between the (j-1)-th and j-th
    occurrence of i (the j-th occurrence itself excluded by letter, the
    left endpoint by position).
    """
    if i == r:
        raise ValueError("gap counts need two distinct letters")
    st = WordStats(w)
    st._check_letter(i)
    st._check_letter(r)
    pos = np.concatenate([[0], st.occ[i]])
    at = st.cum[r][pos]
    return np.diff(at).astype(np.int64)
