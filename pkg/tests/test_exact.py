import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lciword.exact import (
    BRUTE_CAP,
    lci_banded,
    lci_bruteforce,
    lci_dp,
    lci_representation,
    verify_representation,
    weak_lis,
)
from lciword.words import Word, count_letters

from conftest import random_word


def enum_lci(xs, ys, strict=False):
    """Definition-level oracle: try all index subsets of both words."""
    best = 0
    for k in range(min(len(xs), len(ys)), 0, -1):
        for ii in itertools.combinations(range(len(xs)), k):
            a = [xs[i] for i in ii]
            ok = all(u < v if strict else u <= v for u, v in zip(a, a[1:]))
            if not ok:
                continue
            for jj in itertools.combinations(range(len(ys)), k):
                if [ys[j] for j in jj] == a:
                    return k
    return best


pair_words = st.integers(1, 4).flatmap(
    lambda m: st.tuples(
        st.just(m),
        st.lists(st.integers(1, m), max_size=8),
        st.lists(st.integers(1, m), max_size=8),
    )
)


class TestDp:
    def test_examples(self):
        assert lci_dp(Word([1, 2], 2), Word([2, 1], 2)).length == 1
        assert enum_lci([1, 2], [2, 1]) == 1
        w = Word([2, 1, 2], 2)
        assert lci_dp(w, w).length == 2
        assert enum_lci([2, 1, 2], [2, 1, 2]) == 2
        assert lci_dp(Word([], 2), Word([1, 2, 1], 2)).length == 0

    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            lci_dp(Word([1], 2), Word([1], 3))

    def test_unequal_lengths_ok(self):
        assert lci_dp(Word([1, 2, 2], 2), Word([2], 2)).length == 1

    @given(pair_words)
    @settings(max_examples=200, deadline=None)
    def test_matches_enumeration(self, mxy):
        m, xs, ys = mxy
        x, y = Word(xs, m), Word(ys, m)
        for strict in (False, True):
            assert lci_dp(x, y, strict).length == enum_lci(xs, ys, strict)

    @given(pair_words)
    @settings(max_examples=200, deadline=None)
    def test_symmetry_and_bounds(self, mxy):
        m, xs, ys = mxy
        x, y = Word(xs, m), Word(ys, m)
        weak = lci_dp(x, y).length
        strict = lci_dp(x, y, strict=True).length
        assert weak == lci_dp(y, x).length
        assert strict == lci_dp(y, x, strict=True).length
        assert strict <= min(m, weak)
        assert weak <= min(len(xs), len(ys))
        counts_x, counts_y = count_letters(x), count_letters(y)
        single = max(min(a, b) for a, b in zip(counts_x, counts_y))
        assert weak >= single

    @given(pair_words, st.integers(1, 4))
    @settings(max_examples=150, deadline=None)
    def test_monotone_under_append(self, mxy, c):
        m, xs, ys = mxy
        c = min(c, m)
        before = lci_dp(Word(xs, m), Word(ys, m)).length
        after = lci_dp(Word(xs + [c], m), Word(ys + [c], m)).length
        assert after >= before

    def test_self_case_is_weak_lis(self, rng):
        for _ in range(100):
            m = int(rng.integers(1, 5))
            w = random_word(rng, m, int(rng.integers(0, 30)))
            assert lci_dp(w, w).length == weak_lis(w)
            assert lci_dp(w, w, strict=True).length == weak_lis(w, strict=True)


class TestBruteforce:
    def test_examples(self):
        assert lci_bruteforce(Word([1, 2, 1], 3), Word([1, 1, 2], 3)).length == 2
        assert lci_bruteforce(Word([2], 2), Word([1], 2)).length == 0
        assert lci_bruteforce(Word([1], 2), Word([1], 2), strict=True).length == 1

    def test_cap(self):
        long = Word([1] * (BRUTE_CAP + 1), 2)
        with pytest.raises(ValueError):
            lci_bruteforce(long, Word([1], 2))

    def test_matches_dp(self, rng):
        for _ in range(300):
            m = int(rng.integers(1, 5))
            x = random_word(rng, m, int(rng.integers(0, 11)))
            y = random_word(rng, m, int(rng.integers(0, 11)))
            for strict in (False, True):
                assert lci_bruteforce(x, y, strict).length == lci_dp(x, y, strict).length


class TestRepresentation:
    def test_example_self_word(self):
        w = Word([1, 3, 2, 1, 3, 2], 3)
        assert lci_representation(w, w).length == weak_lis(w)

    def test_lower_bound_via_zero_pick(self, rng):
        for _ in range(100):
            m = int(rng.integers(2, 5))
            n = int(rng.integers(1, 40))
            x, y = random_word(rng, m, n), random_word(rng, m, n)
            nm = min(count_letters(x)[m - 1], count_letters(y)[m - 1])
            assert lci_representation(x, y).length >= nm

    def test_single_letter_words(self):
        x = Word([2, 2], 2)
        res = lci_representation(x, x)
        assert res.length == 2
        assert res.argmax_k == (0,)

    def test_m1_shortcut(self):
        assert lci_representation(Word([1, 1, 1], 1), Word([1, 1, 1], 1)).length == 3

    def test_requires_equal_lengths(self):
        with pytest.raises(ValueError):
            lci_representation(Word([1], 2), Word([1, 2], 2))

    def test_argmax_is_feasible_and_achieves(self, rng):
        from lciword.words import WordStats, star_counts

        for _ in range(150):
            m = int(rng.integers(2, 5))
            n = int(rng.integers(1, 30))
            x, y = random_word(rng, m, n), random_word(rng, m, n)
            res = lci_representation(x, y)
            k = res.argmax_k
            scx, scy = star_counts(x, k), star_counts(y, k)
            assert scx.feasible and scy.feasible
            mx = count_letters(x)[m - 1] - scx.r_stat
            my = count_letters(y)[m - 1] - scy.r_stat
            assert sum(k) + min(mx, my) == res.length

    def test_exhaustive_small(self):
        rep = verify_representation(seed=0, trials=0, exhaustive=True)
        assert rep.passed, rep.first_counterexample

    def test_harness_trials_zero(self):
        rep = verify_representation(seed=0, trials=0, exhaustive=False)
        assert rep.trials == 0 and rep.passed


class TestBanded:
    def test_matches_full_when_wide(self, rng):
        for _ in range(50):
            m = int(rng.integers(1, 5))
            n = int(rng.integers(1, 60))
            x, y = random_word(rng, m, n), random_word(rng, m, n)
            assert lci_banded(x, y, band=n + 70) == lci_dp(x, y).length

    def test_validated_band_at_n2000(self, rng):
        # the production band 6*sqrt(n) agrees with the full DP
        n = 2000
        for m in (2, 3):
            for _ in range(8):
                x, y = random_word(rng, m, n), random_word(rng, m, n)
                assert lci_banded(x, y) == lci_dp(x, y).length

    def test_narrow_band_falls_back_to_exact(self, rng):
        # adversarial pair whose alignment leaves any central band
        half = 300
        x = Word([1] * half + [2] * half, 2)
        y = Word([2] * half + [1] * half, 2)
        assert lci_dp(x, y).length == half
        assert lci_banded(x, y, band=80) == half
