import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lciword.laws import LetterLaw, sample_word
from lciword.rng import stream
from lciword.words import (
    Alphabet,
    Word,
    WordStats,
    count_letters,
    gap_counts,
    occurrence_position,
    star_counts,
    tail_residual,
    window_count,
)

from conftest import random_word

words = st.integers(1, 4).flatmap(
    lambda m: st.tuples(st.just(m), st.lists(st.integers(1, m), max_size=24))
)


def seq_collect_oracle(letters, m, k):
    """Naive left-to-right simulation of the staged letter collection."""
    letters = list(letters)
    pos = 0
    nstar = []
    for i in range(1, m):
        nstar.append(sum(1 for c in letters[:pos] if c == i))
        need = k[i - 1]
        while need > 0 and pos < len(letters):
            if letters[pos] == i:
                need -= 1
            pos += 1
        if need > 0:
            return nstar, None, False
    r = sum(1 for c in letters[:pos] if c == m)
    return nstar, r, True


class TestBasics:
    def test_alphabet_validation(self):
        Alphabet(1)
        with pytest.raises(ValueError):
            Alphabet(0)

    def test_word_validation(self):
        with pytest.raises(ValueError):
            Word([0, 1], 2)
        with pytest.raises(ValueError):
            Word([1, 3], 2)
        w = Word([1, 2], 2)
        with pytest.raises(ValueError):
            w.letters[0] = 2

    def test_count_letters_examples(self):
        assert count_letters(Word([1, 1, 2, 1, 3], 3)) == (3, 1, 1)
        assert count_letters(Word([], 2)) == (0, 0)
        assert count_letters(Word([2, 2, 2], 2)) == (0, 3)

    def test_window_count_examples(self):
        w = Word([1, 3, 2, 1, 3, 2], 3)
        assert window_count(w, 3, 1, 4) == 1
        assert window_count(w, 2, 3, 3) == 0
        assert window_count(Word([2, 2], 2), 2, 0, 2) == 2
        with pytest.raises(ValueError):
            window_count(w, 1, 4, 2)
        with pytest.raises(ValueError):
            window_count(w, 1, 0, 7)

    def test_occurrence_position_examples(self):
        w = Word([1, 2, 1, 2], 2)
        assert occurrence_position(w, 1, 2) == 3
        assert occurrence_position(w, 2, 3) is None
        assert occurrence_position(w, 1, 0) == 0

    def test_star_counts_examples(self):
        sc = star_counts(Word([1, 3, 2, 1, 3, 2], 3), (2, 1))
        assert (sc.nstar, sc.r_stat, sc.feasible) == ((0, 1), 2, True)
        sc0 = star_counts(Word([2, 1, 2], 2), (0,))
        assert (sc0.nstar, sc0.r_stat, sc0.feasible) == ((0,), 0, True)
        assert not star_counts(Word([2, 2], 2), (1,)).feasible

    def test_star_counts_validation(self):
        with pytest.raises(ValueError):
            star_counts(Word([1], 1), ())
        with pytest.raises(ValueError):
            star_counts(Word([1, 2], 2), (1, 1))
        with pytest.raises(ValueError):
            star_counts(Word([1, 2], 2), (-1,))

    def test_tail_residual_examples(self):
        assert tail_residual(Word([1, 3, 3], 3), 1, 3) == 2
        assert tail_residual(Word([3, 1], 3), 1, 3) == 0
        assert tail_residual(Word([3, 3], 3), 1, 3) == 2
        with pytest.raises(ValueError):
            tail_residual(Word([1], 2), 1, 1)


class TestAgainstOracle:
    def test_star_counts_random(self, rng):
        for _ in range(300):
            m = int(rng.integers(2, 5))
            n = int(rng.integers(0, 25))
            w = random_word(rng, m, n)
            k = tuple(int(v) for v in rng.integers(0, 4, m - 1))
            ns, r, feas = seq_collect_oracle(w.letters, m, k)
            sc = star_counts(w, k)
            assert sc.feasible == feas
            if feas:
                assert sc.nstar == tuple(ns)
                assert sc.r_stat == r
            else:
                # entries before the failing stage must still agree
                assert sc.nstar[: len(ns)] == tuple(ns)

    def test_feasible_means_in_range(self, rng):
        for _ in range(200):
            m = int(rng.integers(2, 5))
            w = random_word(rng, m, int(rng.integers(0, 30)))
            k = tuple(int(v) for v in rng.integers(0, 5, m - 1))
            sc = star_counts(w, k)
            if sc.feasible:
                counts = count_letters(w)
                for i in range(1, m):
                    assert sc.nstar[i - 1] + k[i - 1] <= counts[i - 1]


class TestInvariants:
    @given(words)
    @settings(max_examples=150, deadline=None)
    def test_counts_sum_and_window(self, mw):
        m, letters = mw
        w = Word(letters, m)
        counts = count_letters(w)
        assert sum(counts) == len(w)
        for r in range(1, m + 1):
            assert window_count(w, r, 0, len(w)) == counts[r - 1]

    @given(words)
    @settings(max_examples=150, deadline=None)
    def test_occurrence_inverts_counting(self, mw):
        m, letters = mw
        w = Word(letters, m)
        counts = count_letters(w)
        for r in range(1, m + 1):
            for j in range(1, counts[r - 1] + 1):
                p = occurrence_position(w, r, j)
                assert window_count(w, r, 0, p) == j
            assert occurrence_position(w, r, counts[r - 1] + 1) is None

    @given(words)
    @settings(max_examples=100, deadline=None)
    def test_tail_residual_decomposition(self, mw):
        m, letters = mw
        if m < 2:
            return
        w = Word(letters, m)
        counts = count_letters(w)
        st_ = WordStats(w)
        for i in range(1, m + 1):
            for r in range(1, m + 1):
                if i == r:
                    continue
                gaps = gap_counts(w, i, r)
                assert gaps.size == counts[i - 1]
                assert int(gaps.sum()) + tail_residual(w, i, r) == counts[r - 1]
        assert st_.n == len(w)

    def test_tail_residual_vanishes_in_mean_square(self):
        # mean of S^2/n below 0.01 at n=1e4 over 1e3 uniform draws
        n, m, trials = 10**4, 3, 10**3
        law = LetterLaw.uniform(m)
        rng = stream(7, 0)
        acc = 0.0
        for _ in range(trials):
            w = sample_word(law, n, rng)
            s = tail_residual(w, 1, m)
            acc += s * s / n
        assert acc / trials < 0.01


def test_gap_counts_match_windows(rng):
    for _ in range(50):
        m = int(rng.integers(2, 5))
        w = random_word(rng, m, int(rng.integers(1, 40)))
        st_ = WordStats(w)
        for i in range(1, m + 1):
            for r in range(1, m + 1):
                if i == r:
                    continue
                gaps = gap_counts(w, i, r)
                occ = [0] + [st_.occurrence(i, j) for j in range(1, st_.counts[i - 1] + 1)]
                expect = [st_.window(r, occ[j - 1], occ[j]) for j in range(1, len(occ))]
                assert gaps.tolist() == expect
