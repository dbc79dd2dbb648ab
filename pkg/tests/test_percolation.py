import itertools

import numpy as np
import pytest

from lciword.exact import lci_dp, weak_lis
from lciword.percolation import (
    WeightLattice,
    indicator_lattice,
    lci_via_percolation,
    load_lattice,
    lpp_t2,
    lpp_t3,
    lpp_tp,
    sample_exponential_lattice,
    save_lattice,
)
from lciword.rng import stream
from lciword.words import Word

from conftest import random_word


def enum_unit_paths(w):
    """Oracle: enumerate every monotone NE path of a small 2D array."""
    n1, n2 = w.shape
    best = -np.inf
    steps = [(1, 0)] * (n1 - 1) + [(0, 1)] * (n2 - 1)
    for perm in set(itertools.permutations(steps)):
        i = j = 0
        tot = w[0, 0]
        for di, dj in perm:
            i, j = i + di, j + dj
            tot += w[i, j]
        best = max(best, tot)
    return float(best)


class TestUnit2:
    def test_examples(self):
        assert lpp_t2(np.zeros((3, 4))) == 0.0
        assert lpp_t2(np.array([[5.0]])) == 5.0
        w = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert lpp_t2(w) == 8.0
        assert enum_unit_paths(w) == 8.0

    def test_empty(self):
        assert lpp_t2(np.zeros((0, 3))) == 0.0

    def test_against_enumeration(self, rng):
        for _ in range(40):
            w = rng.exponential(1.0, size=(int(rng.integers(1, 5)), int(rng.integers(1, 5))))
            assert lpp_t2(w) == pytest.approx(enum_unit_paths(w), rel=1e-12)

    def test_monotone_in_weights(self, rng):
        for _ in range(30):
            w = rng.exponential(1.0, size=(5, 6))
            before = lpp_t2(w)
            w2 = w.copy()
            w2[int(rng.integers(0, 5)), int(rng.integers(0, 6))] += rng.exponential(1.0)
            assert lpp_t2(w2) >= before

    def test_superadditive_split(self, rng):
        # concatenation at an interior corner, the corner counted once
        for _ in range(30):
            n1, n2 = int(rng.integers(2, 8)), int(rng.integers(2, 8))
            w = rng.exponential(1.0, size=(n1, n2))
            a, b = int(rng.integers(0, n1)), int(rng.integers(0, n2))
            lhs = lpp_t2(w)
            rhs = lpp_t2(w[: a + 1, : b + 1]) + lpp_t2(w[a:, b:]) - w[a, b]
            assert lhs >= rhs - 1e-12


class TestJumpSemantics:
    def test_lci_equivalence_examples(self):
        x = Word([1, 2, 1, 3], 3)
        y = Word([2, 1, 1, 3], 3)
        assert lci_via_percolation(x, y) == lci_dp(x, y).length
        assert lpp_t3(WeightLattice(2, np.zeros((4, 4, 2)))) == 0.0
        xs = Word([1] * 5, 1)
        assert lci_via_percolation(xs, xs) == 5

    def test_lci_equivalence_random(self, rng):
        for _ in range(120):
            m = int(rng.integers(1, 5))
            n = int(rng.integers(1, 60))
            x, y = random_word(rng, m, n), random_word(rng, m, n)
            assert lci_via_percolation(x, y) == lci_dp(x, y).length

    def test_jump1_equals_unit2_on_nonneg(self, rng):
        for _ in range(40):
            w = rng.exponential(1.0, size=(int(rng.integers(1, 20)), int(rng.integers(1, 6))))
            w[0] = 0.0
            assert lpp_tp(WeightLattice(1, w), 1) == pytest.approx(lpp_t2(w), rel=1e-12)

    def test_jump2_matches_t3(self, rng):
        for _ in range(20):
            w = rng.exponential(1.0, size=(5, 6, 3))
            w[0, 0] = 0.0
            lat = WeightLattice(2, w)
            assert lpp_tp(lat, 2) == lpp_t3(lat)

    def test_triple_word_gives_lis(self, rng):
        for _ in range(40):
            m = int(rng.integers(1, 4))
            x = random_word(rng, m, int(rng.integers(1, 15)))
            t = lpp_tp(indicator_lattice(x, x, x), 3)
            assert int(round(t)) == weak_lis(x)

    def test_monotone_in_weights(self, rng):
        w = rng.exponential(1.0, size=(5, 5, 3))
        w[0, 0] = 0.0
        before = lpp_t3(WeightLattice(2, w))
        w2 = w.copy()
        w2[3, 2, 1] += 1.0
        assert lpp_t3(WeightLattice(2, w2)) >= before

    def test_p_out_of_range(self):
        with pytest.raises(ValueError):
            lpp_tp(WeightLattice(4, np.zeros((2, 2, 2, 2, 2))))
        with pytest.raises(ValueError):
            lpp_tp(WeightLattice(1, np.zeros((3, 2))), 2)


class TestLattice:
    def test_validation(self):
        with pytest.raises(ValueError):
            WeightLattice(2, np.full((2, 2, 2), -1.0))
        with pytest.raises(ValueError):
            WeightLattice(2, np.full((2, 2, 2), np.nan))
        with pytest.raises(ValueError):
            WeightLattice(1, np.zeros((2, 2, 2)))

    def test_dims(self):
        lat = WeightLattice(2, np.zeros((4, 6, 3)))
        assert lat.dims == (3, 5, 3)

    def test_exponential_sampler(self):
        lat = sample_exponential_lattice((183, 183, 3), rate=2.0, seed=11)
        w = lat.weights
        assert np.all(w[0, 0] == 0.0)
        vals = w[1:, 1:, :].ravel()
        assert vals.size >= 10**5
        se = vals.std() / np.sqrt(vals.size)
        assert abs(vals.mean() - 0.5) <= 3 * se
        again = sample_exponential_lattice((183, 183, 3), rate=2.0, seed=11)
        assert np.array_equal(w, again.weights)
        empty = sample_exponential_lattice((0, 0, 3), rate=1.0, seed=1)
        assert lpp_t3(empty) == 0.0

    def test_csv_roundtrip(self, tmp_path, rng):
        lat = sample_exponential_lattice((3, 4, 2), rate=1.0, seed=5)
        path = tmp_path / "lat.csv"
        save_lattice(lat, path)
        back = load_lattice(path)
        assert back.p == lat.p
        assert back.dims == lat.dims
        assert np.array_equal(back.weights, lat.weights)
