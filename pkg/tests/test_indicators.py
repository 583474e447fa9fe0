"""Indicator values, dimensions, oracles and invariants."""

import math
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scindex import (
    REGISTRY,
    CitationVector,
    EmptyPortfolioError,
    NegativeCountError,
    compute_all,
    consistency,
    energy,
    entropy_term,
    euclidean_index,
    exergy,
    g_index,
    h_index,
    mean_impact,
    paper_count,
    registry_names,
    total_citations,
    z_index,
)
from scindex.dimension import PAPERS, PAPERS_CUBED, PAPERS_SQUARED
from scindex.indicators import EUCLIDEAN_DIM

# Vectors kept within the published-data ranges; the rounding analysis
# for the S = E - X comparison needs P*c^2 well under 2^53.
vectors = st.lists(st.integers(0, 10_000), min_size=1, max_size=60)
small_vectors = st.lists(st.integers(0, 100), min_size=1, max_size=30)


def h_brute(counts):
    """Counting definition: largest k with at least k papers cited >= k times."""
    return max(
        (k for k in range(len(counts) + 1) if sum(1 for c in counts if c >= k) >= k),
        default=0,
    )


def g_brute(counts):
    """Definitional scan: largest k whose top-k papers sum to >= k^2."""
    ranked = sorted(counts, reverse=True)
    best = 0
    for k in range(1, len(ranked) + 1):
        if sum(ranked[:k]) >= k * k:
            best = k
    return best


class TestCitationVector:
    def test_sorts_non_increasing(self):
        assert CitationVector([1, 4, 2]).counts == (4, 2, 1)

    def test_permutations_are_equal(self):
        assert CitationVector([1, 4, 2]) == CitationVector([4, 2, 1])

    def test_negative_count_rejected(self):
        with pytest.raises(NegativeCountError):
            CitationVector([4, -2, 1])

    def test_non_integer_rejected(self):
        with pytest.raises(TypeError):
            CitationVector([4, 2.5, 1])

    def test_empty_constructible_but_rejected_by_indicators(self):
        empty = CitationVector([])
        assert len(empty) == 0
        with pytest.raises(EmptyPortfolioError):
            paper_count(empty)
        with pytest.raises(EmptyPortfolioError):
            compute_all(empty)


class TestIndicatorValues:
    def test_paper_count(self):
        assert paper_count([4, 2, 1]).magnitude == 3.0
        assert paper_count([0, 0, 0]).magnitude == 3.0
        assert paper_count([4, 2, 1]).dim == PAPERS

    def test_total_citations(self):
        assert total_citations([4, 2, 1]).magnitude == 7.0
        assert total_citations([0, 0, 0]).magnitude == 0.0
        assert total_citations([4, 2, 1]).dim == PAPERS_SQUARED

    def test_mean_impact(self):
        assert mean_impact([4, 2, 1]).magnitude == pytest.approx(7 / 3)
        assert mean_impact([3, 3, 3]).magnitude == 3.0
        assert mean_impact([4, 2, 1]).dim == PAPERS

    def test_h_index(self):
        assert h_index([10, 5, 3, 2, 1]).magnitude == 3.0
        assert h_index([0, 0]).magnitude == 0.0
        assert h_index([3, 3, 3]).magnitude == 3.0
        assert h_index([4, 2, 1]).magnitude == 2.0

    def test_g_index(self):
        # cumulative sums 10,15,18,20,21 against 1,4,9,16,25
        assert g_index([10, 5, 3, 2, 1]).magnitude == 4.0
        assert g_index([0, 0]).magnitude == 0.0
        assert g_index([100]).magnitude == 1.0  # capped at P

    def test_energy(self):
        assert energy([4, 2, 1]).magnitude == 21.0
        assert energy([3, 3, 3]).magnitude == 27.0
        assert energy([0, 0, 0]).magnitude == 0.0
        assert energy([4, 2, 1]).dim == PAPERS_CUBED

    def test_exergy(self):
        assert exergy([4, 2, 1]).magnitude == pytest.approx(49 / 3)
        assert exergy([3, 3, 3]).magnitude == 27.0
        assert exergy([0, 0, 0]).magnitude == 0.0

    def test_entropy_term(self):
        assert entropy_term([4, 2, 1]).magnitude == pytest.approx(14 / 3)
        assert entropy_term([3, 3, 3]).magnitude == 0.0
        assert entropy_term([5]).magnitude == 0.0

    def test_consistency(self):
        assert consistency([4, 2, 1]).magnitude == pytest.approx(7 / 9)
        assert consistency([3, 3, 3]).magnitude == 1.0
        assert consistency([0, 0, 0]).magnitude == 1.0  # zero-vector convention

    def test_z_index(self):
        assert z_index([4, 2, 1]).magnitude == pytest.approx(7 / 3, rel=1e-12)
        assert z_index([3, 3, 3]).magnitude == pytest.approx(3.0, rel=1e-12)
        assert z_index([5]).magnitude == pytest.approx(25 ** (1 / 3), rel=1e-12)

    def test_euclidean_index(self):
        assert euclidean_index([4, 2, 1]).magnitude == pytest.approx(math.sqrt(21))
        assert euclidean_index([3, 3, 3]).magnitude == pytest.approx(math.sqrt(27))
        assert euclidean_index([4, 2, 1]).dim == EUCLIDEAN_DIM
        assert str(euclidean_index([4, 2, 1]).dim) == "[P^3/2]"


class TestComputeAll:
    def test_contains_exactly_the_registry(self):
        report = compute_all([4, 2, 1])
        assert tuple(report) == registry_names()
        assert tuple(report) == ("P", "C", "i", "h", "g", "X", "E", "S", "eta", "z", "i_E")

    def test_small_portfolio(self):
        report = {k: q.magnitude for k, q in compute_all([4, 2, 1]).items()}
        assert report["P"] == 3
        assert report["C"] == 7
        assert report["i"] == pytest.approx(7 / 3)
        assert report["h"] == 2
        assert report["g"] == 2
        assert report["E"] == 21
        assert report["X"] == pytest.approx(49 / 3)
        assert report["S"] == pytest.approx(14 / 3)
        assert report["eta"] == pytest.approx(7 / 9)
        assert report["z"] == pytest.approx(7 / 3, rel=1e-12)
        assert report["i_E"] == pytest.approx(math.sqrt(21))

    def test_all_zero_portfolio(self):
        report = {k: q.magnitude for k, q in compute_all([0, 0, 0]).items()}
        assert report["P"] == 3
        assert report["eta"] == 1.0
        for name in ("C", "i", "h", "g", "X", "E", "S", "z", "i_E"):
            assert report[name] == 0.0

    def test_single_paper(self):
        report = {k: q.magnitude for k, q in compute_all([5]).items()}
        assert report["P"] == 1
        assert report["C"] == 5
        assert report["i"] == 5
        assert report["h"] == 1
        assert report["g"] == 1
        assert report["E"] == 25
        assert report["X"] == 25
        assert report["S"] == 0
        assert report["eta"] == 1
        assert report["z"] == pytest.approx(25 ** (1 / 3), rel=1e-12)
        assert report["i_E"] == 5

    @given(v=vectors)
    def test_dimension_audit(self, v):
        report = compute_all(v)
        for desc in REGISTRY:
            assert report[desc.name].dim == desc.declared_dim


class TestOracles:
    def test_exhaustive_small_multisets(self):
        # Multisets suffice: both sides sort before scanning, so every
        # permutation of a vector reduces to the same case.
        for p in range(1, 6):
            for combo in combinations_with_replacement(range(7), p):
                assert h_index(combo).magnitude == h_brute(combo), combo
                assert g_index(combo).magnitude == g_brute(combo), combo

    @given(v=st.lists(st.integers(0, 10_000), min_size=1, max_size=200))
    @settings(max_examples=300)
    def test_random_vectors_match_brute_force(self, v):
        assert h_index(v).magnitude == h_brute(v)
        assert g_index(v).magnitude == g_brute(v)


class TestInvariants:
    @given(v=vectors, seed=st.randoms(use_true_random=False))
    def test_permutation_invariance(self, v, seed):
        shuffled = list(v)
        seed.shuffle(shuffled)
        original = compute_all(v)
        permuted = compute_all(shuffled)
        assert {k: q.magnitude for k, q in original.items()} == {
            k: q.magnitude for k, q in permuted.items()
        }

    @given(v=vectors)
    def test_consistency_range_and_equality_case(self, v):
        eta = consistency(v).magnitude
        assert 0 < eta <= 1
        uniform = len(set(v)) == 1
        assert (eta == 1.0) == uniform

    @given(v=vectors)
    def test_entropy_sign_and_energy_split(self, v):
        s = entropy_term(v).magnitude
        e = energy(v).magnitude
        x = exergy(v).magnitude
        assert s >= 0
        assert x <= e or x == pytest.approx(e, rel=1e-12)
        assert (s == 0.0) == (consistency(v).magnitude == 1.0)

    @given(v=small_vectors)
    def test_entropy_matches_energy_minus_exergy(self, v):
        s = entropy_term(v).magnitude
        split = energy(v).magnitude - exergy(v).magnitude
        assert s == pytest.approx(split, rel=1e-9, abs=1e-9)

    @given(v=vectors)
    def test_z_cubed_times_energy_is_exergy_squared(self, v):
        z = z_index(v).magnitude
        e = energy(v).magnitude
        x = exergy(v).magnitude
        assert z**3 * e == pytest.approx(x**2, rel=1e-9, abs=1e-9)

    @given(v=vectors)
    def test_indicator_ladder_identities(self, v):
        p = paper_count(v).magnitude
        c = total_citations(v).magnitude
        i = mean_impact(v).magnitude
        x = exergy(v).magnitude
        assert c == pytest.approx(i * p, rel=1e-12, abs=1e-12)
        assert x == pytest.approx(i * c, rel=1e-12, abs=1e-12)

    @given(v=vectors)
    def test_h_and_g_bounds(self, v):
        p = len(v)
        h = h_index(v).magnitude
        g = g_index(v).magnitude
        assert h <= min(p, max(v))
        assert g >= h
        assert g <= p
