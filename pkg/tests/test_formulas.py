"""Closed-form threshold, reference bounds, and count formulas."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pathforce.formulas import (
    PhiParams,
    phi,
    phi_conjecture_bound,
    psi_lower_bound,
    psi_tree_counts,
    theta_chain_counts,
    theta_upper_bound,
)


class TestPhi:
    @pytest.mark.parametrize("n,d,k,want", [
        (12, 5, 5, 5),
        (13, 4, 4, 4),
        (16, 7, 6, 5),
        (21, 7, 6, 6),
        (5, 3, 2, 1),
        (40, 4, 4, 11),
        (7, 3, 3, 2),
        (100, 9, 9, 41),
    ])
    def test_frozen_values(self, n, d, k, want):
        assert phi(PhiParams(n, d, k)) == want

    def test_domain_errors(self):
        with pytest.raises(ValueError, match=r"phi undefined: d=2 < k=3"):
            PhiParams(10, 2, 3)
        with pytest.raises(ValueError, match=r"n=4 <= d=4"):
            PhiParams(4, 4, 2)
        with pytest.raises(ValueError, match="k=0"):
            PhiParams(4, 2, 0)

    def test_single_edge_target_needs_one_vertex(self):
        for n, d in [(2, 1), (10, 3), (50, 7)]:
            assert phi(PhiParams(n, d, 1)) == 1

    def test_two_edge_target_needs_one_vertex(self):
        for n, d in [(10, 2), (30, 5), (9, 8)]:
            assert phi(PhiParams(n, d, 2)) == 1

    def test_odd_targets_match_reference_bound(self):
        for k in range(1, 16, 2):
            for d in range(max(k, 1), 26):
                for n in range(d + 1, 500, 7):
                    assert phi(PhiParams(n, d, k)) == (k - 1) // 2 * (n // (d + 1)) + 1

    def test_odd_targets_equal_conjecture(self):
        for k in (3, 5, 7, 9):
            for d in (k, k + 2, 2 * k):
                for n in range(d + 1, 200, 3):
                    p = PhiParams(n, d, k)
                    assert phi(p) == phi_conjecture_bound(p)

    def test_even_targets_at_least_six_within_conjecture(self):
        for k in (6, 8, 10, 12):
            for d in (k, k + 1, k + 5):
                for n in range(d + 1, 300, 2):
                    p = PhiParams(n, d, k)
                    assert phi_conjecture_bound(p) - 1 <= phi(p) <= phi_conjecture_bound(p)

    def test_four_target_refutes_conjecture(self):
        p = PhiParams(40, 4, 4)
        assert phi_conjecture_bound(p) == 10
        assert phi(p) == 11

    def test_conjecture_bound_frozen(self):
        assert phi_conjecture_bound(PhiParams(6, 5, 5)) == 3

    @given(st.integers(1, 12), st.data())
    @settings(max_examples=300, deadline=None)
    def test_monotone_in_vertex_count(self, k, data):
        d = data.draw(st.integers(k, 20))
        n = data.draw(st.integers(d + 1, 400))
        assert phi(PhiParams(n + 1, d, k)) >= phi(PhiParams(n, d, k)) >= 1


class TestThetaChainCounts:
    @pytest.mark.parametrize("d,k,alpha,beta,want", [
        (4, 4, 1, 1, (9, 5)),
        (6, 4, 2, 2, (31, 12)),
        (6, 5, 2, 1, (19, 7)),
    ])
    def test_frozen_values(self, d, k, alpha, beta, want):
        assert theta_chain_counts(d, k, alpha, beta) == want

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            theta_chain_counts(9, 5, 2, 3)
        with pytest.raises(ValueError):
            theta_chain_counts(4, 5, 2, 1)
        with pytest.raises(ValueError):
            # odd targets need alpha >= 2
            theta_chain_counts(4, 5, 1, 1)
        with pytest.raises(ValueError):
            theta_chain_counts(4, 4, 1, 0)

    def test_count_beats_degree_average(self):
        # the high-degree count must exceed floor(k/2)*(n-1)/d
        for k in range(2, 11):
            for alpha in range(1, 5):
                if k % 2 and alpha < 2:
                    continue
                d = (1 + alpha) * (k // 2)
                for beta in range(1, 5):
                    n, high = theta_chain_counts(d, k, alpha, beta)
                    assert high * d > (k // 2) * (n - 1)


class TestPsiTreeCounts:
    @pytest.mark.parametrize("d,k,alpha,beta,want", [
        (3, 7, 2, 3, (22, 10)),
        (5, 11, 2, 5, (56, 26)),
    ])
    def test_frozen_values(self, d, k, alpha, beta, want):
        assert psi_tree_counts(d, k, alpha, beta) == want

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            psi_tree_counts(3, 7, 2, 2)  # beta below d
        with pytest.raises(ValueError):
            psi_tree_counts(3, 5, 2, 3)  # target too short
        with pytest.raises(ValueError):
            psi_tree_counts(4, 7, 2, 4)  # d inconsistent with alpha

    def test_count_beats_classical_witness(self):
        for alpha in (2, 3, 4):
            for k in (7, 9, 11, 15):
                d = 1 + alpha * ((k - 3) // 4)
                for beta in (d, d + 1, 2 * d):
                    n, high = psi_tree_counts(d, k, alpha, beta)
                    assert high > psi_lower_bound(n, d, k) - 1


class TestReferenceBounds:
    def test_psi_lower_frozen(self):
        assert psi_lower_bound(22, 3, 7) == 9

    def test_theta_upper_frozen(self):
        got = theta_upper_bound(31, 6, 4)
        assert got == Fraction(35, 2)
        assert isinstance(got, Fraction)

    def test_bounds_allow_long_targets(self):
        # these bounds live in the regime where the target exceeds the degree
        assert psi_lower_bound(100, 3, 11) == 2 * 33 + 2
        assert theta_upper_bound(13, 4, 5) == Fraction(8 * 12, 8)

    def test_bound_domain_errors(self):
        with pytest.raises(ValueError):
            psi_lower_bound(3, 3, 7)
        with pytest.raises(ValueError):
            psi_lower_bound(22, 3, 2)
        with pytest.raises(ValueError):
            theta_upper_bound(10, 0, 4)
