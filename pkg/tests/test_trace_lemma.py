"""Tests for the trace identity on symmetric triples."""

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from helixlab.geometry.trace_lemma import (
    SymmetricTriple,
    characteristic,
    commuting_triple,
    kernel_split,
    lemma_la_decision,
    property_run,
    random_triple,
    rationality_residual,
    substituted_trace,
    trace_rational,
)
from helixlab.utils.exceptions import ContractViolation, InsufficientGridError, PoleError

seeds = st.integers(min_value=0, max_value=2**32 - 1)
dimensions = st.integers(min_value=1, max_value=6)


class TestSymmetricTriple:
    """Test the triple contract."""

    def test_h_is_derived(self):
        """Test H = D² + N."""
        triple = SymmetricTriple(np.diag([1.0, 2.0]), np.diag([0.5, 0.0]))
        np.testing.assert_allclose(triple.H, np.diag([1.5, 4.0]))

    def test_rejects_indefinite_n(self):
        """Test that N must be positive semi-definite."""
        with pytest.raises(ContractViolation, match="semi-definite"):
            SymmetricTriple(np.zeros((2, 2)), np.diag([1.0, -1.0]))

    def test_rejects_shape_mismatch(self):
        """Test that D and N must have the same shape."""
        with pytest.raises(ContractViolation):
            SymmetricTriple(np.zeros((2, 2)), np.zeros((3, 3)))

    def test_rejects_large_dimension(self):
        """Test the dimension cap."""
        with pytest.raises(ContractViolation):
            SymmetricTriple.zero(13)


class TestClosedForms:
    """Test φ against hand-computed values."""

    @pytest.mark.parametrize("s", [0.1, 0.25, 0.4, -0.3])
    def test_unit_d(self, s):
        """Test φ(s) = 1/(1 - s) for D = (1), N = 0."""
        triple = SymmetricTriple(np.eye(1), np.zeros((1, 1)))
        assert trace_rational(triple, s) == pytest.approx(1.0 / (1.0 - s), rel=1e-12)

    @pytest.mark.parametrize("k", [1, 4])
    @pytest.mark.parametrize("s", [0.1, 0.25, 0.4])
    def test_identity_n(self, k, s):
        """Test φ(s) = -ks/(1 + s²) for D = 0, N = 𝟏."""
        triple = SymmetricTriple(np.zeros((k, k)), np.eye(k))
        assert trace_rational(triple, s) == pytest.approx(-k * s / (1.0 + s * s), rel=1e-12)

    def test_pole(self):
        """Test that P(1) = 0 for D = (1), N = 0 raises PoleError."""
        triple = SymmetricTriple(np.eye(1), np.zeros((1, 1)))
        with pytest.raises(PoleError) as info:
            trace_rational(triple, 1.0)
        assert info.value.s == 1.0

    def test_substitution_undefined_at_zero(self):
        """Test that ψ needs t ≠ 0."""
        with pytest.raises(ContractViolation):
            substituted_trace(SymmetricTriple.zero(2), 0.0)


class TestDecision:
    """Test the grid decision φ ≡ 0 ⟺ D = N = 0."""

    def test_zero_triple(self):
        """Test that the zero triple has φ ≡ 0."""
        decision = lemma_la_decision(SymmetricTriple.zero(3))
        assert decision.phi_identically_zero
        assert decision.triple_is_zero
        assert decision.consistent
        assert decision.points_used == 14

    def test_nonzero_triple(self):
        """Test a nonzero triple."""
        decision = lemma_la_decision(SymmetricTriple(np.diag([0.5, -1.0, 2.0]), np.diag([1.0, 0.0, 0.5])))
        assert not decision.phi_identically_zero
        assert decision.consistent

    def test_insufficient_grid(self):
        """Test that fewer than 2k + 1 points are refused."""
        with pytest.raises(InsufficientGridError):
            lemma_la_decision(SymmetricTriple.zero(3), [0.1, 0.2, 0.3])

    @settings(max_examples=50, deadline=None)
    @given(seed=seeds, k=dimensions)
    def test_random_triples_never_vanish(self, seed, k):
        """Test that a random nonzero triple is never decided φ ≡ 0."""
        triple = random_triple(np.random.default_rng(seed), k)
        assume(triple.norm() > 1e-6)
        decision = lemma_la_decision(triple)
        assert not decision.phi_identically_zero
        assert decision.consistent


class TestSubstitution:
    """Test t·ψ(t) = φ(1/t)."""

    @pytest.mark.parametrize("t", [1.5, 2.5, 4.0])
    def test_mixed_triple(self, t):
        """Test the substitution on a fixed pole-free triple."""
        triple = SymmetricTriple(np.diag([0.5, -1.0, 2.0]), np.diag([1.0, 0.0, 0.5]))
        assert t * substituted_trace(triple, t) == pytest.approx(trace_rational(triple, 1.0 / t), rel=1e-10)

    @settings(max_examples=50, deadline=None)
    @given(seed=seeds, k=dimensions, t=st.floats(min_value=1.0, max_value=5.0))
    def test_random_substitution(self, seed, k, t):
        """Test the substitution on random triples away from poles."""
        triple = random_triple(np.random.default_rng(seed), k)
        assume(abs(characteristic(triple, 1.0 / t)) > 1e-2)
        phi = trace_rational(triple, 1.0 / t)
        assert abs(t * substituted_trace(triple, t) - phi) <= 1e-6 * max(1.0, abs(phi))


class TestKernel:
    """Test ker H ⊆ ker D ∩ ker N and the block structure."""

    @pytest.mark.parametrize("k,kernel_dim", [(3, 1), (5, 2), (6, 0)])
    def test_commuting_triple(self, k, kernel_dim, rng):
        """Test the kernel dimension and inclusion on a commuting triple."""
        split = kernel_split(commuting_triple(rng, k, kernel_dim))
        assert split.ker_basis.shape[1] == kernel_dim
        assert split.inclusion_residual < 1e-9
        assert split.block_residual < 1e-9

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds, k=dimensions)
    def test_inclusion_on_random_triples(self, seed, k):
        """Test the inclusion for random triples whose N has deficient rank."""
        triple = random_triple(np.random.default_rng(seed), k)
        assert kernel_split(triple).inclusion_residual < 1e-6


class TestRationality:
    """Test that φ is a rational function of bounded degree."""

    @pytest.mark.parametrize("k", [1, 2, 4])
    def test_interpolated_numerator(self, k, rng):
        """Test the interpolant against φ on held-out points."""
        triple = random_triple(rng, k, scale=0.5)
        assert rationality_residual(triple, np.linspace(-0.45, 0.45, 7)) < 1e-6


class TestPropertyRun:
    """Test the randomized property run."""

    def test_no_false_positives(self, rng):
        """Test a short run."""
        run = property_run(rng, trials=40, max_k=4)
        assert run.trials == 40
        assert run.false_positives == 0
        assert run.max_inclusion_residual < 1e-6
        assert run.max_substitution_residual < 1e-6

    def test_seeded_runs_match(self):
        """Test that the run is a function of the seed."""
        first = property_run(np.random.default_rng(11), trials=20, max_k=3)
        second = property_run(np.random.default_rng(11), trials=20, max_k=3)
        assert first == second
