"""Tests for normal fields, offset formulae and the minimal-offsets certificate."""

import numpy as np
import pytest

from helixlab.geometry.offsets import (
    NormalField,
    circle_inward,
    circle_rotating,
    default_t_grid,
    foliation_examples,
    foliation_flatness_check,
    minimal_offsets_certificate,
    offset_corpus,
    offset_data,
    offset_formula_records,
    offset_immersion,
    offset_metric,
    offset_shape_trace,
    offset_shape_trace_oracle,
    sphere_normal,
    strip_rotating,
    tilted_plane_normal,
    valid_offset_range,
)
from helixlab.geometry.trace_lemma import SymmetricTriple, trace_rational
from helixlab.immersions.catalog import tilted_plane
from helixlab.immersions.fields import constant_vector
from helixlab.utils.exceptions import ContractViolation, ImmersionDegeneratesAtT


class TestNormalField:
    """Test normal field validation."""

    def test_catalog_fields_validate(self, rng):
        """Test every corpus family."""
        for field in offset_corpus(rng, 6):
            field.validate(rng)

    def test_tangent_field_is_refused(self):
        """Test that a field with a tangential part fails validation."""
        field = NormalField(base=tilted_plane(0.7), eta=constant_vector([0.0, 0.0, 1.0], 2))
        with pytest.raises(ContractViolation, match="not normal"):
            field.validate()

    def test_field_must_live_along_base(self):
        """Test the dimension contract."""
        with pytest.raises(ContractViolation):
            NormalField(base=tilted_plane(0.7), eta=constant_vector([0.0, 0.0, 0.0, 1.0], 2))

    def test_corpus_is_seeded(self):
        """Test that equal seeds give equal corpora."""
        first = [f.name for f in offset_corpus(np.random.default_rng(3), 12)]
        second = [f.name for f in offset_corpus(np.random.default_rng(3), 12)]
        assert first == second
        assert len(first) == 12


class TestOffsetData:
    """Test the eigen-data behind the offset formulae."""

    def test_sphere_principal_curvatures(self, rng):
        """Test A_η̂ = -1/r and a parallel normal on the sphere."""
        field = sphere_normal(2.0, True)
        u = field.base.sample_points(rng, 1)[0]
        data = offset_data(field, u)
        np.testing.assert_allclose(data.lambdas, [-0.5, -0.5], atol=1e-12)
        np.testing.assert_allclose(data.Nm, 0.0, atol=1e-12)

    def test_sphere_offset_metric(self):
        """Test G = (1 + t/r)² on the unit sphere."""
        metric = offset_metric(sphere_normal(1.0, True), [1.0, 0.3], 0.5)
        np.testing.assert_allclose(metric, 2.25 * np.eye(2), atol=1e-12)

    def test_sphere_offset_trace(self):
        """Test Tr(A_η̂) = -2/(1 + t) against the offset sphere of radius 1 + t."""
        field = sphere_normal(1.0, True)
        u = [1.0, 0.3]
        assert offset_shape_trace(field, u, 0.5) == pytest.approx(-2.0 / 1.5, abs=1e-12)
        assert offset_shape_trace_oracle(field, u, 0.5) == pytest.approx(-2.0 / 1.5, abs=1e-10)

    @pytest.mark.parametrize("field", [sphere_normal(1.0, True), strip_rotating(1.5)], ids=lambda f: f.name)
    def test_trace_ignores_eigenbasis_choice(self, field, rng):
        """Test that rotating inside a repeated principal curvature leaves the trace unchanged."""
        u = field.base.sample_points(rng, 1)[0]
        data = offset_data(field, u)
        np.testing.assert_allclose(data.lambdas[0], data.lambdas[1], atol=1e-12)
        rotation, _ = np.linalg.qr(rng.normal(size=(2, 2)))
        rotated = SymmetricTriple(rotation.T @ data.Dm @ rotation, rotation.T @ data.Nm @ rotation)
        for t in (-0.3, 0.4):
            s = data.scaled(t)
            expected = offset_shape_trace_oracle(field, u, t)
            assert trace_rational(rotated, s) == pytest.approx(trace_rational(data.triple(), s), abs=1e-12)
            assert trace_rational(rotated, s) == pytest.approx(expected, rel=1e-6, abs=1e-6)

    def test_rotating_field_has_normal_connection(self):
        """Test N ≠ 0 for a normal field that turns along a circle."""
        data = offset_data(circle_rotating(1.0, 1.0), [0.4])
        assert float(np.max(np.abs(data.Nm))) > 0.1


class TestOffsetFormulae:
    """Test formula against brute force on the offset charts."""

    @pytest.mark.parametrize(
        "field",
        [sphere_normal(1.0, True), sphere_normal(1.5, False), circle_rotating(1.0, 1.0), strip_rotating(1.5)],
        ids=lambda f: f.name,
    )
    @pytest.mark.parametrize("t", [-0.4, 0.3])
    def test_records_hold(self, field, t, rng):
        """Test metric, frames, trace and N ⪰ 0 at one point."""
        u = field.base.sample_points(rng, 1)[0]
        for comparison in offset_formula_records(field, u, t):
            assert comparison.holds(1e-6, relative=True), comparison

    def test_focal_point_raises(self):
        """Test that the inward circle offset degenerates at t = r."""
        with pytest.raises(ImmersionDegeneratesAtT) as info:
            offset_immersion(circle_inward(1.0), 1.0)
        assert info.value.t == 1.0

    def test_valid_range_avoids_focal_points(self):
        """Test the safety factor on the unit sphere."""
        lo, hi = valid_offset_range(sphere_normal(1.0, True))
        assert lo == pytest.approx(-0.9)
        assert hi == 1.0

    def test_default_grid(self):
        """Test the grid size and ordering."""
        grid = default_t_grid(tilted_plane_normal(0.5), count=7)
        assert grid.shape == (7,)
        assert np.all(np.diff(grid) > 0.0)


class TestCertificate:
    """Test the all-offsets-minimal certificate."""

    def test_parallel_planes(self, rng):
        """Test a constant normal on a plane: offsets minimal and η parallel."""
        certificate = minimal_offsets_certificate(tilted_plane_normal(0.6), np.linspace(-1.0, 1.0, 7), 5, rng=rng)
        assert certificate.offsets_minimal
        assert certificate.eta_constant
        assert certificate.implication_holds
        assert certificate.bridge_consistent

    def test_sphere(self, rng):
        """Test a sphere, whose offsets are not minimal."""
        certificate = minimal_offsets_certificate(sphere_normal(1.0, True), np.linspace(-0.5, 0.5, 7), 5, rng=rng)
        assert not certificate.offsets_minimal
        assert not certificate.eta_constant
        assert certificate.implication_holds
        assert certificate.bridge_consistent

    def test_short_grid_is_refused(self):
        """Test that at least five t values are needed."""
        with pytest.raises(ContractViolation):
            minimal_offsets_certificate(tilted_plane_normal(), [0.1, 0.2, 0.3])


class TestFoliation:
    """Test minimal foliations by offsets."""

    def test_examples(self, rng):
        """Test the catalog leaf families against their expected verdict."""
        for name, (field, expected) in foliation_examples().items():
            verdict = foliation_flatness_check(field, default_t_grid(field, 5), samples=5, rng=rng)
            assert (verdict.verdict == "totally-geodesic") is expected, name

    def test_spheres_are_not_minimal(self, rng):
        """Test that nested spheres are reported as not minimal."""
        verdict = foliation_flatness_check(sphere_normal(1.0, True), [0.0, 0.1, 0.2, 0.3, 0.4], samples=5, rng=rng)
        assert verdict.verdict == "not-a-minimal-foliation"
        assert not verdict.leaves_minimal
