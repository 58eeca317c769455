"""Tests for immersion charts, the catalog and polynomial spec files."""

import json

import numpy as np
import pytest

from helixlab.immersions.catalog import BUILTIN_NAMES, builtin, circle, cone, from_selector, tilted_plane
from helixlab.immersions.chart import ImmersionChart
from helixlab.immersions.constructions import cylinder_over, graph_immersion, ruling_field, slice_extension
from helixlab.immersions.fields import constant_vector, radial, scalar_field
from helixlab.immersions.poly import PolySpec, load_poly, parse_poly, poly_chart
from helixlab.numerics.jets import Jet2, fd_jet2
from helixlab.utils.exceptions import (
    ContractViolation,
    DegenerateImmersionError,
    InvalidChartError,
    PolySpecError,
)

SADDLE_SPEC = {
    "name": "saddle",
    "m": 2,
    "n": 3,
    "domain": [[-1.0, 1.0], [-1.0, 1.0]],
    "components": [
        [{"c": 1.0, "e": [1, 0]}],
        [{"c": 1.0, "e": [0, 1]}],
        [{"c": 1.0, "e": [2, 0]}, {"c": -1.0, "e": [0, 2]}],
    ],
}


class TestCatalog:
    """Test builtin charts."""

    @pytest.mark.parametrize(
        "selector",
        [
            "tilted_plane:theta=0.7",
            "plane:n=4",
            "cylinder:profile=parabola,axis=x",
            "cone:k=2",
            "catenoid",
            "helicoid",
            "round_sphere:r=2",
            "circle",
            "complex_parabola",
            "complex_line",
            "graph:field=radial",
        ],
    )
    def test_exact_jets_match_finite_differences(self, selector, rng):
        """Test the hand-written jets against central differences."""
        chart = from_selector(selector)
        for u in chart.sample_points(rng, 100):
            exact = chart.jet(u)
            approx = fd_jet2(chart.point, u)
            np.testing.assert_allclose(exact.value, approx.value, atol=1e-12)
            np.testing.assert_allclose(exact.jacobian, approx.jacobian, rtol=1e-5, atol=1e-7)
            np.testing.assert_allclose(exact.hessians, approx.hessians, rtol=1e-5, atol=1e-4)

    def test_selector_parameters(self):
        """Test parameter parsing and coercion."""
        chart = from_selector("cone:k=2")
        assert chart.name == "cone(k=2)"
        assert chart.params["k"] == 2.0

    def test_unknown_chart(self):
        """Test that unknown names are refused with the known list."""
        with pytest.raises(InvalidChartError, match="unknown chart"):
            builtin("klein_bottle")

    def test_malformed_parameter(self):
        """Test that a parameter without '=' is refused."""
        with pytest.raises(InvalidChartError, match="malformed"):
            from_selector("cone:k")

    def test_unexpected_parameter(self):
        """Test that a parameter the factory does not take is refused."""
        with pytest.raises(InvalidChartError, match="invalid parameters"):
            from_selector("cone:radius=2")

    def test_invalid_values(self):
        """Test parameter range checks."""
        with pytest.raises(InvalidChartError):
            cone(k=-1.0)
        with pytest.raises(InvalidChartError):
            tilted_plane(2.0)

    def test_every_builtin_constructs(self):
        """Test that each catalog entry builds with its defaults."""
        for name in BUILTIN_NAMES:
            chart = builtin(name)
            assert chart.m < chart.n or chart.full_dimensional


class TestImmersionChart:
    """Test the chart contract."""

    def test_requires_codimension(self):
        """Test that m < n is enforced."""
        with pytest.raises(InvalidChartError):
            ImmersionChart(
                name="square",
                m=2,
                n=2,
                domain=np.array([[0.0, 1.0], [0.0, 1.0]]),
                jet_fn=lambda u: Jet2(u, np.eye(2), np.zeros((2, 2, 2))),
            )

    def test_rejects_empty_domain(self):
        """Test the domain shape contract."""
        with pytest.raises(InvalidChartError):
            ImmersionChart(
                name="line",
                m=1,
                n=2,
                domain=np.array([[1.0, 0.0]]),
                jet_fn=lambda u: Jet2(np.array([u[0], 0.0]), np.array([[1.0], [0.0]]), np.zeros((2, 1, 1))),
            )

    def test_rejects_wrong_point_shape(self, plane_chart):
        """Test that chart points must live in R^m."""
        with pytest.raises(ContractViolation):
            plane_chart.jet([0.1, 0.2, 0.3])

    def test_rank_deficiency(self):
        """Test DegenerateImmersionError at a critical point."""
        chart = ImmersionChart(
            name="fold",
            m=2,
            n=3,
            domain=np.array([[-1.0, 1.0], [-1.0, 1.0]]),
            jet_fn=lambda u: Jet2(
                np.array([u[0] ** 2, u[1], 0.0]),
                np.array([[2.0 * u[0], 0.0], [0.0, 1.0], [0.0, 0.0]]),
                np.array([[[2.0, 0.0], [0.0, 0.0]], np.zeros((2, 2)), np.zeros((2, 2))]),
            ),
        )
        with pytest.raises(DegenerateImmersionError):
            chart.check_rank([0.0, 0.5])
        chart.check_rank([0.5, 0.5])

    def test_metric_of_tilted_plane(self, plane_chart):
        """Test that a tilted plane is isometric to its chart."""
        np.testing.assert_allclose(plane_chart.metric([0.3, -0.2]), np.eye(2), atol=1e-15)


class TestConstructions:
    """Test charts built from other charts."""

    def test_graph_immersion_appends_height(self):
        """Test that the graph carries the field as its last coordinate."""
        base = builtin("flat")
        chart = graph_immersion(base, radial(2, 1.0))
        u = np.array([0.6, 0.8])
        np.testing.assert_allclose(chart.point(u), [0.6, 0.8, 1.0])
        assert chart.graph_of is not None
        assert chart.graph_of.base is base

    def test_graph_field_dimension_mismatch(self):
        """Test that the field must live on the base chart."""
        with pytest.raises(ContractViolation):
            graph_immersion(builtin("flat"), radial(3))

    def test_slice_extension_requires_unit_field(self):
        """Test the unit-length validation of the translation field."""
        slice_chart = builtin("circle")
        with pytest.raises(ContractViolation):
            slice_extension(slice_chart, constant_vector([0.0, 0.0, 2.0], 1), 0.5)
        extended = slice_extension(slice_chart, constant_vector([0.0, 0.0, 1.0], 1), 0.5)
        np.testing.assert_allclose(extended.point([0.0]), [1.0, 0.0, 0.5])

    @pytest.mark.parametrize("k", [0.5, 1.5])
    @pytest.mark.parametrize("s", [-0.3, 0.7])
    def test_cone_ruling_extension_stays_on_cone(self, k, s, rng):
        """Test that moving a cone slice along its rulings stays on z = k·r."""
        slice_chart = circle(1.0, height=k)
        extended = slice_extension(slice_chart, ruling_field(k), s)
        for u in slice_chart.sample_points(rng, 20):
            x, y, z = extended.point(u)
            assert z == pytest.approx(k * np.hypot(x, y), abs=1e-12)

    def test_zero_extension_is_the_slice(self, rng):
        """Test that s = 0 reproduces the slice with its jets."""
        slice_chart = circle(1.0, height=1.5)
        extended = slice_extension(slice_chart, ruling_field(1.5), 0.0)
        for u in slice_chart.sample_points(rng, 10):
            original, moved = slice_chart.jet(u), extended.jet(u)
            np.testing.assert_allclose(moved.value, original.value, atol=1e-15)
            np.testing.assert_allclose(moved.jacobian, original.jacobian, atol=1e-15)
            np.testing.assert_allclose(moved.hessians, original.hessians, atol=1e-15)

    def test_cylinder_over(self, plane_chart):
        """Test the product with a line."""
        chart = cylinder_over(plane_chart)
        assert (chart.m, chart.n) == (3, 4)
        np.testing.assert_allclose(chart.point([0.0, 0.0, 0.4]), [0.0, 0.0, 0.0, 0.4])

    def test_unknown_scalar_field(self):
        """Test the scalar field catalog."""
        with pytest.raises(InvalidChartError):
            scalar_field("bump", 2)


class TestPolySpec:
    """Test polynomial immersions from JSON."""

    def test_load_saddle(self, tmp_path):
        """Test loading and evaluating a spec file."""
        path = tmp_path / "saddle.json"
        path.write_text(json.dumps(SADDLE_SPEC), encoding="utf-8")
        chart = load_poly(path)

        assert chart.name == "saddle"
        u = np.array([0.5, 0.25])
        np.testing.assert_allclose(chart.point(u), [0.5, 0.25, 0.1875])
        jet = chart.jet(u)
        np.testing.assert_allclose(jet.jacobian[2], [1.0, -0.5])
        np.testing.assert_allclose(jet.hessians[2], [[2.0, 0.0], [0.0, -2.0]])

    def test_name_defaults_to_file_stem(self, tmp_path):
        """Test the chart name of an unnamed spec."""
        spec = dict(SADDLE_SPEC)
        del spec["name"]
        path = tmp_path / "monkey.json"
        path.write_text(json.dumps(spec), encoding="utf-8")
        assert load_poly(path).name == "monkey"

    def test_invalid_json_reports_line(self):
        """Test JSON syntax errors."""
        with pytest.raises(PolySpecError) as info:
            parse_poly('{\n  "m": 2,\n  "n": \n}')
        assert info.value.line == 4

    def test_shape_errors(self):
        """Test semantic validation of a polynomial chart file."""
        spec = dict(SADDLE_SPEC, m=3)
        with pytest.raises(PolySpecError):
            parse_poly(json.dumps(spec))

    def test_empty_component_is_rejected(self):
        """Test that every component needs at least one term."""
        spec = dict(SADDLE_SPEC, components=[*SADDLE_SPEC["components"][:2], []])
        with pytest.raises(PolySpecError, match="empty term list"):
            parse_poly(json.dumps(spec))

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_random_cubic_jets_match_finite_differences(self, seed):
        """Test term-wise differentiation of random degree-3 charts."""
        rng = np.random.default_rng(seed)
        exponents = [[i, j] for i in range(4) for j in range(4 - i)]
        components = [
            [{"c": float(rng.uniform(-1.0, 1.0)), "e": exponents[index]} for index in rng.choice(len(exponents), 4, replace=False)]
            for _ in range(3)
        ]
        spec = PolySpec.model_validate({"m": 2, "n": 3, "domain": [[-1.0, 1.0], [-1.0, 1.0]], "components": components})
        chart = poly_chart(spec)
        for u in rng.uniform(-1.0, 1.0, size=(20, 2)):
            exact = chart.jet(u)
            approx = fd_jet2(chart.point, u)
            np.testing.assert_allclose(exact.value, approx.value, atol=1e-12)
            np.testing.assert_allclose(exact.jacobian, approx.jacobian, atol=1e-6)
            # cubic terms make the wide-step second differences exact up to rounding
            np.testing.assert_allclose(exact.hessians, fd_jet2(chart.point, u, step=1e-3).hessians, atol=1e-6)

    def test_field_error_reports_field(self):
        """Test that a bad field is named in the error."""
        spec = dict(SADDLE_SPEC, n="three")
        with pytest.raises(PolySpecError) as info:
            parse_poly(json.dumps(spec, indent=2))
        assert info.value.field == "n"
        assert info.value.line is not None

    def test_missing_file(self, tmp_path):
        """Test an unreadable path."""
        with pytest.raises(PolySpecError):
            load_poly(tmp_path / "missing.json")
