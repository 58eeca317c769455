"""Immersion catalog: builtin charts, polynomial charts and constructions."""

from helixlab.immersions.catalog import (
    BUILTIN_NAMES,
    builtin,
    catenoid,
    circle,
    complex_line,
    complex_parabola,
    cone,
    cylinder,
    flat,
    from_selector,
    helicoid,
    plane,
    round_sphere,
    tilted_plane,
)
from helixlab.immersions.chart import GraphInfo, ImmersionChart
from helixlab.immersions.constructions import cylinder_over, graph_immersion, ruling_field, slice_extension
from helixlab.immersions.fields import VectorField, constant_vector, scalar_field
from helixlab.immersions.poly import PolySpec, load_poly, parse_poly, poly_chart

__all__ = [
    "BUILTIN_NAMES",
    "GraphInfo",
    "ImmersionChart",
    "PolySpec",
    "VectorField",
    "builtin",
    "catenoid",
    "circle",
    "complex_line",
    "complex_parabola",
    "cone",
    "constant_vector",
    "cylinder",
    "cylinder_over",
    "flat",
    "from_selector",
    "graph_immersion",
    "helicoid",
    "load_poly",
    "parse_poly",
    "plane",
    "poly_chart",
    "round_sphere",
    "ruling_field",
    "scalar_field",
    "slice_extension",
    "tilted_plane",
]
