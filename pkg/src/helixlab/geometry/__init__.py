"""Extrinsic geometry of immersions: frames, helices, offsets and the trace identity."""

from helixlab.geometry.extrinsic import (
    FramePack,
    MinimalityReport,
    ShapePack,
    frames,
    gauss_ricci,
    mean_curvature,
    minimality_report,
    second_fundamental_form,
)
from helixlab.geometry.helix import (
    HelixReport,
    affine_rank,
    complex_helix_checks,
    gauss_image_check,
    helix_angle,
    is_helix,
    is_ruled,
    laplacian_height_check,
    main_theorem_harness,
    projection_formulae,
    ricci_T_check,
    structure_equation_residual,
    tangential_T,
)
from helixlab.geometry.offsets import (
    NormalField,
    OffsetData,
    foliation_flatness_check,
    minimal_offsets_certificate,
    normal_connection,
    offset_corpus,
    offset_frames,
    offset_immersion,
    offset_metric,
    offset_shape_trace,
    valid_offset_range,
)
from helixlab.geometry.trace_lemma import (
    SymmetricTriple,
    kernel_split,
    lemma_la_decision,
    random_triple,
    rational_numerator,
    substituted_trace,
    trace_rational,
)

__all__ = [
    "FramePack",
    "HelixReport",
    "MinimalityReport",
    "NormalField",
    "OffsetData",
    "ShapePack",
    "SymmetricTriple",
    "affine_rank",
    "complex_helix_checks",
    "foliation_flatness_check",
    "frames",
    "gauss_image_check",
    "gauss_ricci",
    "helix_angle",
    "is_helix",
    "is_ruled",
    "kernel_split",
    "laplacian_height_check",
    "lemma_la_decision",
    "main_theorem_harness",
    "mean_curvature",
    "minimal_offsets_certificate",
    "minimality_report",
    "normal_connection",
    "offset_corpus",
    "offset_frames",
    "offset_immersion",
    "offset_metric",
    "offset_shape_trace",
    "projection_formulae",
    "random_triple",
    "rational_numerator",
    "ricci_T_check",
    "second_fundamental_form",
    "structure_equation_residual",
    "substituted_trace",
    "tangential_T",
    "trace_rational",
    "valid_offset_range",
]
