"""Small-dimension linear algebra and differentiation kernel."""

from helixlab.numerics.comparison import Comparison
from helixlab.numerics.jets import Jet2, ScalarField, ScalarJet, fd_derivative, fd_jet2
from helixlab.numerics.linalg import (
    Array,
    adjugate,
    det,
    gram_schmidt,
    inv,
    orthonormal_complement,
    random_symmetric,
    sym_eig,
    symmetric,
    trace,
)
from helixlab.numerics.sampling import sample_box
from helixlab.numerics.tolerances import DEFAULT_TOLERANCES, Tolerances

__all__ = [
    "DEFAULT_TOLERANCES",
    "Array",
    "Comparison",
    "Jet2",
    "ScalarField",
    "ScalarJet",
    "Tolerances",
    "adjugate",
    "det",
    "fd_derivative",
    "fd_jet2",
    "gram_schmidt",
    "inv",
    "orthonormal_complement",
    "random_symmetric",
    "sample_box",
    "sym_eig",
    "symmetric",
    "trace",
]
