"""Worked example: the Sol geometry e^{2z} dx² + e^{-2z} dy² + dz².

``sol_verification`` reproduces the connection, curvature and Ricci tables
of Sol and the properties of the height function f = z (harmonic,
eikonal, with a gradient that is not parallel).
"""

from collections.abc import Sequence

import numpy as np
import structlog

from helixlab.immersions.fields import coordinate
from helixlab.intrinsic.curvature import christoffels, eikonal_check, laplacian, riemann
from helixlab.intrinsic.metric import MetricChart, linear_chart_change, sol_metric
from helixlab.numerics.comparison import Comparison
from helixlab.numerics.jets import ScalarField
from helixlab.numerics.linalg import Array, inv

logger = structlog.get_logger(__name__)

X, Y, Z = 0, 1, 2
AXES = "xyz"


def height_z() -> ScalarField:
    """f(x, y, z) = z."""
    return coordinate(3, Z)


def expected_christoffels(z: float) -> Array:
    """Γ^k_ij of Sol at height z; all other symbols vanish."""
    gamma = np.zeros((3, 3, 3))
    gamma[Z, X, X] = -np.exp(2.0 * z)
    gamma[Z, Y, Y] = np.exp(-2.0 * z)
    gamma[X, X, Z] = gamma[X, Z, X] = 1.0
    gamma[Y, Y, Z] = gamma[Y, Z, Y] = -1.0
    return gamma


def _suffix(z: float) -> str:
    return "" if z == 0.0 else f"[z={z:g}]"


def _point_records(metric: MetricChart, f: ScalarField, z: float) -> list[Comparison]:
    u = np.array([0.0, 0.0, z])
    tag = _suffix(z)
    gamma = christoffels(metric, u)
    expected = expected_christoffels(z)
    pack = riemann(metric, u)

    records = [
        Comparison.scalar(f"gamma_z_xx{tag}", "sol-connection", gamma[Z, X, X], -np.exp(2.0 * z)),
        Comparison.scalar(f"gamma_x_xz{tag}", "sol-connection", gamma[X, X, Z], 1.0),
        Comparison.scalar(f"gamma_y_yz{tag}", "sol-connection", gamma[Y, Y, Z], -1.0),
        Comparison.scalar(f"gamma_z_yy{tag}", "sol-connection", gamma[Z, Y, Y], np.exp(-2.0 * z)),
        Comparison.tensor(f"christoffel_table{tag}", "sol-connection", gamma, expected),
        Comparison.scalar(f"curvature_xyxy{tag}", "sol-curvature", pack.pairing(X, Y, X, Y), 1.0),
        Comparison.scalar(f"curvature_xzxz{tag}", "sol-curvature", pack.pairing(X, Z, X, Z), -np.exp(2.0 * z)),
    ]

    expected_ricci = np.diag([0.0, 0.0, -2.0])
    for i in range(3):
        for j in range(i, 3):
            records.append(
                Comparison.scalar(
                    f"ricci_{AXES[i]}{AXES[j]}{tag}", "sol-ricci", pack.ricci[i, j], expected_ricci[i, j]
                )
            )
    records.append(Comparison.scalar(f"bianchi{tag}", "sol-curvature", pack.bianchi_residual, 0.0))

    records.append(Comparison.scalar(f"laplacian_z{tag}", "sol-harmonic", laplacian(metric, f, u), 0.0))

    # ∇_{∂x} ∂z = Γ^k_xz ∂_k
    records.append(Comparison.tensor(f"nabla_x_dz{tag}", "sol-not-parallel", gamma[:, X, Z], [1.0, 0.0, 0.0]))
    records.append(
        Comparison.flag(
            f"dz_not_parallel{tag}", "sol-not-parallel", bool(np.linalg.norm(gamma[:, :, Z]) > 0.5)
        )
    )

    records.append(
        Comparison.tensor(f"ricci_kernel{tag}", "sol-ricci-kernel", pack.ricci @ np.eye(3)[:, :2], np.zeros((3, 2)))
    )
    records.append(
        Comparison.scalar(f"ricci_rank{tag}", "sol-ricci-kernel", np.linalg.matrix_rank(pack.ricci, tol=1e-8), 1.0)
    )
    return records


def _ricci_spectrum(metric: MetricChart, u: Array) -> Array:
    operator = inv(metric.g(u)) @ riemann(metric, u).ricci
    return np.sort(np.linalg.eigvals(operator).real)


def chart_invariance(rng: np.random.Generator | None = None) -> Comparison:
    """Ricci eigenvalues of Sol at the origin before and after a random linear chart change."""
    generator = rng if rng is not None else np.random.default_rng(0)
    metric = sol_metric()
    # near-identity keeps the changed chart well conditioned
    mat = np.eye(3) + 0.3 * generator.standard_normal((3, 3))
    changed = linear_chart_change(metric, mat)
    w = inv(mat) @ metric.center
    return Comparison.tensor(
        "ricci_spectrum_chart_change",
        "sol-ricci",
        _ricci_spectrum(changed, w),
        _ricci_spectrum(metric, metric.center),
    )


def sol_verification(
    z_values: Sequence[float] = (0.0, 0.3),
    samples: int = 50,
    rng: np.random.Generator | None = None,
) -> list[Comparison]:
    """Full Sol table at (0, 0, z) for each z, plus eikonality of f = z over
    the chart and Ricci spectrum invariance under a chart change."""
    generator = rng if rng is not None else np.random.default_rng(0)
    metric = sol_metric()
    f = height_z()

    records: list[Comparison] = []
    for z in z_values:
        records.extend(_point_records(metric, f, float(z)))

    eikonal = eikonal_check(metric, f, samples, 1e-8, generator)
    records.append(Comparison.scalar("gradient_norm_z", "sol-eikonal", eikonal.norm_mean, 1.0))
    records.append(Comparison.scalar("gradient_norm_spread_z", "sol-eikonal", eikonal.spread, 0.0))
    records.append(chart_invariance(generator))

    logger.debug("Sol verification", records=len(records), worst=max(r.residual for r in records))
    return records
