"""Numerical differential geometry of a Lorentz surface in its ambient.

All quantities are phrased in null coordinates: the induced metric must
have the form g = -E^2 (dx dy + dy dx), i.e. <L_x,L_x> = <L_y,L_y> = 0
and <L_x,L_y> = -E^2 < 0, with the null frame e1 = L_x/E, e2 = L_y/E
satisfying <e1,e2> = -1.  In that frame:

* Gaussian curvature   K = (2 E E_xy - 2 E_x E_y) / E^4,
* connection           Gamma_x = 2E_x/E, Gamma_y = 2E_y/E,
  connection form      omega(e1) = E_x/E^2, omega(e2) = -E_y/E^2,
* mean curvature       H = -h(e1, e2),
* Gauss equation       K = c - <h11,h22> + <h12,h12>.

The second fundamental form is obtained by subtracting from the second
partials their projection onto the tangent plane (and, on a quadric
ambient, onto the position vector, which spans the quadric's normal), by
solving the indefinite Gram system directly.  K is always computed
intrinsically from the E-field, never from the ambient, so the
Gauss-equation check is an independent cross-validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMetricError, DomainError
from .indefinite import AmbientKind, indefinite_dot
from .report import ConditionReport
from .surfaces import Jet2, SurfaceMap

__all__ = [
    "MetricData",
    "FrameData",
    "FundamentalForms",
    "partials",
    "fd_jet",
    "fd_discrepancy",
    "induced_metric",
    "gauss_curvature",
    "connection_data",
    "point_forms",
    "second_fundamental_form",
    "mean_curvature_norm",
    "minimality_residual",
    "gauss_equation_residual",
]

#: Default FD steps (scaled by max(1, |coordinate|)); each uses one
#: Richardson level.  SECOND_STEP balances Richardson roundoff
#: (~23 eps |L| / h^2) against pole truncation (~h^4 |L^(6)| / 480): both
#: stay near 1e-7 relative at 3e-4.  The E-field uses plain central
#: stencils: E_FIRST_STEP for E_x/E_y and a wider mixed step for E_xy
#: (K_STEP_ANALYTIC when analytic partials back the metric, K_STEP_FD
#: otherwise), because the E-field's own noise floor is amplified by 1/h^2.
FIRST_STEP = 1e-5
SECOND_STEP = 3e-4
E_FIRST_STEP = 1e-4
K_STEP_ANALYTIC = 5e-4
K_STEP_FD = 1e-3

#: Pivots below this make the Gram system singular (the Gram determinant
#: in null coordinates is -g_xy^2, so singularity always means bad input).
GRAM_PIVOT_TOL = 1e-10


@dataclass(frozen=True)
class MetricData:
    """Induced metric components and the conformal factor E = sqrt(-g_xy)."""

    g_xx: float
    g_xy: float
    g_yy: float
    E: float
    offdiag_residuals: tuple[float, float]  # (|g_xx|, |g_yy|)


@dataclass(frozen=True)
class FrameData:
    """Null frame e1 = L_x/E, e2 = L_y/E with connection coefficients."""

    e1: np.ndarray
    e2: np.ndarray
    gamma_x: float   # coefficient of d/dx in nabla_{d/dx} d/dx, = 2E_x/E
    gamma_y: float   # coefficient of d/dy in nabla_{d/dy} d/dy, = 2E_y/E
    omega_e1: float  # omega(e1) = E_x/E^2
    omega_e2: float  # omega(e2) = -E_y/E^2


@dataclass(frozen=True)
class FundamentalForms:
    metric: MetricData
    frame: FrameData
    h11: np.ndarray
    h12: np.ndarray
    h22: np.ndarray
    H: np.ndarray    # mean curvature vector, = -h12
    K: float


# ---------------------------------------------------------------------------
# jets


def _check_point(surface: SurfaceMap, x: float, y: float, reach: float):
    (x0, x1), (y0, y1) = surface.domain
    pad_x = 0.1 * (x1 - x0)
    pad_y = 0.1 * (y1 - y0)
    if not (x0 - pad_x <= x <= x1 + pad_x and y0 - pad_y <= y <= y1 + pad_y):
        raise DomainError(f"point ({x:g}, {y:g}) outside surface domain")
    if surface.singular_margin is not None:
        margin = surface.singular_margin(x, y)
        if margin <= 2 * reach + 1e-12:
            raise DomainError(
                f"point ({x:g}, {y:g}) within {margin:g} of a singular locus "
                f"(need > {2 * reach:g})"
            )


def _rich1(f, t: float, h: float) -> np.ndarray:
    d1 = (f(t + h) - f(t - h)) / (2 * h)
    d2 = (f(t + h / 2) - f(t - h / 2)) / h
    return (4 * d2 - d1) / 3


def _rich2(f, t: float, h: float) -> np.ndarray:
    c = f(t)
    d1 = (f(t + h) - 2 * c + f(t - h)) / h**2
    d2 = (f(t + h / 2) - 2 * c + f(t - h / 2)) / (h / 2) ** 2
    return (4 * d2 - d1) / 3


def _rich_cross(pos, x: float, y: float, h: float) -> np.ndarray:
    def cross(hh):
        return (
            pos(x + hh, y + hh)
            - pos(x + hh, y - hh)
            - pos(x - hh, y + hh)
            + pos(x - hh, y - hh)
        ) / (4 * hh * hh)

    return (4 * cross(h / 2) - cross(h)) / 3


def fd_jet(
    surface: SurfaceMap,
    x: float,
    y: float,
    h1: float | None = None,
    h2: float | None = None,
) -> Jet2:
    """Jet from Richardson-extrapolated central differences of the position."""
    pos = surface.position
    hx1 = h1 if h1 is not None else FIRST_STEP * max(1.0, abs(x))
    hy1 = h1 if h1 is not None else FIRST_STEP * max(1.0, abs(y))
    hx2 = h2 if h2 is not None else SECOND_STEP * max(1.0, abs(x))
    hy2 = h2 if h2 is not None else SECOND_STEP * max(1.0, abs(y))
    hxy = max(hx2, hy2)
    _check_point(surface, x, y, max(hx1, hy1, hx2, hy2, hxy))
    return Jet2(
        L=pos(x, y),
        Lx=_rich1(lambda t: pos(t, y), x, hx1),
        Ly=_rich1(lambda t: pos(x, t), y, hy1),
        Lxx=_rich2(lambda t: pos(t, y), x, hx2),
        Lxy=_rich_cross(pos, x, y, hxy),
        Lyy=_rich2(lambda t: pos(x, t), y, hy2),
    )


def partials(surface: SurfaceMap, x: float, y: float) -> Jet2:
    """Analytic jet when the surface provides one, FD jet otherwise."""
    if surface.jet is not None:
        _check_point(surface, x, y, 0.0)
        return surface.jet(x, y)
    return fd_jet(surface, x, y)


def fd_discrepancy(
    surface: SurfaceMap,
    x: float,
    y: float,
    h1: float | None = None,
    h2: float | None = None,
) -> float:
    """Max relative max-norm gap between analytic and FD partials.

    Only meaningful for surfaces with analytic partials; each of the five
    derivatives is compared at scale max(1, |analytic|).
    """
    if surface.jet is None:
        raise DomainError("surface provides no analytic partials to compare")
    an = surface.jet(x, y)
    fd = fd_jet(surface, x, y, h1, h2)
    worst = 0.0
    for name in ("Lx", "Ly", "Lxx", "Lxy", "Lyy"):
        a = getattr(an, name)
        f = getattr(fd, name)
        scale = max(1.0, float(np.max(np.abs(a))))
        worst = max(worst, float(np.max(np.abs(f - a))) / scale)
    return worst


# ---------------------------------------------------------------------------
# metric, curvature, connection


def _metric_from_jet(surface: SurfaceMap, jet: Jet2) -> MetricData:
    idx = surface.ambient.embedding_signature.index
    g_xx = indefinite_dot(jet.Lx, jet.Lx, idx)
    g_xy = indefinite_dot(jet.Lx, jet.Ly, idx)
    g_yy = indefinite_dot(jet.Ly, jet.Ly, idx)
    if g_xy >= 0:
        raise DegenerateMetricError(
            f"g_xy = {g_xy:g} >= 0: not a Lorentz surface in null coordinates "
            "(if the pairing is positive, reverse one coordinate)"
        )
    return MetricData(g_xx, g_xy, g_yy, math.sqrt(-g_xy), (abs(g_xx), abs(g_yy)))


def induced_metric(surface: SurfaceMap, x: float, y: float) -> MetricData:
    """g_ij = <L_i, L_j>; E = sqrt(-g_xy), defined only for g_xy < 0."""
    return _metric_from_jet(surface, partials(surface, x, y))


def _conformal_factor(surface: SurfaceMap, x: float, y: float) -> float:
    if surface.jet is not None:
        jet = surface.jet(x, y)
        Lx, Ly = jet.Lx, jet.Ly
    else:
        pos = surface.position
        h = FIRST_STEP * max(1.0, abs(x), abs(y))
        Lx = _rich1(lambda t: pos(t, y), x, h)
        Ly = _rich1(lambda t: pos(x, t), y, h)
    g_xy = indefinite_dot(Lx, Ly, surface.ambient.embedding_signature.index)
    if g_xy >= 0:
        raise DegenerateMetricError(f"g_xy = {g_xy:g} >= 0 at ({x:g}, {y:g})")
    return math.sqrt(-g_xy)


def _k_step(surface: SurfaceMap, x: float, y: float, step: float | None) -> float:
    if step is not None:
        return step
    base = K_STEP_ANALYTIC if surface.jet is not None else K_STEP_FD
    return base * max(1.0, abs(x), abs(y))


def _efield_derivs(surface: SurfaceMap, x: float, y: float, h: float):
    """E and its first/mixed derivatives by plain central differences.

    First derivatives use E_FIRST_STEP (truncation-limited); the mixed one
    uses the wider step h (noise-limited, divided by h^2)."""
    h1 = E_FIRST_STEP * max(1.0, abs(x), abs(y))
    _check_point(surface, x, y, max(h, h1))
    E = lambda u, v: _conformal_factor(surface, u, v)
    e0 = E(x, y)
    ex = (E(x + h1, y) - E(x - h1, y)) / (2 * h1)
    ey = (E(x, y + h1) - E(x, y - h1)) / (2 * h1)
    exy = (
        E(x + h, y + h) - E(x + h, y - h) - E(x - h, y + h) + E(x - h, y - h)
    ) / (4 * h * h)
    return e0, ex, ey, exy


def gauss_curvature(
    surface: SurfaceMap, x: float, y: float, step: float | None = None
) -> float:
    """K = (2 E E_xy - 2 E_x E_y)/E^4, from FD of the E-field."""
    h = _k_step(surface, x, y, step)
    e0, ex, ey, exy = _efield_derivs(surface, x, y, h)
    return (2 * e0 * exy - 2 * ex * ey) / e0**4


def connection_data(
    surface: SurfaceMap, x: float, y: float, step: float | None = None
) -> FrameData:
    """Null frame and connection coefficients at one point."""
    h = _k_step(surface, x, y, step)
    jet = partials(surface, x, y)
    md = _metric_from_jet(surface, jet)
    e0, ex, ey, _ = _efield_derivs(surface, x, y, h)
    return FrameData(
        e1=jet.Lx / md.E,
        e2=jet.Ly / md.E,
        gamma_x=2 * ex / e0,
        gamma_y=2 * ey / e0,
        omega_e1=ex / e0**2,
        omega_e2=-ey / e0**2,
    )


# ---------------------------------------------------------------------------
# second fundamental form


def _solve_gram(G: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Direct elimination with partial pivoting on the (indefinite) Gram
    system; pivots under GRAM_PIVOT_TOL raise."""
    n = len(rhs)
    A = np.concatenate([G.astype(float), rhs.reshape(n, 1)], axis=1)
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(A[col:, col])))
        if abs(A[pivot_row, col]) < GRAM_PIVOT_TOL:
            raise DegenerateMetricError(
                f"singular Gram matrix (pivot {A[pivot_row, col]:.3e})"
            )
        if pivot_row != col:
            A[[col, pivot_row]] = A[[pivot_row, col]]
        A[col] = A[col] / A[col, col]
        for row in range(n):
            if row != col:
                A[row] = A[row] - A[row, col] * A[col]
    return A[:, n]


def _normal_part(V: np.ndarray, basis: list[np.ndarray], idx: int) -> np.ndarray:
    G = np.array([[indefinite_dot(a, b, idx) for b in basis] for a in basis])
    rhs = np.array([indefinite_dot(V, b, idx) for b in basis])
    coeffs = _solve_gram(G, rhs)
    out = V.astype(float).copy()
    for c, b in zip(coeffs, basis):
        out -= c * b
    return out


def _second_form_raw(surface: SurfaceMap, x: float, y: float):
    """(jet, metric, h_xx, h_xy, h_yy) in coordinate indices.

    On a quadric ambient the position vector is included in the projection
    basis, so h is the second fundamental form inside the quadric.
    """
    jet = partials(surface, x, y)
    md = _metric_from_jet(surface, jet)
    idx = surface.ambient.embedding_signature.index
    basis = [jet.Lx, jet.Ly]
    if surface.ambient.kind is not AmbientKind.FLAT:
        basis.append(jet.L)
    h_xx = _normal_part(jet.Lxx, basis, idx)
    h_xy = _normal_part(jet.Lxy, basis, idx)
    h_yy = _normal_part(jet.Lyy, basis, idx)
    return jet, md, h_xx, h_xy, h_yy


def point_forms(
    surface: SurfaceMap, x: float, y: float, step: float | None = None
) -> tuple[Jet2, FundamentalForms]:
    """Jet plus fundamental forms at one point (one E-field stencil)."""
    jet, md, h_xx, h_xy, h_yy = _second_form_raw(surface, x, y)
    E2 = md.E**2
    h11, h12, h22 = h_xx / E2, h_xy / E2, h_yy / E2
    h = _k_step(surface, x, y, step)
    e0, ex, ey, exy = _efield_derivs(surface, x, y, h)
    frame = FrameData(
        e1=jet.Lx / md.E,
        e2=jet.Ly / md.E,
        gamma_x=2 * ex / e0,
        gamma_y=2 * ey / e0,
        omega_e1=ex / e0**2,
        omega_e2=-ey / e0**2,
    )
    K = (2 * e0 * exy - 2 * ex * ey) / e0**4
    forms = FundamentalForms(
        metric=md, frame=frame, h11=h11, h12=h12, h22=h22, H=-h12, K=K
    )
    return jet, forms


def second_fundamental_form(
    surface: SurfaceMap, x: float, y: float, step: float | None = None
) -> FundamentalForms:
    """Metric, frame, h on the null frame, mean curvature vector, and K."""
    return point_forms(surface, x, y, step)[1]


def mean_curvature_norm(surface: SurfaceMap, x: float, y: float) -> float:
    """Max-norm of the mean curvature vector H = -h(e1,e2) at one point."""
    _, md, _, h_xy, _ = _second_form_raw(surface, x, y)
    return float(np.max(np.abs(h_xy))) / md.E**2


def minimality_residual(
    surface: SurfaceMap, grid=(21, 21), tol: float = 1e-6
) -> ConditionReport:
    """Max over the grid of the max-norm of H; pass iff below tol."""
    pts = surface.grid(grid)
    residuals = [mean_curvature_norm(surface, x, y) for x, y in pts]
    return ConditionReport.from_max(
        "minimality", residuals, tol, surface.grid_description(grid), pts,
        note="max-norm of the mean curvature vector",
    )


def gauss_equation_residual(
    surface: SurfaceMap, x: float, y: float, step: float | None = None
) -> float:
    """K - c + <h11,h22> - <h12,h12>; zero when the Gauss equation holds.

    K comes from the intrinsic E-field, the h-terms from the extrinsic
    projection, so this genuinely cross-checks the two computations.
    """
    forms = second_fundamental_form(surface, x, y, step)
    idx = surface.ambient.embedding_signature.index
    return (
        forms.K
        - surface.ambient.curvature
        + indefinite_dot(forms.h11, forms.h22, idx)
        - indefinite_dot(forms.h12, forms.h12, idx)
    )
