"""Constructors and premise checks for the five minimal-surface families.

One constructor per family:

* ``translation``: L(x,y) = z(x) + w(y) in flat E^m_s, z and w null
  curves with nowhere-vanishing <z'(x), w'(y)>.
* ``sphere_b``:  L = z(x)/(x+y) - z'(x)/2 in S^m_s(1), from a single
  constant-speed-2 spacelike light-cone curve with <z'',z''> = 0.
* ``sphere_c``:  L = (z+w)/(x+y) - (z'+w')/2 from a pair of curves
  subject to the joint conditions (c.1)-(c.3).
* ``hyp_ii``:    L = z(x) tanh((x+y)/sqrt2) - z'(x)/sqrt2 in H^m_s(-1),
  from a constant-speed-sqrt2 timelike light-cone curve with
  <z'',z''> = 4.
* ``hyp_iii``:   L = (z+w) tanh((x+y)/sqrt2) - (z'+w')/sqrt2 from a pair
  subject to (iii.1)-(iii.3).

Every constructor attaches analytic first and second partials assembled
from the exact curve derivatives, so the finite-difference layer acts as
a cross-check rather than the only source of derivatives.  Premise
checkers return per-condition reports with the worst sample point;
constructors raise on algebraic premise failures and merely flag the
non-degeneracy ones (a vanishing jerk term is the totally geodesic
boundary case, not an error).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .curves import Curve, derivative_inner, null_check
from .errors import (
    DegenerateMetricError,
    DomainError,
    InvalidInputError,
    PremiseError,
    SignatureMismatchError,
)
from .indefinite import Ambient, Signature, indefinite_dot
from .report import ConditionReport

__all__ = [
    "Jet2",
    "SurfaceMap",
    "grid_points",
    "translation_surface",
    "sphere_case_b",
    "check_case_b_premises",
    "sphere_case_c",
    "check_case_c_conditions",
    "hyperbolic_case_ii",
    "check_case_ii_premises",
    "hyperbolic_case_iii",
    "check_case_iii_conditions",
    "de_sitter_control",
    "SPHERE_DOMAIN",
    "HYPERBOLIC_DOMAIN",
    "FLAT_DOMAIN",
]

SQRT2 = math.sqrt(2.0)

#: Default (x, y) domains.  Sphere-family charts have a pole on x+y = 0,
#: so their default keeps x+y >= 0.2; the others are singularity-free.
SPHERE_DOMAIN = ((0.1, 1.1), (0.1, 1.1))
HYPERBOLIC_DOMAIN = ((-1.0, 1.0), (-1.0, 1.0))
FLAT_DOMAIN = ((-1.0, 1.0), (-1.0, 1.0))

#: Minimum distance from a sphere-family domain to the x+y = 0 pole.
SINGULAR_MARGIN = 0.01

DEFAULT_SAMPLES = 41
DEFAULT_TOL = 1e-9
DEFAULT_GRID = (21, 21)


@dataclass(frozen=True)
class Jet2:
    """Position and partial derivatives of an immersion at one point."""

    L: np.ndarray
    Lx: np.ndarray
    Ly: np.ndarray
    Lxx: np.ndarray
    Lxy: np.ndarray
    Lyy: np.ndarray


@dataclass(frozen=True)
class SurfaceMap:
    """An immersion (x, y) -> embedding space, with its ambient.

    ``position`` and ``jet`` are stateless closures valid on a
    neighborhood of the declared ``domain`` rectangle (finite-difference
    stencils may poke slightly outside it).  ``singular_margin``, when
    present, gives the distance from a point to the nearest singular
    locus of the chart.
    """

    ambient: Ambient
    position: Callable[[float, float], np.ndarray]
    domain: tuple[tuple[float, float], tuple[float, float]]
    jet: Callable[[float, float], Jet2] | None = None
    singular_margin: Callable[[float, float], float] | None = None
    sources: tuple[Curve, ...] = ()
    flags: tuple[str, ...] = ()
    family: str = ""
    label: str = ""

    def grid(self, shape=DEFAULT_GRID):
        return grid_points(self.domain, shape)

    def grid_description(self, shape=DEFAULT_GRID) -> str:
        (x0, x1), (y0, y1) = self.domain
        return f"{shape[0]}x{shape[1]} on [{x0:g},{x1:g}]x[{y0:g},{y1:g}]"


def grid_points(domain, shape):
    (x0, x1), (y0, y1) = domain
    nx, ny = shape
    if nx < 2 or ny < 2:
        raise InvalidInputError(f"grid must be at least 2x2, got {shape}")
    xs = np.linspace(x0, x1, nx)
    ys = np.linspace(y0, y1, ny)
    return [(float(x), float(y)) for x in xs for y in ys]


def _check_domain(domain):
    (x0, x1), (y0, y1) = domain
    if not (x0 < x1 and y0 < y1):
        raise InvalidInputError(f"empty surface domain {domain}")
    return (float(x0), float(x1)), (float(y0), float(y1))


def _require_coverage(curve: Curve, span, axis: str):
    lo, hi = curve.domain
    if span[0] < lo or span[1] > hi:
        raise InvalidInputError(
            f"surface {axis}-range {span} exceeds curve domain [{lo}, {hi}]"
            f" of {curve.label or 'curve'}"
        )


def _require_same_signature(z: Curve, w: Curve):
    if z.signature != w.signature:
        raise SignatureMismatchError(
            f"curve signatures differ: {z.signature} vs {w.signature}"
        )


def _sphere_domain_guard(domain):
    (x0, x1), (y0, y1) = domain
    lo, hi = x0 + y0, x1 + y1
    if lo <= SINGULAR_MARGIN and hi >= -SINGULAR_MARGIN:
        raise DomainError(
            f"domain touches the x+y=0 pole (x+y in [{lo:g}, {hi:g}])"
        )


# ---------------------------------------------------------------------------
# flat ambient: translation surfaces


def translation_surface(
    z: Curve,
    w: Curve,
    domain=FLAT_DOMAIN,
    *,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
) -> SurfaceMap:
    """L(x,y) = z(x) + w(y) for null curves with <z'(x), w'(y)> != 0.

    The pairing <z', w'> is sampled on a samples x samples grid; a value
    within tol of zero anywhere makes the induced metric degenerate and
    raises.  (A positive pairing is accepted here - the surface is still
    minimal - but the null-coordinate analysis downstream requires a
    negative one; reverse the parameter of one curve to flip the sign.)
    """
    _require_same_signature(z, w)
    domain = _check_domain(domain)
    _require_coverage(z, domain[0], "x")
    _require_coverage(w, domain[1], "y")
    failed = []
    for curve, name in ((z, "null-z"), (w, "null-w")):
        if not null_check(curve, samples, tol).passed:
            failed.append(name)
    if failed:
        raise PremiseError(failed)

    xs = np.linspace(domain[0][0], domain[0][1], samples)
    ys = np.linspace(domain[1][0], domain[1][1], samples)
    lo = math.inf
    hi = -math.inf
    for x in xs:
        for y in ys:
            value = derivative_inner(z, 1, w, 1, x, y)
            if abs(value) <= tol:
                raise DegenerateMetricError(
                    f"<z'(x), w'(y)> vanishes near (x, y) = ({x:g}, {y:g})"
                )
            lo, hi = min(lo, value), max(hi, value)
    if lo < 0 < hi:  # continuous, so a sign change proves a zero
        raise DegenerateMetricError(
            f"<z'(x), w'(y)> changes sign on the domain ({lo:g} to {hi:g})"
        )

    dim = z.signature.dim
    zero = np.zeros(dim)

    def position(x, y):
        return z.at(x) + w.at(y)

    def jet(x, y):
        return Jet2(
            L=z.at(x) + w.at(y),
            Lx=z.at(x, 1),
            Ly=w.at(y, 1),
            Lxx=z.at(x, 2),
            Lxy=zero,
            Lyy=w.at(y, 2),
        )

    return SurfaceMap(
        ambient=Ambient.flat(z.signature),
        position=position,
        domain=domain,
        jet=jet,
        sources=(z, w),
        family="translation",
        label=f"translation[{z.label or 'z'}, {w.label or 'w'}]",
    )


# ---------------------------------------------------------------------------
# pseudo-sphere ambient


def check_case_b_premises(
    z: Curve, samples: int = DEFAULT_SAMPLES, tol: float = DEFAULT_TOL
) -> list[ConditionReport]:
    """Premises of the single-curve sphere construction.

    The curve must lie on the light cone with constant speed 2 and null
    acceleration; the jerk must not vanish (its vanishing is the totally
    geodesic boundary case).
    """
    ts = z.sample_grid(samples)
    pts = [(t,) for t in ts]
    grid = f"{samples} samples on [{z.domain[0]:g}, {z.domain[1]:g}]"

    def over(f):
        return [f(t) for t in ts]

    return [
        ConditionReport.from_max(
            "lightcone-z", over(lambda t: abs(derivative_inner(z, 0, z, 0, t, t))),
            tol, grid, pts),
        ConditionReport.from_max(
            "speed-z", over(lambda t: abs(derivative_inner(z, 1, z, 1, t, t) - 4.0)),
            tol, grid, pts, note="<z',z'> = 4"),
        ConditionReport.from_max(
            "acc-null-z", over(lambda t: abs(derivative_inner(z, 2, z, 2, t, t))),
            tol, grid, pts, note="<z'',z''> = 0"),
        ConditionReport.from_min(
            "jerk-nonzero-z", over(lambda t: float(np.max(np.abs(z.at(t, 3))))),
            tol, grid, pts, note="max-norm of z''' must stay positive"),
    ]


def _sphere_ambient(signature: Signature) -> Ambient:
    return Ambient.sphere(Signature(signature.dim - 1, signature.index))


def sphere_case_b(
    z: Curve,
    domain=SPHERE_DOMAIN,
    *,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
) -> SurfaceMap:
    """L(x,y) = z(x)/(x+y) - z'(x)/2 on the pseudo-sphere quadric."""
    domain = _check_domain(domain)
    _sphere_domain_guard(domain)
    _require_coverage(z, domain[0], "x")
    reports = check_case_b_premises(z, samples, tol)
    hard_failures = [r.condition_id for r in reports[:3] if not r.passed]
    if hard_failures:
        raise PremiseError(hard_failures)
    flags = () if reports[3].passed else ("totally-geodesic-boundary",)

    def position(x, y):
        return z.at(x) / (x + y) - z.at(x, 1) / 2

    def jet(x, y):
        s = x + y
        z0, z1, z2, z3 = (z.at(x, k) for k in range(4))
        L = z0 / s - z1 / 2
        return Jet2(
            L=L,
            Lx=z1 / s - z0 / s**2 - z2 / 2,
            Ly=-z0 / s**2,
            Lxx=z2 / s - 2 * z1 / s**2 + 2 * z0 / s**3 - z3 / 2,
            Lxy=2 * z0 / s**3 - z1 / s**2,
            Lyy=2 * z0 / s**3,
        )

    return SurfaceMap(
        ambient=_sphere_ambient(z.signature),
        position=position,
        domain=domain,
        jet=jet,
        singular_margin=lambda x, y: abs(x + y),
        sources=(z,),
        flags=flags,
        family="sphere_b",
        label=f"sphere_b[{z.label or 'z'}]",
    )


def check_case_c_conditions(
    z: Curve,
    w: Curve,
    grid=DEFAULT_GRID,
    domain=SPHERE_DOMAIN,
    tol: float = 1e-7,
) -> list[ConditionReport]:
    """The three joint conditions of the sphere pair construction:
    (c.1) <L,L> = 1, (c.2) 2<z+w, z'''> = (x+y)<z'+w', z'''> and (c.3)
    the same with w'''.  No premises on z and w individually are checked;
    the printed conditions are exactly what is verified.
    """
    _require_same_signature(z, w)
    domain = _check_domain(domain)
    _sphere_domain_guard(domain)
    pts = grid_points(domain, grid)
    idx = z.signature.index
    r1, r2, r3 = [], [], []
    for x, y in pts:
        s = x + y
        z0, z1, z3 = z.at(x), z.at(x, 1), z.at(x, 3)
        w0, w1, w3 = w.at(y), w.at(y, 1), w.at(y, 3)
        L = (z0 + w0) / s - (z1 + w1) / 2
        r1.append(abs(indefinite_dot(L, L, idx) - 1.0))
        zw, zw1 = z0 + w0, z1 + w1
        r2.append(abs(2 * indefinite_dot(zw, z3, idx) - s * indefinite_dot(zw1, z3, idx)))
        r3.append(abs(2 * indefinite_dot(zw, w3, idx) - s * indefinite_dot(zw1, w3, idx)))
    (x0, x1), (y0, y1) = domain
    desc = f"{grid[0]}x{grid[1]} on [{x0:g},{x1:g}]x[{y0:g},{y1:g}]"
    return [
        ConditionReport.from_max("c.1", r1, tol, desc, pts, note="<L,L> = 1"),
        ConditionReport.from_max("c.2", r2, tol, desc, pts),
        ConditionReport.from_max("c.3", r3, tol, desc, pts),
    ]


def sphere_case_c(z: Curve, w: Curve, domain=SPHERE_DOMAIN) -> SurfaceMap:
    """L(x,y) = (z(x)+w(y))/(x+y) - (z'(x)+w'(y))/2 on the pseudo-sphere."""
    _require_same_signature(z, w)
    domain = _check_domain(domain)
    _sphere_domain_guard(domain)
    _require_coverage(z, domain[0], "x")
    _require_coverage(w, domain[1], "y")

    def position(x, y):
        return (z.at(x) + w.at(y)) / (x + y) - (z.at(x, 1) + w.at(y, 1)) / 2

    def jet(x, y):
        s = x + y
        z0, z1, z2, z3 = (z.at(x, k) for k in range(4))
        w0, w1, w2, w3 = (w.at(y, k) for k in range(4))
        zw = z0 + w0
        L = zw / s - (z1 + w1) / 2
        return Jet2(
            L=L,
            Lx=z1 / s - zw / s**2 - z2 / 2,
            Ly=w1 / s - zw / s**2 - w2 / 2,
            Lxx=z2 / s - 2 * z1 / s**2 + 2 * zw / s**3 - z3 / 2,
            Lxy=2 * zw / s**3 - (z1 + w1) / s**2,
            Lyy=w2 / s - 2 * w1 / s**2 + 2 * zw / s**3 - w3 / 2,
        )

    return SurfaceMap(
        ambient=_sphere_ambient(z.signature),
        position=position,
        domain=domain,
        jet=jet,
        singular_margin=lambda x, y: abs(x + y),
        sources=(z, w),
        family="sphere_c",
        label=f"sphere_c[{z.label or 'z'}, {w.label or 'w'}]",
    )


# ---------------------------------------------------------------------------
# pseudo-hyperbolic ambient


def check_case_ii_premises(
    z: Curve, samples: int = DEFAULT_SAMPLES, tol: float = DEFAULT_TOL
) -> list[ConditionReport]:
    """Premises of the single-curve hyperbolic construction: light-cone
    position, <z',z'> = -2, <z'',z''> = 4, and z''' != 2 z' (whose failure
    is the totally geodesic boundary case)."""
    ts = z.sample_grid(samples)
    pts = [(t,) for t in ts]
    grid = f"{samples} samples on [{z.domain[0]:g}, {z.domain[1]:g}]"

    def over(f):
        return [f(t) for t in ts]

    return [
        ConditionReport.from_max(
            "lightcone-z", over(lambda t: abs(derivative_inner(z, 0, z, 0, t, t))),
            tol, grid, pts),
        ConditionReport.from_max(
            "speed-z", over(lambda t: abs(derivative_inner(z, 1, z, 1, t, t) + 2.0)),
            tol, grid, pts, note="<z',z'> = -2"),
        ConditionReport.from_max(
            "acc-norm-z", over(lambda t: abs(derivative_inner(z, 2, z, 2, t, t) - 4.0)),
            tol, grid, pts, note="<z'',z''> = 4"),
        ConditionReport.from_min(
            "nondegenerate-z",
            over(lambda t: float(np.max(np.abs(z.at(t, 3) - 2 * z.at(t, 1))))),
            tol, grid, pts, note="max-norm of z''' - 2z' must stay positive"),
    ]


def _hyperbolic_ambient(signature: Signature) -> Ambient:
    if signature.index < 1:
        raise InvalidInputError(
            f"hyperbolic ambient needs embedding index >= 1, got {signature}"
        )
    return Ambient.hyperbolic(Signature(signature.dim - 1, signature.index - 1))


def hyperbolic_case_ii(
    z: Curve,
    domain=HYPERBOLIC_DOMAIN,
    *,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
) -> SurfaceMap:
    """L(x,y) = z(x) tanh((x+y)/sqrt2) - z'(x)/sqrt2 on the hyperbolic quadric."""
    domain = _check_domain(domain)
    _require_coverage(z, domain[0], "x")
    reports = check_case_ii_premises(z, samples, tol)
    hard_failures = [r.condition_id for r in reports[:3] if not r.passed]
    if hard_failures:
        raise PremiseError(hard_failures)
    flags = () if reports[3].passed else ("totally-geodesic-boundary",)

    def position(x, y):
        return z.at(x) * math.tanh((x + y) / SQRT2) - z.at(x, 1) / SQRT2

    def jet(x, y):
        u = (x + y) / SQRT2
        T = math.tanh(u)
        S2 = 1.0 / math.cosh(u) ** 2
        z0, z1, z2, z3 = (z.at(x, k) for k in range(4))
        L = z0 * T - z1 / SQRT2
        return Jet2(
            L=L,
            Lx=z1 * T + z0 * S2 / SQRT2 - z2 / SQRT2,
            Ly=z0 * S2 / SQRT2,
            Lxx=z2 * T + SQRT2 * z1 * S2 - z0 * S2 * T - z3 / SQRT2,
            Lxy=-S2 * L,
            Lyy=-z0 * S2 * T,
        )

    return SurfaceMap(
        ambient=_hyperbolic_ambient(z.signature),
        position=position,
        domain=domain,
        jet=jet,
        sources=(z,),
        flags=flags,
        family="hyp_ii",
        label=f"hyp_ii[{z.label or 'z'}]",
    )


def check_case_iii_conditions(
    z: Curve,
    w: Curve,
    grid=DEFAULT_GRID,
    domain=HYPERBOLIC_DOMAIN,
    tol: float = 1e-7,
) -> list[ConditionReport]:
    """The three joint conditions of the hyperbolic pair construction:
    (iii.1) <L,L> = -1 and (iii.2)/(iii.3)
    sqrt2 <z+w, 2c'-c'''> tanh((x+y)/sqrt2) = <z'+w', 2c'-c'''> for
    c = z and c = w respectively."""
    _require_same_signature(z, w)
    domain = _check_domain(domain)
    pts = grid_points(domain, grid)
    idx = z.signature.index
    r1, r2, r3 = [], [], []
    for x, y in pts:
        T = math.tanh((x + y) / SQRT2)
        z0, z1 = z.at(x), z.at(x, 1)
        w0, w1 = w.at(y), w.at(y, 1)
        az = 2 * z1 - z.at(x, 3)
        aw = 2 * w1 - w.at(y, 3)
        zw, zw1 = z0 + w0, z1 + w1
        L = zw * T - zw1 / SQRT2
        r1.append(abs(indefinite_dot(L, L, idx) + 1.0))
        r2.append(abs(SQRT2 * indefinite_dot(zw, az, idx) * T - indefinite_dot(zw1, az, idx)))
        r3.append(abs(SQRT2 * indefinite_dot(zw, aw, idx) * T - indefinite_dot(zw1, aw, idx)))
    (x0, x1), (y0, y1) = domain
    desc = f"{grid[0]}x{grid[1]} on [{x0:g},{x1:g}]x[{y0:g},{y1:g}]"
    return [
        ConditionReport.from_max("iii.1", r1, tol, desc, pts, note="<L,L> = -1"),
        ConditionReport.from_max("iii.2", r2, tol, desc, pts),
        ConditionReport.from_max("iii.3", r3, tol, desc, pts),
    ]


def hyperbolic_case_iii(z: Curve, w: Curve, domain=HYPERBOLIC_DOMAIN) -> SurfaceMap:
    """L = (z(x)+w(y)) tanh((x+y)/sqrt2) - (z'(x)+w'(y))/sqrt2."""
    _require_same_signature(z, w)
    domain = _check_domain(domain)
    _require_coverage(z, domain[0], "x")
    _require_coverage(w, domain[1], "y")

    def position(x, y):
        T = math.tanh((x + y) / SQRT2)
        return (z.at(x) + w.at(y)) * T - (z.at(x, 1) + w.at(y, 1)) / SQRT2

    def jet(x, y):
        u = (x + y) / SQRT2
        T = math.tanh(u)
        S2 = 1.0 / math.cosh(u) ** 2
        z0, z1, z2, z3 = (z.at(x, k) for k in range(4))
        w0, w1, w2, w3 = (w.at(y, k) for k in range(4))
        zw = z0 + w0
        L = zw * T - (z1 + w1) / SQRT2
        return Jet2(
            L=L,
            Lx=z1 * T + zw * S2 / SQRT2 - z2 / SQRT2,
            Ly=w1 * T + zw * S2 / SQRT2 - w2 / SQRT2,
            Lxx=z2 * T + SQRT2 * z1 * S2 - zw * S2 * T - z3 / SQRT2,
            Lxy=-S2 * L,
            Lyy=w2 * T + SQRT2 * w1 * S2 - zw * S2 * T - w3 / SQRT2,
        )

    return SurfaceMap(
        ambient=_hyperbolic_ambient(z.signature),
        position=position,
        domain=domain,
        jet=jet,
        sources=(z, w),
        family="hyp_iii",
        label=f"hyp_iii[{z.label or 'z'}, {w.label or 'w'}]",
    )


# ---------------------------------------------------------------------------
# negative control


def de_sitter_control(domain=((0.9, 1.1), (0.9, 1.1))) -> SurfaceMap:
    """The unit de Sitter surface S^2_1(1) in E^3_1, treated with a flat
    ambient, in null coordinates: L = ((1-xy)/(x+y), (x-y)/(x+y), (1+xy)/(x+y)).

    Totally umbilical with mean curvature vector H = -L, hence a clean
    non-minimal control: the minimality residual is ~1 while everything
    intrinsic (null metric form, K = 1) still passes.
    """
    domain = _check_domain(domain)
    (x0, x1), (y0, y1) = domain
    if x0 + y0 <= SINGULAR_MARGIN and x1 + y1 >= -SINGULAR_MARGIN:
        raise DomainError("domain touches the x+y=0 pole")

    def vec(x, y):
        return np.array([1 - x * y, x - y, 1 + x * y])

    def position(x, y):
        return vec(x, y) / (x + y)

    def jet(x, y):
        s = x + y
        v = vec(x, y)
        vx = np.array([-y, 1.0, y])
        vy = np.array([-x, -1.0, x])
        vxy = np.array([-1.0, 0.0, 1.0])
        return Jet2(
            L=v / s,
            Lx=vx / s - v / s**2,
            Ly=vy / s - v / s**2,
            Lxx=-2 * vx / s**2 + 2 * v / s**3,
            Lxy=vxy / s - (vx + vy) / s**2 + 2 * v / s**3,
            Lyy=-2 * vy / s**2 + 2 * v / s**3,
        )

    return SurfaceMap(
        ambient=Ambient.flat(Signature(3, 1)),
        position=position,
        domain=domain,
        jet=jet,
        singular_margin=lambda x, y: abs(x + y),
        flags=("negative-control",),
        family="de_sitter_control",
        label="de_sitter_control",
    )
