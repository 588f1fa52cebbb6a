"""Closed parametric curves r(t) on [0, 2*pi] with cached symbolic derivatives.

A KnotCurve stores the three coordinate expressions plus their first and
second derivatives (differentiated once at construction). Construction
validates closedness (r(0) = r(2*pi)) and regularity (|r'| > 0 on a dense
sample), so downstream code never needs to re-check.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import expr as ex
from .errors import KnotpotError, OpenCurveError, SingularCurveError
from .rng import SplitMix64

TWO_PI = 2.0 * math.pi

_CLOSURE_TOL = 1e-9          # per-coordinate |r(0) - r(2pi)| bound
_REGULARITY_SAMPLES = 2048   # dense immersion check at construction

PAPER_TREFOIL_SOURCE = "(sin(t) + 2*sin(2*t), cos(t) - 2*cos(2*t), -sin(3*t))"


@dataclass(frozen=True)
class KnotCurve:
    """r(t) = (x, y, z) with cached symbolic first and second derivatives."""

    x: ex.Expr
    y: ex.Expr
    z: ex.Expr
    dx: ex.Expr = field(repr=False, default=None)
    dy: ex.Expr = field(repr=False, default=None)
    dz: ex.Expr = field(repr=False, default=None)
    ddx: ex.Expr = field(repr=False, default=None)
    ddy: ex.Expr = field(repr=False, default=None)
    ddz: ex.Expr = field(repr=False, default=None)
    period: float = TWO_PI

    @classmethod
    def from_components(cls, x: ex.Expr, y: ex.Expr, z: ex.Expr) -> "KnotCurve":
        dx, dy, dz = (ex.differentiate(e) for e in (x, y, z))
        ddx, ddy, ddz = (ex.differentiate(e) for e in (dx, dy, dz))
        curve = cls(x, y, z, dx, dy, dz, ddx, ddy, ddz)
        curve._validate()
        return curve

    def _validate(self):
        for name, e in (("x", self.x), ("y", self.y), ("z", self.z)):
            gap = abs(float(e(0.0)) - float(e(TWO_PI)))
            if not gap < _CLOSURE_TOL:
                raise OpenCurveError(
                    f"curve is not closed: {name}(0) and {name}(2*pi) differ by {gap:.3g}"
                )
        t = np.linspace(0.0, TWO_PI, _REGULARITY_SAMPLES, endpoint=False)
        speed = self.velocity(t)[1]
        floor = 1e-9 * (1.0 + float(speed.max()))
        if not float(speed.min()) > floor:
            raise SingularCurveError(
                f"|r'(t)| drops to {float(speed.min()):.3g} near t = "
                f"{float(t[int(speed.argmin())]):.4f}; the parametrization is not regular"
            )

    # -- evaluation ---------------------------------------------------------

    def point(self, t):
        """r(t); accepts scalars or arrays, t is taken mod 2*pi."""
        t = np.mod(t, TWO_PI)
        return np.stack([np.asarray(self.x(t), float),
                         np.asarray(self.y(t), float),
                         np.asarray(self.z(t), float)], axis=-1)

    def velocity(self, t):
        """(r'(t), |r'(t)|)."""
        t = np.mod(t, TWO_PI)
        v = np.stack([np.asarray(self.dx(t), float),
                      np.asarray(self.dy(t), float),
                      np.asarray(self.dz(t), float)], axis=-1)
        return v, np.linalg.norm(v, axis=-1)

    def acceleration(self, t):
        t = np.mod(t, TWO_PI)
        return np.stack([np.asarray(self.ddx(t), float),
                         np.asarray(self.ddy(t), float),
                         np.asarray(self.ddz(t), float)], axis=-1)

    def bounding_box(self, samples: int = 2048):
        t = np.linspace(0.0, TWO_PI, samples, endpoint=False)
        p = self.point(t)
        return p.min(axis=0), p.max(axis=0)

    def source(self) -> str:
        return f"({ex.to_source(self.x)}, {ex.to_source(self.y)}, {ex.to_source(self.z)})"


def eval_curve(curve: KnotCurve, t):
    """(point, velocity, speed) at parameter t (wrapped mod 2*pi)."""
    p = curve.point(t)
    v, s = curve.velocity(t)
    return p, v, s


def parse_curve(source: str) -> KnotCurve:
    """Parse ``(x-expr, y-expr, z-expr)`` and validate the resulting curve."""
    x, y, z = ex.parse_component_tuple(source)
    return KnotCurve.from_components(x, y, z)


# ---------------------------------------------------------------------------
# built-in families

def _c(v) -> ex.Expr:
    return ex.Const(float(v))


def _scaled_trig(kind, k: float, coeff: float = 1.0) -> ex.Expr:
    inner = ex.Mul(_c(k), ex.Var()) if k != 1 else ex.Var()
    node = kind(inner)
    return node if coeff == 1 else ex.Mul(_c(coeff), node)


def builtin(name: str, params=()) -> KnotCurve:
    """Named curve families: paper_trefoil, circle(radius), torus_knot(p,q,R,r)."""
    params = list(params)
    if name == "paper_trefoil":
        if params:
            raise KnotpotError("paper_trefoil takes no parameters")
        return parse_curve(PAPER_TREFOIL_SOURCE)
    if name == "circle":
        radius = float(params[0]) if params else 1.0
        if radius <= 0:
            raise KnotpotError("circle radius must be positive")
        return KnotCurve.from_components(
            _scaled_trig(ex.Cos, 1, radius), _scaled_trig(ex.Sin, 1, radius), _c(0.0)
        )
    if name == "torus_knot":
        p, q = (int(params[0]), int(params[1])) if len(params) >= 2 else (2, 3)
        big_r = float(params[2]) if len(params) >= 3 else 2.0
        small_r = float(params[3]) if len(params) >= 4 else 1.0
        if math.gcd(p, q) != 1:
            warnings.warn(f"torus_knot({p},{q}) is a link, not a knot (gcd != 1)")
        radial = ex.Add(_c(big_r), _scaled_trig(ex.Cos, q, small_r))
        return KnotCurve.from_components(
            ex.Mul(radial, _scaled_trig(ex.Cos, p)),
            ex.Mul(radial, _scaled_trig(ex.Sin, p)),
            _scaled_trig(ex.Sin, q, small_r),
        )
    raise KnotpotError(f"unknown builtin curve {name!r}")


# ---------------------------------------------------------------------------
# perturbation

_PERTURB_ORDERS = 4


def perturb(curve: KnotCurve, amplitude: float, seed: int) -> KnotCurve:
    """Add a random trigonometric polynomial (orders 1..4) to each coordinate.

    Coefficients come from a splitmix64 stream of the seed and are rescaled so
    the pointwise displacement max_t |delta r(t)| equals the requested
    amplitude. The perturbation is 2*pi-periodic, so closedness is automatic;
    regularity is re-validated and failure suggests a smaller amplitude.
    """
    if amplitude < 0:
        raise KnotpotError("perturbation amplitude must be nonnegative")
    if amplitude == 0:
        return curve

    stream = SplitMix64(seed)
    coeffs = [
        [(stream.uniform(-1, 1), stream.uniform(-1, 1)) for _ in range(_PERTURB_ORDERS)]
        for _ in range(3)
    ]

    t = np.linspace(0.0, TWO_PI, 1024, endpoint=False)
    delta = np.zeros((t.size, 3))
    for c in range(3):
        for k, (a, b) in enumerate(coeffs[c], start=1):
            delta[:, c] += a * np.sin(k * t) + b * np.cos(k * t)
    peak = float(np.linalg.norm(delta, axis=1).max())
    scale = amplitude / peak

    def perturbed(component: ex.Expr, c: int) -> ex.Expr:
        node = component
        for k, (a, b) in enumerate(coeffs[c], start=1):
            node = ex.Add(node, _scaled_trig(ex.Sin, k, scale * a))
            node = ex.Add(node, _scaled_trig(ex.Cos, k, scale * b))
        return node

    try:
        return KnotCurve.from_components(
            perturbed(curve.x, 0), perturbed(curve.y, 1), perturbed(curve.z, 2)
        )
    except SingularCurveError as err:
        raise SingularCurveError(
            f"perturbation of amplitude {amplitude} breaks regularity; "
            f"retry with a smaller amplitude ({err})"
        ) from err
