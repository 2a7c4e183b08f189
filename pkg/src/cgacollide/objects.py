"""Constructors for the conformal object zoo: points, spheres, planes,
circles and lines, in both inner-product (IPNS) and outer-product (OPNS)
form.

Coordinates are millimeters throughout.  A Euclidean point p embeds as

    point(p) = p1*e1 + p2*e2 + p3*e3 + 0.5*|p|^2 * e_inf + e_0

with the coefficient of e_0 fixed at exactly 1 (no projective rescaling).
The squared distance between two embedded points is then recovered from the
inner product: point(p) | point(q) has scalar part -0.5 * |p - q|^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cga import BLADE_COUNT, Multivector, null_inf

# Blade bitmasks for the five basis vectors.
_E1, _E2, _E3, _E0, _EINF = 1, 2, 4, 8, 16

_NULL_INF = null_inf()

_UNIT_NORMAL_TOL = 1e-9


def as_coords(p) -> np.ndarray:
    """Coerce to a finite float (3,) array; raises ValueError otherwise."""
    arr = np.asarray(p, dtype=np.float64)
    if arr.shape != (3,):
        raise ValueError(f"expected 3 coordinates, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("coordinates must be finite")
    return arr


def point(p) -> Multivector:
    """Embed a Euclidean point into the conformal algebra."""
    x, y, z = map(float, as_coords(p))
    # Left-to-right scalar arithmetic keeps point(p) | point(p) exactly -0.5*0,
    # because the contraction accumulates x*x, y*y, z*z in the same order.
    half_sq = 0.5 * (x * x + y * y + z * z)
    out = np.zeros(BLADE_COUNT)
    out[_E1], out[_E2], out[_E3] = x, y, z
    out[_E0] = 1.0
    out[_EINF] = half_sq
    return Multivector._raw(out)


def sphere(center, radius: float) -> Multivector:
    """IPNS sphere: point(center) - 0.5*r^2 * e_inf."""
    radius = float(radius)
    if not radius >= 0.0:
        raise ValueError(f"sphere radius must be >= 0, got {radius}")
    out = np.array(point(center).coeffs)
    out[_EINF] -= 0.5 * radius * radius
    return Multivector._raw(out)


def plane(normal, d: float) -> Multivector:
    """IPNS plane n + d*e_inf; n must be unit length, d is the offset in mm."""
    n = as_coords(normal)
    if abs(float(np.linalg.norm(n)) - 1.0) > _UNIT_NORMAL_TOL:
        raise ValueError("plane normal must be unit length")
    out = np.zeros(BLADE_COUNT)
    out[_E1], out[_E2], out[_E3] = n
    out[_EINF] = float(d)
    return Multivector._raw(out)


def line_opns(p1: Multivector, p2: Multivector) -> Multivector:
    """OPNS line through two conformal points: P1 ^ P2 ^ e_inf."""
    return p1 ^ p2 ^ _NULL_INF


def circle_opns(p1: Multivector, p2: Multivector, p3: Multivector) -> Multivector:
    """OPNS circle through three conformal points: P1 ^ P2 ^ P3."""
    return p1 ^ p2 ^ p3


def plane_opns(p1: Multivector, p2: Multivector, p3: Multivector) -> Multivector:
    """OPNS plane through three conformal points: P1 ^ P2 ^ P3 ^ e_inf."""
    return p1 ^ p2 ^ p3 ^ _NULL_INF


def sphere_opns(p1: Multivector, p2: Multivector, p3: Multivector, p4: Multivector) -> Multivector:
    """OPNS sphere through four conformal points: P1 ^ P2 ^ P3 ^ P4."""
    return p1 ^ p2 ^ p3 ^ p4


def circle_ipns(s1: Multivector, s2: Multivector) -> Multivector:
    """IPNS circle as the intersection pencil of two spheres: S1 ^ S2."""
    return s1 ^ s2


def line_ipns(pi1: Multivector, pi2: Multivector) -> Multivector:
    """IPNS line as the intersection pencil of two planes: pi1 ^ pi2."""
    return pi1 ^ pi2


@dataclass(frozen=True)
class ConformalObject:
    """A tagged geometric object: its kind, representation form, and blade.

    kind is one of "point", "sphere", "plane", "circle", "line"; form is
    "ipns" or "opns".
    """

    kind: str
    form: str
    rep: Multivector
