"""Robot component primitives: closed balls, axis segments, capsules.

All membership predicates use closed-set semantics (boundary points are
inside).  Numerically they evaluate the Euclidean reduction of the
conformal sign test 0 <= 0.5 * (r^2 - |x - p|^2); the conformal form itself
is exercised by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .objects import as_coords

# Segments shorter than this (squared mm) behave as single points.
DEGENERACY_EPS2 = 1e-12


@dataclass(frozen=True)
class ClosedBall:
    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_coords(self.center))
        r = float(self.radius)
        if not r >= 0.0:
            raise ValueError(f"ball radius must be >= 0, got {r}")
        object.__setattr__(self, "radius", r)


@dataclass(frozen=True)
class Segment:
    """Directed segment sc -> ec; coincident endpoints are allowed."""

    start: np.ndarray
    end: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "start", as_coords(self.start))
        object.__setattr__(self, "end", as_coords(self.end))

    @property
    def direction(self) -> np.ndarray:
        return self.end - self.start

    @property
    def length2(self) -> float:
        d = self.direction
        return float(d @ d)

    def is_degenerate(self) -> bool:
        return self.length2 < DEGENERACY_EPS2

    def point_at(self, t: float) -> np.ndarray:
        return self.start + t * self.direction


@dataclass(frozen=True)
class Capsule:
    axis: Segment
    radius: float

    def __post_init__(self):
        r = float(self.radius)
        if not r >= 0.0:
            raise ValueError(f"capsule radius must be >= 0, got {r}")
        object.__setattr__(self, "radius", r)


def segment_point_at(seg: Segment, t: float) -> np.ndarray:
    """Affine interpolation sc + t*(ec - sc) for t in [0, 1]."""
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"segment parameter must lie in [0, 1], got {t}")
    return seg.point_at(t)


def ball_contains(ball: ClosedBall, x) -> bool:
    """True iff x lies in the closed ball (boundary included)."""
    x = as_coords(x)
    diff = x - ball.center
    return float(diff @ diff) <= ball.radius * ball.radius


def capsule_contains(capsule: Capsule, x) -> bool:
    """True iff x lies within capsule.radius of the axis segment."""
    from .distance import center_dist_fb

    x = as_coords(x)
    sq = center_dist_fb(x, capsule.axis).squared_distance
    return sq <= capsule.radius * capsule.radius


def capsule_degenerate_as_ball(capsule: Capsule) -> Optional[ClosedBall]:
    """The equivalent ball when the axis collapses to a point, else None."""
    if capsule.axis.is_degenerate():
        return ClosedBall(capsule.axis.start, capsule.radius)
    return None
