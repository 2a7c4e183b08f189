"""Pairwise collision predicates and the robot-as-union-of-components model.

A pair of primitives collides iff the squared distance between their center
sets is at most the squared sum of their radii.  Tangency (distance exactly
equal to the radius sum) counts as a collision: the primitives are closed
sets, so touching boundaries intersect.

Two robots collide iff some component pair collides; the report enumerates
every pair in lexicographic (i, j) order as audit evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Union

import numpy as np

from .distance import center_dist_fa, center_dist_fb, center_dist_fc
from .primitives import Capsule, ClosedBall

Component = Union[ClosedBall, Capsule]

_EQUAL_TOL = 1e-12


def balls_collide(b1: ClosedBall, b2: ClosedBall) -> bool:
    sq = center_dist_fa(b1.center, b2.center)
    rsum = b1.radius + b2.radius
    return sq <= rsum * rsum


def ball_capsule_collide(ball: ClosedBall, capsule: Capsule) -> bool:
    sq = center_dist_fb(ball.center, capsule.axis).squared_distance
    rsum = ball.radius + capsule.radius
    return sq <= rsum * rsum


def capsules_collide(c1: Capsule, c2: Capsule) -> bool:
    sq = center_dist_fc(c1.axis, c2.axis).squared_distance
    rsum = c1.radius + c2.radius
    return sq <= rsum * rsum


def components_collide(a: Component, b: Component) -> tuple[bool, float, float]:
    """Dispatch on component kinds; returns (colliding, squared distance,
    squared threshold)."""
    if isinstance(a, ClosedBall):
        if isinstance(b, ClosedBall):
            sq = center_dist_fa(a.center, b.center)
        else:
            sq = center_dist_fb(a.center, b.axis).squared_distance
    else:
        if isinstance(b, ClosedBall):
            sq = center_dist_fb(b.center, a.axis).squared_distance
        else:
            sq = center_dist_fc(a.axis, b.axis).squared_distance
    rsum = a.radius + b.radius
    threshold = rsum * rsum
    return sq <= threshold, sq, threshold


def robot_union_fold(m: int, n: int, component_at: Callable[[int], Component]) -> list[Component]:
    """Materialize the indexed union over the range m..n.

    Follows the recursive build rules: the range m..0 holds component 0 only
    when m = 0; extending the upper bound to n appends component n exactly
    when m <= n.  An inverted range yields an empty list.
    """
    if m < 0 or n < 0:
        raise ValueError("component indices are natural numbers")
    if n == 0:
        return [component_at(0)] if m == 0 else []
    rest = robot_union_fold(m, n - 1, component_at)
    if m <= n:
        rest.append(component_at(n))
    return rest


@dataclass(frozen=True)
class RobotModel:
    """Named, ordered sequence of components, indexed from 0."""

    name: str
    components: tuple[Component, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError(f"robot {self.name!r} has no components")

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class PairCheck:
    """Evidence for one component pair: distances in mm^2."""

    i: int
    j: int
    squared_distance: float
    threshold: float
    colliding: bool


@dataclass(frozen=True)
class CollisionReport:
    verdict: bool
    pairs: tuple[PairCheck, ...]


def iter_pair_checks(
    r1: RobotModel, r2: RobotModel, *, skip_adjacent: bool = False
) -> Iterator[PairCheck]:
    """Yield pair evidence in lexicographic (i, j) order.

    skip_adjacent drops pairs with |i - j| <= 1; meant for checking a robot
    against itself, where joint-connected links always touch.
    """
    for i, a in enumerate(r1.components):
        for j, b in enumerate(r2.components):
            if skip_adjacent and abs(i - j) <= 1:
                continue
            colliding, sq, threshold = components_collide(a, b)
            yield PairCheck(i, j, sq, threshold, colliding)


def robots_collide(
    r1: RobotModel, r2: RobotModel, *, skip_adjacent: bool = False
) -> CollisionReport:
    """Check every component pair and report complete evidence."""
    pairs = tuple(iter_pair_checks(r1, r2, skip_adjacent=skip_adjacent))
    return CollisionReport(any(p.colliding for p in pairs), pairs)


def robots_collide_any(
    r1: RobotModel, r2: RobotModel, *, skip_adjacent: bool = False
) -> bool:
    """Boolean-only variant; stops at the first colliding pair."""
    return any(p.colliding for p in iter_pair_checks(r1, r2, skip_adjacent=skip_adjacent))


def components_equal(a: Component, b: Component, tol: float = _EQUAL_TOL) -> bool:
    if isinstance(a, ClosedBall) != isinstance(b, ClosedBall):
        return False
    if abs(a.radius - b.radius) > tol:
        return False
    if isinstance(a, ClosedBall):
        return bool(np.all(np.abs(a.center - b.center) <= tol))
    return bool(
        np.all(np.abs(a.axis.start - b.axis.start) <= tol)
        and np.all(np.abs(a.axis.end - b.axis.end) <= tol)
    )


def robots_equal(r1: RobotModel, r2: RobotModel, tol: float = _EQUAL_TOL) -> bool:
    """True when both robots map every shared index to an equal component."""
    if len(r1) != len(r2):
        return False
    return all(
        components_equal(a, b, tol) for a, b in zip(r1.components, r2.components)
    )
