"""Shortest-distance models between ball centers and capsule axes.

All three center_dist functions return SQUARED distances (mm^2): the value
2 * |scalar_part(point(p) | point(q))| equals |p - q|^2, and every collision
threshold downstream compares against a squared radius sum.  Use
math.sqrt(...) or ClosestPair.distance when a plain distance is needed for
reporting.

center_dist_fa   squared distance between two points
center_dist_fb   squared distance from a point to a segment
center_dist_fc   squared distance between two segments

The point-segment case split:

    degenerate segment        -> point-point
    projection parameter <= 0 -> start endpoint
    projection parameter >= 1 -> end endpoint
    otherwise                 -> interior projection point

The segment-segment quadratic over (s1, s2) in [0, 1]^2 uses

    u = ec1 - sc1, v = ec2 - sc2, w = sc1 - sc2
    a = u.u, b = -(u.v), c = v.v, d = u.w, e = -(v.w), f = w.w
    Q(s1, s2) = a*s1^2 + c*s2^2 + 2*b*s1*s2 + 2*d*s1 + 2*e*s2 + f

whose unconstrained stationary point is

    s1k = (b*e - c*d) / (a*c - b^2)
    s2k = (b*d - a*e) / (a*c - b^2)

valid when a*c - b^2 != 0 (non-parallel segments).  When the stationary
point is unavailable or falls outside the unit square, the minimum lies on
the boundary and is found as the best of the four clamped one-dimensional
problems (each one a point-segment query against an endpoint).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cga import inner, scalar_part
from .objects import as_coords, point
from .primitives import DEGENERACY_EPS2, Segment

# Relative threshold on a*c - b^2 below which segments count as parallel.
PARALLEL_EPS = 1e-10


@dataclass(frozen=True)
class ClosestPair:
    """Closest points of two parameterized sets and their squared distance.

    For point-segment queries the query point occupies the first slot with
    s1 fixed at 0.
    """

    s1: float
    s2: float
    q1: np.ndarray
    q2: np.ndarray
    squared_distance: float

    @property
    def distance(self) -> float:
        return math.sqrt(self.squared_distance)


@dataclass(frozen=True)
class SegmentPairCoefficients:
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray
    a: float
    b: float
    c: float
    d: float
    e: float
    f: float


@dataclass(frozen=True)
class StationaryPoint:
    """Unconstrained minimizer of the segment-pair quadratic.

    exists is False for (near-)parallel segments; s1k/s2k are then 0.
    """

    s1k: float
    s2k: float
    exists: bool


def center_dist_fa(p1, p2) -> float:
    """Squared distance between two points, via the conformal inner product."""
    p1 = as_coords(p1)
    p2 = as_coords(p2)
    # fixed argument order keeps the float result exactly symmetric
    if tuple(p2) < tuple(p1):
        p1, p2 = p2, p1
    return 2.0 * abs(scalar_part(inner(point(p1), point(p2))))


def center_dist_fb(p, seg: Segment) -> ClosestPair:
    """Squared distance from a point to a segment, with the closest point."""
    p = as_coords(p)
    direction = seg.direction
    denom = float(direction @ direction)
    if denom < DEGENERACY_EPS2:
        s = 0.0
        q = seg.start
    else:
        t = float((p - seg.start) @ direction)
        if t <= 0.0:
            s = 0.0
            q = seg.start
        elif denom <= t:
            s = 1.0
            q = seg.end
        else:
            s = t / denom
            q = seg.start + s * direction
    return ClosestPair(0.0, s, p, q, center_dist_fa(p, q))


def segment_pair_coefficients(seg1: Segment, seg2: Segment) -> SegmentPairCoefficients:
    """Quadratic coefficients of the squared distance between segment points."""
    u = seg1.direction
    v = seg2.direction
    w = seg1.start - seg2.start
    return SegmentPairCoefficients(
        u=u,
        v=v,
        w=w,
        a=float(u @ u),
        b=-float(u @ v),
        c=float(v @ v),
        d=float(u @ w),
        e=-float(v @ w),
        f=float(w @ w),
    )


def segment_pair_quadratic(co: SegmentPairCoefficients, s1: float, s2: float) -> float:
    """Evaluate the squared-distance quadratic Q(s1, s2)."""
    return (
        co.a * s1 * s1
        + co.c * s2 * s2
        + 2.0 * co.b * s1 * s2
        + 2.0 * co.d * s1
        + 2.0 * co.e * s2
        + co.f
    )


def stationary_point(co: SegmentPairCoefficients) -> StationaryPoint:
    """Zero of the gradient of Q, when the segments are not parallel."""
    det = co.a * co.c - co.b * co.b
    if abs(det) <= PARALLEL_EPS * max(co.a * co.c, 1.0):
        return StationaryPoint(0.0, 0.0, False)
    s1k = (co.b * co.e - co.c * co.d) / det
    s2k = (co.b * co.d - co.a * co.e) / det
    return StationaryPoint(s1k, s2k, True)


def center_dist_fc(seg1: Segment, seg2: Segment) -> ClosestPair:
    """Squared distance between two segments, with the closest point pair.

    Ties between boundary candidates break toward the lexicographically
    smallest (s1, s2), so results are deterministic for parallel overlaps.
    """
    deg1 = seg1.is_degenerate()
    deg2 = seg2.is_degenerate()
    if deg1 and deg2:
        return ClosestPair(
            0.0, 0.0, seg1.start, seg2.start, center_dist_fa(seg1.start, seg2.start)
        )
    if deg1:
        r = center_dist_fb(seg1.start, seg2)
        return ClosestPair(0.0, r.s2, seg1.start, r.q2, r.squared_distance)
    if deg2:
        r = center_dist_fb(seg2.start, seg1)
        return ClosestPair(r.s2, 0.0, r.q2, seg2.start, r.squared_distance)

    co = segment_pair_coefficients(seg1, seg2)
    st = stationary_point(co)
    if st.exists and 0.0 <= st.s1k <= 1.0 and 0.0 <= st.s2k <= 1.0:
        q1 = seg1.point_at(st.s1k)
        q2 = seg2.point_at(st.s2k)
        return ClosestPair(st.s1k, st.s2k, q1, q2, center_dist_fa(q1, q2))

    # Boundary minimum: clamp each edge of the unit square in turn.
    r = center_dist_fb(seg1.start, seg2)
    candidates = [ClosestPair(0.0, r.s2, seg1.start, r.q2, r.squared_distance)]
    r = center_dist_fb(seg1.end, seg2)
    candidates.append(ClosestPair(1.0, r.s2, seg1.end, r.q2, r.squared_distance))
    r = center_dist_fb(seg2.start, seg1)
    candidates.append(ClosestPair(r.s2, 0.0, r.q2, seg2.start, r.squared_distance))
    r = center_dist_fb(seg2.end, seg1)
    candidates.append(ClosestPair(r.s2, 1.0, r.q2, seg2.end, r.squared_distance))

    best = candidates[0]
    for cand in candidates[1:]:
        if cand.squared_distance < best.squared_distance or (
            cand.squared_distance == best.squared_distance
            and (cand.s1, cand.s2) < (best.s1, best.s2)
        ):
            best = cand
    return best
