"""Conformal-geometric-algebra collision checking for robots modeled as
unions of closed balls and capsules.

The package is organized bottom-up:

* cga:        dense multivector arithmetic over the 5D conformal algebra
* objects:    conformal points, spheres, planes, circles, lines
* primitives: closed balls, axis segments, capsules
* distance:   the three squared-distance kernels (point-point,
              point-segment, segment-segment) with full case analysis
* collision:  pair predicates, robot models, evidence reports
* scene:      plain-text scene files plus the bundled two-arm scenario
* oracle:     independent brute-force references used by the tests
* cli:        `cgacollide check|dist|selftest`

All distances are SQUARED millimeters unless a name says otherwise.
"""

from .cga import (
    BLADE_COUNT,
    DIMENSION,
    SIGNATURE,
    Multivector,
    geometric,
    inner,
    mbasis,
    null_inf,
    null_zero,
    outer,
    scalar,
    scalar_part,
    zero,
)
from .collision import (
    CollisionReport,
    Component,
    PairCheck,
    RobotModel,
    ball_capsule_collide,
    balls_collide,
    capsules_collide,
    components_collide,
    components_equal,
    iter_pair_checks,
    robot_union_fold,
    robots_collide,
    robots_collide_any,
    robots_equal,
)
from .distance import (
    PARALLEL_EPS,
    ClosestPair,
    SegmentPairCoefficients,
    StationaryPoint,
    center_dist_fa,
    center_dist_fb,
    center_dist_fc,
    segment_pair_coefficients,
    segment_pair_quadratic,
    stationary_point,
)
from .objects import (
    ConformalObject,
    as_coords,
    circle_ipns,
    circle_opns,
    line_ipns,
    line_opns,
    plane,
    plane_opns,
    point,
    sphere,
    sphere_opns,
)
from .oracle import (
    DEFAULT_GRID_1D,
    DEFAULT_GRID_2D,
    GridSpec,
    euclid_reference_distance2,
    grid_upper_slack,
    oracle_point_segment,
    oracle_segment_segment,
)
from .primitives import (
    DEGENERACY_EPS2,
    Capsule,
    ClosedBall,
    Segment,
    ball_contains,
    capsule_contains,
    capsule_degenerate_as_ball,
    segment_point_at,
)
from .scene import (
    Scene,
    SceneError,
    bundled_scene_path,
    load_scene,
    load_table3,
    parse_scene,
    serialize_scene,
)

__version__ = "0.1.0"
