"""Command-line front-end: collision check, distance matrix, self test.

Exit codes are script-friendly: 0 means no collision (or all self-test
checks passed), 1 means collision (or a failed check), 2 means a usage or
input error, so `cgacollide check scene && deploy` refuses to proceed on
contact.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .cga import SIGNATURE, _build_tables, _product, null_inf, null_zero
from .collision import (
    CollisionReport,
    PairCheck,
    RobotModel,
    ball_capsule_collide,
    balls_collide,
    iter_pair_checks,
    robot_union_fold,
    robots_collide,
)
from .objects import point
from .primitives import Capsule, ClosedBall, Segment, capsule_degenerate_as_ball
from .scene import Scene, SceneError, load_scene


@dataclass
class CliConfig:
    subcommand: str
    scene_path: str | None = None
    output_format: str = "text"
    skip_adjacent: bool = False
    report_all_pairs: bool = True


def _load_two_robots(cfg: CliConfig) -> tuple[Scene, RobotModel, RobotModel]:
    scene = load_scene(cfg.scene_path)
    if len(scene.robots) != 2:
        raise SceneError(f"collision check needs exactly 2 robots, got {len(scene.robots)}")
    return scene, scene.robots[0], scene.robots[1]


def _pair_payload(p: PairCheck) -> dict:
    return {
        "i": p.i,
        "j": p.j,
        "squared_distance": p.squared_distance,
        "threshold": p.threshold,
        "colliding": p.colliding,
    }


def run_check(cfg: CliConfig, out=None) -> int:
    """Collision check between the two robots of a scene.

    Returns 1 on collision, 0 on no collision, 2 on input error.
    """
    out = out if out is not None else sys.stdout
    try:
        scene, r1, r2 = _load_two_robots(cfg)
    except (OSError, SceneError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if cfg.report_all_pairs:
        report = robots_collide(r1, r2, skip_adjacent=cfg.skip_adjacent)
    else:
        pairs: list[PairCheck] = []
        verdict = False
        for p in iter_pair_checks(r1, r2, skip_adjacent=cfg.skip_adjacent):
            if p.colliding:
                pairs = [p]
                verdict = True
                break
        report = CollisionReport(verdict, tuple(pairs))

    if cfg.output_format == "json":
        payload = {
            "scene": cfg.scene_path,
            "skip_adjacent": cfg.skip_adjacent,
            "verdict": report.verdict,
            "pairs": [_pair_payload(p) for p in report.pairs],
        }
        print(json.dumps(payload), file=out)
    else:
        print(f"scene: {cfg.scene_path}", file=out)
        print(
            f"robots: {r1.name} ({len(r1)} components) vs {r2.name} ({len(r2)} components)",
            file=out,
        )
        for p in report.pairs:
            state = "COLLISION" if p.colliding else "separate"
            print(
                f"pair i={p.i} j={p.j}  squared={p.squared_distance:.6g}"
                f"  threshold={p.threshold:.6g}  {state}",
                file=out,
            )
        print(f"verdict: {'collision' if report.verdict else 'no collision'}", file=out)
    return 1 if report.verdict else 0


def run_dist(cfg: CliConfig, out=None) -> int:
    """Pairwise squared/plain distance matrix between component centers.

    With two robots the matrix crosses them; with a single robot it is the
    robot against itself.
    """
    out = out if out is not None else sys.stdout
    try:
        scene = load_scene(cfg.scene_path)
        if len(scene.robots) > 2:
            raise SceneError(f"distance matrix needs 1 or 2 robots, got {len(scene.robots)}")
    except (OSError, SceneError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    r1 = scene.robots[0]
    r2 = scene.robots[1] if len(scene.robots) == 2 else r1
    rows = [
        (p.i, p.j, p.squared_distance, math.sqrt(p.squared_distance))
        for p in iter_pair_checks(r1, r2, skip_adjacent=cfg.skip_adjacent)
    ]
    if cfg.output_format == "json":
        payload = {
            "scene": cfg.scene_path,
            "robots": [r1.name, r2.name],
            "pairs": [
                {"i": i, "j": j, "squared_distance": sq, "distance": d}
                for i, j, sq, d in rows
            ],
        }
        print(json.dumps(payload), file=out)
    else:
        print(f"scene: {cfg.scene_path}", file=out)
        print(f"robots: {r1.name} vs {r2.name}", file=out)
        for i, j, sq, d in rows:
            print(f"pair i={i} j={j}  squared={sq:.6g}  distance={d:.6g}", file=out)
    return 0


def selftest_checks(signature=None) -> list[tuple[str, bool]]:
    """Run the embedded identity suite; returns (name, passed) pairs.

    A non-default diagonal signature can be injected to prove the suite
    actually detects a corrupted metric.
    """
    sig = SIGNATURE if signature is None else tuple(signature)
    tables = _build_tables(sig)

    def sp_geometric(x, y) -> float:
        return float(_product(x, y, tables["geometric"])[0])

    def sp_inner(x, y) -> float:
        return float(_product(x, y, tables["inner"])[0])

    e0 = null_zero().coeffs
    einf = null_inf().coeffs
    checks: list[tuple[str, bool]] = []
    checks.append(("null-zero-squares-to-zero", sp_geometric(e0, e0) == 0.0))
    checks.append(("null-inf-squares-to-zero", sp_geometric(einf, einf) == 0.0))
    checks.append(("null-contraction-is-minus-one", sp_inner(e0, einf) == -1.0))

    rng = np.random.default_rng(20240917)
    ok = True
    for _ in range(200):
        p = rng.uniform(-1e4, 1e4, 3)
        q = rng.uniform(-1e4, 1e4, 3)
        got = 2.0 * abs(sp_inner(point(p).coeffs, point(q).coeffs))
        want = float((p - q) @ (p - q))
        if abs(got - want) > 1e-9 * max(1.0, want):
            ok = False
            break
    checks.append(("distance-identity", ok))

    seg = Segment((3.0, -2.0, 7.0), (3.0, -2.0, 7.0))
    ok = all(np.array_equal(seg.point_at(t), seg.start) for t in (0.0, 0.25, 0.5, 1.0))
    checks.append(("degenerate-segment-is-point", ok))

    caps = Capsule(Segment((1.0, 2.0, 3.0), (1.0, 2.0, 3.0)), 2.0)
    as_ball = capsule_degenerate_as_ball(caps)
    ok = as_ball is not None
    if ok:
        for _ in range(50):
            partner = ClosedBall(rng.uniform(-10, 10, 3), float(rng.uniform(0, 5)))
            if ball_capsule_collide(partner, caps) != balls_collide(partner, as_ball):
                ok = False
                break
    checks.append(("degenerate-capsule-matches-ball", ok))

    probe = ClosedBall((0.0, 0.0, 0.0), 1.0)
    built = robot_union_fold(4, 4, lambda i: probe)
    checks.append(("single-component-robot", len(built) == 1 and built[0] is probe))

    return checks


def run_selftest(cfg: CliConfig | None = None, out=None, signature=None) -> int:
    """Print each identity check; exit 0 only if every one passes."""
    out = out if out is not None else sys.stdout
    checks = selftest_checks(signature)
    for name, passed in checks:
        print(f"{'ok  ' if passed else 'FAIL'} {name}", file=out)
    failed = sum(1 for _, passed in checks if not passed)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=out)
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cgacollide",
        description="Collision checking for robots modeled as balls and capsules.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_scene_args(p):
        p.add_argument("scene", nargs="?", help="scene file path")
        p.add_argument("--scene", dest="scene_opt", metavar="PATH", help="scene file path")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--skip-adjacent", action="store_true",
                       help="drop pairs with |i-j| <= 1 (self-check mode)")

    check = sub.add_parser("check", help="collision check between two robots")
    add_scene_args(check)
    check.add_argument("--all-pairs", action=argparse.BooleanOptionalAction, default=True,
                       help="report every pair (default); --no-all-pairs stops at the first hit")

    dist = sub.add_parser("dist", help="pairwise distance matrix")
    add_scene_args(dist)

    sub.add_parser("selftest", help="run the embedded identity checks")
    return parser


def _config_from_args(args) -> CliConfig:
    scene_path = None
    if args.subcommand in ("check", "dist"):
        if args.scene and args.scene_opt:
            print("error: give the scene either positionally or via --scene, not both",
                  file=sys.stderr)
            raise SystemExit(2)
        scene_path = args.scene or args.scene_opt
        if scene_path is None:
            print("error: a scene file is required", file=sys.stderr)
            raise SystemExit(2)
    return CliConfig(
        subcommand=args.subcommand,
        scene_path=scene_path,
        output_format=getattr(args, "format", "text"),
        skip_adjacent=getattr(args, "skip_adjacent", False),
        report_all_pairs=getattr(args, "all_pairs", True),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = _config_from_args(args)
    if cfg.subcommand == "check":
        return run_check(cfg)
    if cfg.subcommand == "dist":
        return run_dist(cfg)
    return run_selftest(cfg)


def entrypoint() -> None:
    sys.exit(main())
