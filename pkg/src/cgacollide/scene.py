"""Line-oriented scene files describing robots as lists of primitives.

Format, one record per line; '#' starts a comment, blank lines are ignored:

    robot <name>
    capsule <sx> <sy> <sz> <ex> <ey> <ez> <r>
    ball <cx> <cy> <cz> <r>

Component lines attach to the most recent robot, indexed from 0.  All
numbers are decimal millimeters.  Serialization writes the shortest decimal
that round-trips, so parse(serialize(scene)) reproduces every number
bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

import numpy as np

from .collision import Component, RobotModel
from .primitives import Capsule, ClosedBall, Segment


class SceneError(ValueError):
    """Parse or validation failure; line is 1-based when applicable."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Scene:
    robots: tuple[RobotModel, ...]

    def __post_init__(self):
        object.__setattr__(self, "robots", tuple(self.robots))
        if not self.robots:
            raise SceneError("no robots")
        names = [r.name for r in self.robots]
        if len(set(names)) != len(names):
            raise SceneError(f"duplicate robot name in {names}")


def _parse_floats(fields: list[str], lineno: int) -> list[float]:
    values = []
    for tok in fields:
        try:
            x = float(tok)
        except ValueError:
            raise SceneError(f"not a number: {tok!r}", lineno) from None
        if not np.isfinite(x):
            raise SceneError(f"non-finite number: {tok!r}", lineno)
        values.append(x)
    return values


def parse_scene(text: str) -> Scene:
    """Parse scene text into a validated Scene."""
    robots: list[RobotModel] = []
    seen_names: set[str] = set()
    current_name: str | None = None
    current_line = 0
    current_components: list[Component] = []

    def flush():
        if current_name is None:
            return
        if not current_components:
            raise SceneError(f"robot {current_name!r} has no components", current_line)
        robots.append(RobotModel(current_name, tuple(current_components)))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind, args = fields[0], fields[1:]
        if kind == "robot":
            if len(args) != 1:
                raise SceneError("robot line takes exactly one name", lineno)
            if args[0] in seen_names:
                raise SceneError(f"duplicate robot name {args[0]!r}", lineno)
            flush()
            seen_names.add(args[0])
            current_name = args[0]
            current_line = lineno
            current_components = []
        elif kind == "capsule":
            if current_name is None:
                raise SceneError("component before any robot line", lineno)
            if len(args) != 7:
                raise SceneError(f"capsule takes 7 numbers, got {len(args)}", lineno)
            sx, sy, sz, ex, ey, ez, r = _parse_floats(args, lineno)
            if r < 0:
                raise SceneError(f"negative radius {r}", lineno)
            current_components.append(Capsule(Segment((sx, sy, sz), (ex, ey, ez)), r))
        elif kind == "ball":
            if current_name is None:
                raise SceneError("component before any robot line", lineno)
            if len(args) != 4:
                raise SceneError(f"ball takes 4 numbers, got {len(args)}", lineno)
            cx, cy, cz, r = _parse_floats(args, lineno)
            if r < 0:
                raise SceneError(f"negative radius {r}", lineno)
            current_components.append(ClosedBall((cx, cy, cz), r))
        else:
            raise SceneError(f"unknown record {kind!r}", lineno)

    flush()
    if not robots:
        raise SceneError("no robots")
    return Scene(tuple(robots))


def _fmt(x: float) -> str:
    return repr(float(x))


def serialize_scene(scene: Scene) -> str:
    """Render a Scene back to text; numbers round-trip bit-exactly."""
    lines: list[str] = []
    for robot in scene.robots:
        lines.append(f"robot {robot.name}")
        for comp in robot.components:
            if isinstance(comp, ClosedBall):
                cx, cy, cz = comp.center
                lines.append(f"ball {_fmt(cx)} {_fmt(cy)} {_fmt(cz)} {_fmt(comp.radius)}")
            else:
                sx, sy, sz = comp.axis.start
                ex, ey, ez = comp.axis.end
                lines.append(
                    "capsule "
                    f"{_fmt(sx)} {_fmt(sy)} {_fmt(sz)} "
                    f"{_fmt(ex)} {_fmt(ey)} {_fmt(ez)} {_fmt(comp.radius)}"
                )
    return "\n".join(lines) + "\n"


def load_scene(path) -> Scene:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scene(fh.read())


def bundled_scene_path(name: str) -> str:
    """Filesystem path of a scene shipped with the package.

    Available: "table3.scene" (the two-arm collision scenario) and
    "separated.scene" (the same scenario with the second robot moved
    +10000 mm in y, collision-free).
    """
    ref = resources.files("cgacollide").joinpath("data", name)
    if not ref.is_file():
        raise FileNotFoundError(f"no bundled scene named {name!r}")
    return str(ref)


def load_table3() -> Scene:
    """The bundled two-robot scenario (six capsule links r=15 plus a ball
    end effector r=16 per arm)."""
    return load_scene(bundled_scene_path("table3.scene"))
