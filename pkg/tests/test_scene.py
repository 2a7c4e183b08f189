import numpy as np
import pytest

from cgacollide.collision import RobotModel, robots_equal
from cgacollide.primitives import Capsule, ClosedBall, Segment
from cgacollide.scene import (
    Scene,
    SceneError,
    bundled_scene_path,
    load_scene,
    load_table3,
    parse_scene,
    serialize_scene,
)


def scenes_equal(a: Scene, b: Scene) -> bool:
    if len(a.robots) != len(b.robots):
        return False
    for ra, rb in zip(a.robots, b.robots):
        if ra.name != rb.name or not robots_equal(ra, rb, tol=0.0):
            return False
    return True


class TestParse:
    def test_bundled_table3(self):
        scene = load_table3()
        assert len(scene.robots) == 2
        for robot in scene.robots:
            assert len(robot) == 7
            caps = [c for c in robot.components if isinstance(c, Capsule)]
            balls = [c for c in robot.components if isinstance(c, ClosedBall)]
            assert len(caps) == 6 and all(c.radius == 15.0 for c in caps)
            assert len(balls) == 1 and balls[0].radius == 16.0
        assert np.array_equal(scene.robots[0].components[6].center, (70, 90, 130))
        assert np.array_equal(scene.robots[1].components[6].center, (70, 30, 130))

    def test_empty_input(self):
        with pytest.raises(SceneError, match="no robots"):
            parse_scene("")

    def test_negative_radius(self):
        text = "robot r\ncapsule 0 0 0 0 0 65 -1\n"
        with pytest.raises(SceneError, match="negative radius") as exc:
            parse_scene(text)
        assert exc.value.line == 2

    def test_component_before_robot(self):
        with pytest.raises(SceneError, match="before any robot") as exc:
            parse_scene("ball 0 0 0 1\n")
        assert exc.value.line == 1

    def test_bad_number_reports_line(self):
        text = "robot r\nball 0 0 zero 1\n"
        with pytest.raises(SceneError, match="not a number") as exc:
            parse_scene(text)
        assert exc.value.line == 2

    def test_nonfinite_number_rejected(self):
        with pytest.raises(SceneError, match="non-finite"):
            parse_scene("robot r\nball 0 0 inf 1\n")

    def test_wrong_field_count(self):
        with pytest.raises(SceneError, match="takes 7 numbers"):
            parse_scene("robot r\ncapsule 0 0 0 1\n")

    def test_unknown_record(self):
        with pytest.raises(SceneError, match="unknown record") as exc:
            parse_scene("robot r\nball 0 0 0 1\ncylinder 1 2 3\n")
        assert exc.value.line == 3

    def test_duplicate_robot_names(self):
        text = "robot r\nball 0 0 0 1\nrobot r\nball 1 1 1 1\n"
        with pytest.raises(SceneError, match="duplicate"):
            parse_scene(text)

    def test_robot_without_components(self):
        with pytest.raises(SceneError, match="no components"):
            parse_scene("robot a\nrobot b\nball 0 0 0 1\n")

    def test_comments_and_blank_lines_ignored(self):
        text = "# heading\n\nrobot r  # trailing\n  ball 0 0 0 1\n\n"
        scene = parse_scene(text)
        assert len(scene.robots) == 1
        assert len(scene.robots[0]) == 1

    def test_single_ball_robot_two_lines(self):
        scene = parse_scene("robot solo\nball 1 2 3 4\n")
        out = serialize_scene(scene)
        assert out.splitlines() == ["robot solo", "ball 1.0 2.0 3.0 4.0"]


class TestRoundTrip:
    def test_table3_round_trips(self):
        scene = load_table3()
        again = parse_scene(serialize_scene(scene))
        assert scenes_equal(scene, again)

    def test_fractional_values_bit_exact(self):
        scene = parse_scene("robot r\ncapsule 0 0 65 0 0 130 15\nball 0 0 97.5 1.25\n")
        again = parse_scene(serialize_scene(scene))
        ball = again.robots[0].components[1]
        assert ball.center[2] == 97.5
        assert ball.radius == 1.25

    def test_randomized_scenes_round_trip(self):
        rng = np.random.default_rng(301)
        for case in range(100):
            robots = []
            for rid in range(int(rng.integers(1, 4))):
                comps = []
                for _ in range(int(rng.integers(1, 6))):
                    if rng.random() < 0.5:
                        comps.append(
                            ClosedBall(rng.uniform(-1e4, 1e4, 3), float(rng.uniform(0, 50)))
                        )
                    else:
                        comps.append(
                            Capsule(
                                Segment(
                                    rng.uniform(-1e4, 1e4, 3), rng.uniform(-1e4, 1e4, 3)
                                ),
                                float(rng.uniform(0, 50)),
                            )
                        )
                robots.append(RobotModel(f"robot{case}_{rid}", tuple(comps)))
            scene = Scene(tuple(robots))
            again = parse_scene(serialize_scene(scene))
            assert scenes_equal(scene, again)


class TestBundles:
    def test_both_bundles_exist(self):
        for name in ("table3.scene", "separated.scene"):
            scene = load_scene(bundled_scene_path(name))
            assert len(scene.robots) == 2

    def test_unknown_bundle(self):
        with pytest.raises(FileNotFoundError):
            bundled_scene_path("missing.scene")

    def test_separated_scene_is_translation(self):
        base = load_table3()
        far = load_scene(bundled_scene_path("separated.scene"))
        shift = np.array([0.0, 10000.0, 0.0])
        for c1, c2 in zip(base.robots[1].components, far.robots[1].components):
            if isinstance(c1, ClosedBall):
                assert np.array_equal(c1.center + shift, c2.center)
            else:
                assert np.array_equal(c1.axis.start + shift, c2.axis.start)
                assert np.array_equal(c1.axis.end + shift, c2.axis.end)
