import json
from fractions import Fraction as F

from fibercurve import jsonio
from fibercurve.birat import CurveWithPoints
from fibercurve.cli import EXIT_MATH, EXIT_OK, EXIT_USAGE, main
from fibercurve.config import validate
from fibercurve.family import AffinePoint, FamilyCurve
from fibercurve.fiber import ProjPoint, build_fiber
from fibercurve.search import search_ab


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


CFG123 = '{"r":2,"s":2,"alphas":["1","2","3"]}'


class TestScalarVerbs:
    def test_fiber_genus(self, capsys):
        code, out, _ = run(capsys, "fiber-genus", "--s", "2", "--n", "13")
        assert code == EXIT_OK
        assert out.strip() == "20481"

    def test_gonality_bound(self, capsys):
        code, out, _ = run(capsys, "gonality-bound", "--s", "2", "--n", "13")
        assert code == EXIT_OK and out.strip() == "2048"

    def test_family_genus(self, capsys):
        code, out, _ = run(capsys, "family-genus", "--r", "2", "--s", "2")
        assert code == EXIT_OK and out.strip() == "1"

    def test_classify(self, capsys):
        code, out, _ = run(capsys, "classify", "--s", "3", "--n", "2")
        assert code == EXIT_OK
        assert json.loads(out) == {"regime": "genus-one", "n0": 3}


class TestValidateVerb:
    def test_valid(self, capsys):
        code, out, _ = run(capsys, "validate", "--config", CFG123)
        assert code == EXIT_OK
        assert json.loads(out)["valid"] is True

    def test_duplicate_reported(self, capsys):
        cfg = '{"r":2,"s":2,"alphas":["1","-1"]}'
        code, out, _ = run(capsys, "validate", "--config", cfg)
        assert code == EXIT_MATH
        payload = json.loads(out)
        assert payload["valid"] is False
        assert any("alpha[0]^2 == alpha[1]^2" in v for v in payload["violations"])

    def test_malformed_is_usage_error(self, capsys):
        code, _, err = run(capsys, "validate", "--config", '{"nope": 1}')
        assert code == EXIT_USAGE
        assert json.loads(err)["error"] == "usage"

    def test_unreadable_path(self, capsys):
        code, _, err = run(capsys, "validate", "--config", "/nonexistent.json")
        assert code == EXIT_USAGE


class TestFiberVerbs:
    def test_build_json(self, capsys):
        code, out, _ = run(capsys, "fiber-build", "--config", CFG123)
        assert code == EXIT_OK
        system = jsonio.fiber_system_from_obj(json.loads(out))
        eq = system.equations[0]
        assert (eq.A, eq.B, eq.C) == (F(5), F(-4), F(1))

    def test_build_display_styles(self, capsys):
        code, out, _ = run(
            capsys, "fiber-build", "--config", CFG123, "--format", "display"
        )
        assert code == EXIT_OK
        assert out.strip() == "(6) Y_2^2 = (30) Y_0^2 + (-24) Y_1^2"
        code, out, _ = run(
            capsys,
            "fiber-build",
            "--config",
            CFG123,
            "--format",
            "display",
            "--style",
            "monic",
        )
        assert out.strip() == "Y_2^2 = (-5) Y_0^2 + (4) Y_1^2"

    def test_verify_pass_and_fail(self, capsys):
        point = '{"coords":["0","1","2"]}'
        code, out, _ = run(
            capsys, "fiber-verify", "--config", CFG123, "--point", point
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["on_fiber"] and payload["smooth"]
        bad = '{"coords":["1","1","1"]}'
        code, out, _ = run(
            capsys, "fiber-verify", "--config", CFG123, "--point", bad
        )
        assert code == EXIT_MATH
        assert json.loads(out)["on_fiber"] is False


class TestCorrespondenceVerbs:
    def test_solve_ab(self, capsys):
        code, out, _ = run(
            capsys,
            "solve-ab",
            "--r", "2", "--s", "2",
            "--p0", "1,2",
            "--p1", "2,6",
        )
        assert code == EXIT_OK
        assert json.loads(out) == {"a": "14/3", "b": "-2/3"}

    def test_solve_ab_singular(self, capsys):
        code, _, err = run(
            capsys,
            "solve-ab",
            "--r", "2", "--s", "2",
            "--p0", "1,2",
            "--p1=-1,2",
        )
        assert code == EXIT_MATH

    def test_push_lift_round_trip(self, capsys):
        cwp = CurveWithPoints(
            curve=FamilyCurve(2, 2, F(1), F(3)),
            points=(
                AffinePoint(F(1), F(2)),
                AffinePoint(F(3), F(6)),
                AffinePoint(F(12), F(42)),
            ),
        )
        code, out, _ = run(
            capsys, "push", "--input", json.dumps(jsonio.cwp_to_obj(cwp))
        )
        assert code == EXIT_OK
        point_obj = json.loads(out)
        assert point_obj == {"coords": ["1", "3", "21"]}
        cfg = '{"r":2,"s":2,"alphas":["1","3","12"]}'
        code, out, _ = run(
            capsys,
            "lift",
            "--config", cfg,
            "--point", json.dumps(point_obj),
            "--scale", "2",
        )
        assert code == EXIT_OK
        lifted = jsonio.cwp_from_obj(json.loads(out))
        assert (lifted.curve.a, lifted.curve.b) == (F(1), F(3))

    def test_lift_obstruction(self, capsys):
        cfg = '{"r":2,"s":2,"alphas":["1","4","9"]}'
        point = '{"coords":["1","2","3"]}'
        code, _, err = run(capsys, "lift", "--config", cfg, "--point", point,
                           "--scale", "1")
        assert code == EXIT_MATH
        assert "degenerate" in err


class TestBatchVerbs:
    def test_conic_enumerate_lines(self, capsys):
        code, out, _ = run(
            capsys,
            "conic-enumerate",
            "--config", CFG123,
            "--count", "4",
            "--height", "20",
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert len(lines) == 4
        for line in lines:
            jsonio.cwp_from_obj(json.loads(line))

    def test_search_ab_report(self, capsys, tmp_path):
        cfg = '{"r":2,"s":2,"alphas":["1","3","12"]}'
        out_path = tmp_path / "report.json"
        code, out, _ = run(
            capsys,
            "search-ab",
            "--config", cfg,
            "--height", "3",
            "--workers", "1",
            "--out", str(out_path),
        )
        assert code == EXIT_OK
        report = jsonio.search_report_from_obj(
            json.loads(out_path.read_text())
        )
        assert (F(1), F(3)) in [(h.curve.a, h.curve.b) for h in report.hits]
        assert "evidence" in report.note

    def test_trivial_points(self, capsys):
        code, out, _ = run(
            capsys, "trivial-points", "--r", "2", "--s", "2", "--n", "2"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["verified_count"] == 64
        assert payload["sampled"] is False

    def test_trivial_points_cap(self, capsys):
        code, _, err = run(
            capsys, "trivial-points", "--r", "31", "--s", "2", "--n", "2"
        )
        assert code == EXIT_MATH

    def test_fixtures_verify(self, capsys):
        code, out, _ = run(capsys, "fixtures", "watkins14", "--verify")
        assert code == EXIT_OK
        assert json.loads(out)["verified"] is True


class TestJsonRoundTrips:
    def test_all_exchanged_types(self):
        cfg = validate(2, 2, [F(1), F(2), F(3), F(5)])
        system = build_fiber(cfg)
        curve = FamilyCurve(2, 2, F(3, 7), F(-22, 5))
        cwp = CurveWithPoints(
            curve=FamilyCurve(2, 2, F(1), F(3)),
            points=(AffinePoint(F(1), F(2)), AffinePoint(F(3), F(6))),
        )
        point = ProjPoint([F(1, 2), F(-3), F(7, 3), F(0)])
        report = search_ab(validate(2, 2, [F(1), F(3), F(12)]), 2)
        cases = [
            (curve, jsonio.curve_to_obj, jsonio.curve_from_obj),
            (cfg, jsonio.config_to_obj, jsonio.config_from_obj),
            (system, jsonio.fiber_system_to_obj, jsonio.fiber_system_from_obj),
            (cwp, jsonio.cwp_to_obj, jsonio.cwp_from_obj),
            (point, jsonio.proj_point_to_obj, jsonio.proj_point_from_obj),
            (
                report,
                jsonio.search_report_to_obj,
                jsonio.search_report_from_obj,
            ),
        ]
        for value, to_obj, from_obj in cases:
            emitted = json.dumps(to_obj(value))
            assert from_obj(json.loads(emitted)) == value

    def test_no_floats_anywhere(self):
        cfg = validate(2, 2, [F(1, 3), F(2, 7), F(3)])
        system = build_fiber(cfg)
        obj = jsonio.fiber_system_to_obj(system)

        def walk(node):
            if isinstance(node, float):
                raise AssertionError("float leaked into JSON")
            if isinstance(node, dict):
                for v in node.values():
                    walk(v)
            if isinstance(node, list):
                for v in node:
                    walk(v)

        walk(obj)
