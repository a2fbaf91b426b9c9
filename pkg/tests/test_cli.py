import json

import pytest

from conftest import EX1, EX2, EX3
from toricmink import cli
from toricmink.bounds import bound_report
from toricmink.code import build_table, min_distance
from toricmink.field import make_field
from toricmink.geometry import lattice_points, twice_area
from toricmink.minkowski import full_minkowski_length


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    assert code == 0
    return json.loads(out)


class TestParse:
    def test_text_format(self):
        P = cli.parse_polygon_text("# hexagon\n1 0\n0 1\n1 2\n3 3\n3 2\n2 0\n")
        assert P == EX3

    def test_json_format(self):
        assert cli.parse_polygon_text("[[0,0],[4,1],[1,4]]") == EX2

    def test_bad(self):
        for text in ("1 2 3\n", "a b\n", "[[0]]", "[1, 2"):
            with pytest.raises(cli.PolygonParseError):
                cli.parse_polygon_text(text)

    def test_bundled(self):
        assert cli.load_polygon("ex1_pentagon") == EX1
        assert cli.load_polygon("ex2_triangle") == EX2
        assert cli.load_polygon("ex3_hexagon") == EX3


class TestInfo:
    def test_pentagon_json(self, capsys):
        d = run_json(capsys, "info", "ex1_pentagon")
        assert d["schema"] == 1
        assert (d["twice_area"], d["total_points"], d["L"]) == (15, 12, 3)
        assert d["exceptional_maximal"] is True
        assert d["witness"]["exceptional"] is not None

    def test_matches_library(self, capsys):
        d = run_json(capsys, "info", "ex2_triangle")
        total, interior, boundary = lattice_points(EX2)
        assert (d["total_points"], d["interior"], d["boundary"]) == (total, interior, boundary)
        assert d["twice_area"] == twice_area(EX2)
        assert d["L"] == full_minkowski_length(EX2)[0]
        assert d["area"] == "7.5"

    def test_text(self, capsys):
        code, out, _ = run(capsys, "info", "ex3_hexagon")
        assert code == 0
        assert "full length L       3" in out

    def test_json_after_subcommand(self, capsys):
        code, out, _ = run(capsys, "info", "--json", "ex3_hexagon")
        assert code == 0 and json.loads(out)["L"] == 3

    def test_file(self, capsys, tmp_path):
        f = tmp_path / "tri.json"
        f.write_text("[[0,0],[1,0],[0,1]]")
        d = run_json(capsys, "info", str(f))
        assert d["classification"] == "UnitTriangle" and d["L"] == 1

    def test_degenerate_warns(self, capsys, tmp_path):
        f = tmp_path / "seg.txt"
        f.write_text("0 0\n2 0\n")
        code, _, err = run(capsys, "info", str(f))
        assert code == 0 and "degenerate" in err


class TestBounds:
    def test_pentagon(self, capsys):
        d = run_json(capsys, "bounds", "ex1_pentagon", "--q", "41")
        assert d == {"schema": 1, **bound_report(EX1, 41).to_json()}
        assert (d["branch"], d["threshold_q"], d["d_lower"]) == (1, 41, 1469)

    def test_triangle(self, capsys):
        d = run_json(capsys, "bounds", "ex2_triangle", "--q", "53")
        assert (d["branch"], d["threshold_q"], d["d_lower"]) == (2, 53, 2548)

    def test_text(self, capsys):
        code, out, _ = run(capsys, "bounds", "ex3_hexagon", "--q", "37")
        assert code == 0 and "sharpened q0        11" in out


class TestThresholds:
    @pytest.mark.parametrize("name,branch,q0", [
        ("ex1_pentagon", "exceptional", 41),
        ("ex2_triangle", "plain", 53),
        ("ex3_hexagon", "plain", 37),
    ])
    def test_examples(self, capsys, name, branch, q0):
        d = run_json(capsys, "thresholds", name)
        assert (d["applicable"], d["applicable_threshold"]) == (branch, q0)


class TestMindist:
    def test_hexagon(self, capsys):
        d = run_json(capsys, "mindist", "ex3_hexagon", "--q", "5")
        r = min_distance(build_table(EX3, make_field(5)))
        assert d["min_distance"] == 6
        assert d["witness"] == list(r.witness)
        assert d["max_zeros"] == r.max_zeros

    def test_workers(self, capsys):
        d = run_json(capsys, "mindist", "ex3_hexagon", "--q", "5", "--workers", "2")
        assert d["min_distance"] == 6 and d["worker_count"] == 2


class TestExitCodes:
    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "info", str(tmp_path / "nope.txt"))[0] == cli.EXIT_PARSE == 2

    def test_malformed(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("1 2 3\n")
        assert run(capsys, "info", str(f))[0] == 2

    def test_usage(self, capsys):
        with pytest.raises(SystemExit) as e:
            cli.main(["bounds", "ex3_hexagon"])
        assert e.value.code == 2

    def test_not_prime_power(self, capsys):
        assert run(capsys, "bounds", "ex3_hexagon", "--q", "36")[0] == 3
        assert run(capsys, "mindist", "ex3_hexagon", "--q", "6")[0] == 3

    def test_unsupported_field(self, capsys):
        assert run(capsys, "mindist", "ex3_hexagon", "--q", "243")[0] == 3

    def test_outside(self, capsys):
        assert run(capsys, "bounds", "ex2_triangle", "--q", "5")[0] == 4
        assert run(capsys, "mindist", "ex2_triangle", "--q", "5")[0] == 4

    def test_budget(self, capsys):
        code, _, err = run(capsys, "mindist", "ex3_hexagon", "--q", "5", "--budget", "100")
        assert code == 5 and "--force" in err
