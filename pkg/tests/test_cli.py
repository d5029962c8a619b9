import csv
import json
import xml.etree.ElementTree as ET

import pytest

from steinerlab.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, points):
        p = tmp_path / name
        p.write_text(json.dumps({"points": points}))
        return str(p)

    return {
        "square": write("square.json", [[0, 0], [1, 0], [1, 1], [0, 1]]),
        "triangle_eq": write(
            "triangle_eq.json", [[0, 0], [1, 0], [0.5, 0.8660254037844386]]
        ),
        "rect_a": write("rect_a.json", [[0, 0], [1.2, 0], [1.2, 1], [0, 1]]),
        "rect_b": write("rect_b.json", [[0, 0], [1, 0], [1, 1.2], [0, 1.2]]),
        "rect_wide": write("rect_wide.json", [[0, 0], [2, 0], [2, 1], [0, 1]]),
        "rect_mid": write("rect_mid.json", [[0, 0], [1.5, 0], [1.5, 1], [0, 1]]),
        "dup": write("dup.json", [[0, 0], [1, 1], [0, 0]]),
        "tmp": tmp_path,
    }


class TestSolveCommand:
    def test_square_output(self, files, capsys):
        rc = main(["solve", files["square"]])
        out = capsys.readouterr().out
        assert rc == 0
        assert "ambiguous: true" in out
        assert "length: 2.732050808" in out

    def test_triangle_output(self, files, capsys):
        rc = main(["solve", files["triangle_eq"]])
        out = capsys.readouterr().out
        assert rc == 0
        assert "length: 1.732050808" in out
        assert "ambiguous: false" in out

    def test_duplicate_points_exit_2_names_indices(self, files, capsys):
        rc = main(["solve", files["dup"]])
        err = capsys.readouterr().err
        assert rc == 2
        assert "0" in err and "2" in err

    def test_missing_file_exit_2(self, files, capsys):
        assert main(["solve", str(files["tmp"] / "nope.json")]) == 2

    def test_json_output_parses(self, files, capsys):
        rc = main(["solve", files["square"], "--json"])
        doc = json.loads(capsys.readouterr().out)
        assert rc == 0
        assert doc["ambiguous"] is True
        assert len(doc["minimal"]) == 2

    def test_byte_identical_runs(self, files, capsys):
        main(["solve", files["square"], "--all-candidates"])
        first = capsys.readouterr().out
        main(["solve", files["square"], "--all-candidates"])
        assert capsys.readouterr().out == first

    def test_svg_valid_one_group_per_minimal_tree(self, files, capsys):
        out = str(files["tmp"] / "out.svg")
        rc = main(["solve", files["square"], "--svg", out])
        assert rc == 0
        root = ET.parse(out).getroot()
        ns = "{http://www.w3.org/2000/svg}"
        groups = [
            g
            for g in root.iter(f"{ns}g")
            if g.findall(f"{ns}polyline")
        ]
        assert len(groups) == 2


class TestEnumerateCommand:
    def test_three_terminals(self, capsys):
        assert main(["enumerate", "3"]) == 0
        assert "4 types" in capsys.readouterr().out

    def test_three_full_only(self, capsys):
        assert main(["enumerate", "3", "--full-only"]) == 0
        assert "1 type" in capsys.readouterr().out

    def test_five_full_only(self, capsys):
        assert main(["enumerate", "5", "--full-only"]) == 0
        assert "15 types" in capsys.readouterr().out

    def test_cap_exit_3(self, capsys):
        assert main(["enumerate", "9"]) == 3

    def test_env_cap_override(self, capsys, monkeypatch):
        monkeypatch.setenv("STEINER_TYPE_CAP", "3")
        assert main(["enumerate", "4"]) == 3
        monkeypatch.setenv("STEINER_TYPE_CAP", "9")
        assert main(["enumerate", "4"]) == 0


class TestWallCommand:
    def test_rectangle_pair(self, files, capsys):
        rc = main(["wall", files["rect_a"], files["rect_b"]])
        out = capsys.readouterr().out
        assert rc == 0
        assert "t_star: 0.500000000" in out

    def test_no_wall_exit_4(self, files, capsys):
        assert main(["wall", files["rect_wide"], files["rect_mid"]]) == 4

    def test_json(self, files, capsys):
        rc = main(["wall", files["rect_a"], files["rect_b"], "--json"])
        doc = json.loads(capsys.readouterr().out)
        assert rc == 0
        assert abs(doc["t_star"] - 0.5) < 1e-8
        assert doc["gap"] < 1e-10


class TestPerturbCommand:
    def test_square(self, files, capsys):
        rc = main(
            ["perturb", files["square"], "--sigma", "1e-3", "--trials", "30", "--seed", "5"]
        )
        out = capsys.readouterr().out
        assert rc == 0
        assert "still_ambiguous: 0/30" in out

    def test_csv_rows(self, files, capsys):
        path = str(files["tmp"] / "rows.csv")
        rc = main(
            [
                "perturb",
                files["square"],
                "--sigma",
                "1e-3",
                "--trials",
                "5",
                "--seed",
                "5",
                "--csv",
                path,
            ]
        )
        assert rc == 0
        with open(path) as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["trial", "seed_offset", "ambiguous", "min_length", "runner_up_gap"]
        assert len(rows) == 6


class TestCodirectionCommand:
    def test_no_counterexamples(self, capsys):
        rc = main(["codirection", "--n", "4", "--trials", "40", "--seed", "3"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "counterexamples: 0" in out

    def test_counterexample_exits_5_and_dumps(self, files, capsys, monkeypatch):
        # forge a counterexample to pin the exit code and dump contract
        from steinerlab.topology import enumerate_full_types, orientation_variants
        import steinerlab.cli as cli

        t1, t2 = orientation_variants(enumerate_full_types(3)[0])
        fake = (1, [((0j, 1 + 0j, 0.5 + 0.9j), t1, t2)])
        monkeypatch.setattr(cli, "codirection_harness", lambda *a, **k: fake)
        dump = str(files["tmp"] / "ce.json")
        rc = main(["codirection", "--n", "3", "--trials", "1", "--dump", dump])
        assert rc == 5
        doc = json.loads((files["tmp"] / "ce.json").read_text())
        assert doc[0]["config"][1] == [1.0, 0.0]


class TestExitCodes:
    def test_solve_above_cap_exits_3(self, tmp_path, capsys):
        p = tmp_path / "big.json"
        p.write_text(json.dumps({"points": [[i, (i * i) % 7] for i in range(9)]}))
        assert main(["solve", str(p)]) == 3
