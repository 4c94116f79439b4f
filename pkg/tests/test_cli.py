import json
from pathlib import Path

import pytest

from tilings.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


LAYOUT = Path(__file__).resolve().parent.parent / "layouts" / "nine_square.json"


class TestGoldenOutputs:
    def test_count_4x6_dominoes(self, capsys):
        code, out, _ = run(capsys, "count", "--rect", "4", "6", "--tile", "domino")
        assert code == 0
        assert out == "281\n"

    def test_count_aztec(self, capsys):
        code, out, _ = run(capsys, "count", "--aztec", "5")
        assert code == 0
        assert out == "32768\n"

    def test_decide_rect_divisibility(self, capsys):
        code, out, _ = run(capsys, "decide-rect", "10", "15", "1", "6")
        assert code == 1
        payload = json.loads(out)
        assert payload["tileable"] is False
        assert payload["failing"] == ["divisibility"]

    def test_decide_rect_positive(self, capsys):
        code, out, _ = run(capsys, "decide-rect", "6", "6", "2", "3")
        assert code == 0
        assert json.loads(out)["tileable"] is True

    def test_squared_solve(self, capsys):
        code, out, _ = run(capsys, "squared", "solve", str(LAYOUT))
        assert code == 0
        payload = json.loads(out)
        assert payload["sides"] == {"a": 15, "b": 8, "c": 9, "d": 7, "e": 1,
                                    "f": 10, "g": 18, "h": 4, "i": 14}
        assert payload["width"] == 32 and payload["height"] == 33
        assert payload["resistance"] == "33/32"
        assert payload["perfect"] is True
        assert payload["squared_square"] is False

    def test_squared_resistance(self, capsys):
        code, out, _ = run(capsys, "squared", "resistance", str(LAYOUT))
        assert code == 0
        assert out == "33/32\n"

    def test_constants(self, capsys):
        code, out, _ = run(capsys, "constants", "--digits", "10")
        assert code == 0
        payload = json.loads(out)
        assert payload["catalan"].startswith("0.915965594")
        assert payload["square_dof"].startswith("1.33851515")
        assert payload["aztec_dof"].startswith("1.18920711")

    def test_byte_stable_across_runs(self, capsys):
        first = run(capsys, "squared", "solve", str(LAYOUT))
        second = run(capsys, "squared", "solve", str(LAYOUT))
        assert first == second


class TestSampling:
    def test_seed_determinism(self, capsys):
        a = run(capsys, "sample", "--aztec", "4", "--seed", "9")
        b = run(capsys, "sample", "--aztec", "4", "--seed", "9")
        assert a == b
        c = run(capsys, "sample", "--aztec", "4", "--seed", "10")
        assert c != a

    def test_sample_rect(self, capsys):
        code, out, _ = run(capsys, "sample", "--rect", "4", "4", "--seed", "3")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["placements"]) == 8

    def test_arctic_csv(self, capsys):
        code, out, err = run(capsys, "arctic", "--order", "6", "--samples", "3",
                             "--seed", "5")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "order,sample,frozen_fraction"
        assert len(lines) == 4
        assert all(line.startswith("6,") for line in lines[1:])
        assert "mean=" in err
        again = run(capsys, "arctic", "--order", "6", "--samples", "3", "--seed", "5")
        assert again[1] == out

    def test_arctic_multi_order(self, capsys):
        code, out, err = run(capsys, "arctic", "--order", "4", "--order", "6",
                             "--samples", "2", "--seed", "5")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        assert err.count("order=") == 2

    def test_arctic_figures(self, capsys, tmp_path):
        figure = tmp_path / "picture.png"
        trend = tmp_path / "trend.png"
        code, _, _ = run(capsys, "arctic", "--order", "4", "--order", "6",
                         "--samples", "2", "--seed", "1",
                         "--figure", str(figure), "--trend-figure", str(trend))
        assert code == 0
        assert figure.stat().st_size > 1000
        assert trend.stat().st_size > 1000

    def test_arctic_threads_match_sequential(self, capsys):
        seq = run(capsys, "arctic", "--order", "5", "--samples", "4", "--seed", "2",
                  "--threads", "1")
        par = run(capsys, "arctic", "--order", "5", "--samples", "4", "--seed", "2",
                  "--threads", "2")
        assert seq[1] == par[1]


class TestCertificates:
    def test_tileable_board(self, capsys):
        code, out, _ = run(capsys, "certify", "--rect", "4", "4")
        assert code == 0
        payload = json.loads(out)
        assert payload["tileable"] is True
        assert len(payload["placements"]) == 8

    def test_untileable_board(self, capsys):
        code, out, _ = run(capsys, "certify", "--rect", "8", "8",
                           "--remove", "0,0;7,7")
        assert code == 1
        payload = json.loads(out)
        assert payload["tileable"] is False
        assert len(payload["S"]) > len(payload["N"])

    def test_gomory_success(self, capsys):
        code, out, _ = run(capsys, "gomory", "8", "8", "0", "0", "0", "1")
        assert code == 0
        assert len(json.loads(out)["placements"]) == 31

    def test_gomory_same_color(self, capsys):
        code, out, _ = run(capsys, "gomory", "8", "8", "0", "0", "7", "7")
        assert code == 1
        assert json.loads(out)["error"] == "SAME_COLOR"


class TestFlipsAndSolve:
    def test_components(self, capsys):
        code, out, _ = run(capsys, "flips", "components", "--rect", "3", "3",
                           "--remove", "1,1")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"components": [1, 1], "tilings": 2}

    def test_distance(self, capsys, tmp_path):
        code, out, _ = run(capsys, "sample", "--rect", "2", "4", "--seed", "0")
        t1 = tmp_path / "t1.json"
        t1.write_text(out)
        code, out, _ = run(capsys, "sample", "--rect", "2", "4", "--seed", "5")
        t2 = tmp_path / "t2.json"
        t2.write_text(out)
        code, out, _ = run(capsys, "flips", "distance", "--rect", "2", "4",
                           "--t1", str(t1), "--t2", str(t2))
        payload = json.loads(out)
        if payload["reachable"]:
            assert code == 0 and payload["distance"] >= 0
        else:
            assert code == 1

    def test_distance_unreachable(self, capsys, tmp_path):
        from tilings.dominoes import flip_components
        from tilings.lattice import build_rectangle, remove_cells, tiling_to_json

        region = remove_cells(build_rectangle(3, 3), [(1, 1)])
        (a,), (b,) = flip_components(region)
        t1, t2 = tmp_path / "a.json", tmp_path / "b.json"
        t1.write_text(tiling_to_json(a))
        t2.write_text(tiling_to_json(b))
        code, out, _ = run(capsys, "flips", "distance", "--rect", "3", "3",
                           "--remove", "1,1", "--t1", str(t1), "--t2", str(t2))
        assert code == 1
        assert json.loads(out) == {"distance": None, "reachable": False}

    def test_solve_found(self, capsys):
        code, out, _ = run(capsys, "solve", "--rect", "3", "20",
                           "--tile", "pentominoes", "--once-each")
        assert code == 0
        assert len(json.loads(out)["placements"]) == 12

    def test_solve_not_found(self, capsys):
        code, out, _ = run(capsys, "solve", "--triangle", "3", "--tile", "tribone")
        assert code == 1
        assert json.loads(out) == {"found": False}


class TestSimilar:
    def test_poly_negative(self, capsys):
        code, out, _ = run(capsys, "similar", "--poly=-2,0,1")
        assert code == 1
        assert json.loads(out)["tileable"] is False

    def test_poly_positive(self, capsys):
        code, out, _ = run(capsys, "similar", "--poly=1,-408,144")
        assert code == 0
        assert json.loads(out)["tileable"] is True

    def test_cube_family(self, capsys):
        code, out, _ = run(capsys, "similar", "--cube-family", "1", "2")
        assert code == 1
        payload = json.loads(out)
        assert payload["tileable"] is False and payload["inequality_holds"] is False

    def test_construct(self, capsys):
        code, out, _ = run(capsys, "similar", "--construct", "0.5698402910",
                           "--max-pieces", "3")
        assert code == 0
        assert len(json.loads(out)["pieces"]) == 3


class TestRenderAndExitCodes:
    def test_render_region(self, capsys, tmp_path):
        out_file = tmp_path / "az.svg"
        code, out, _ = run(capsys, "render", "--aztec", "2", "--out", str(out_file))
        assert code == 0
        content = out_file.read_text()
        assert content.startswith("<svg ") and content.rstrip().endswith("</svg>")

    def test_render_layout(self, capsys, tmp_path):
        out_file = tmp_path / "nine.svg"
        code, _, _ = run(capsys, "render", "--layout", str(LAYOUT),
                         "--out", str(out_file))
        assert code == 0
        assert "a=15" in out_file.read_text()

    def test_render_tiling_byte_stable(self, capsys, tmp_path):
        code, out, _ = run(capsys, "sample", "--aztec", "3", "--seed", "1")
        tiling_file = tmp_path / "t.json"
        tiling_file.write_text(out)
        f1, f2 = tmp_path / "a.svg", tmp_path / "b.svg"
        run(capsys, "render", "--tiling", str(tiling_file), "--out", str(f1))
        run(capsys, "render", "--tiling", str(tiling_file), "--out", str(f2))
        assert f1.read_bytes() == f2.read_bytes()

    def test_usage_error_is_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["count"])  # no region
        assert exc.value.code == 2

    def test_unknown_command_is_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_guard_exceeded_is_exit_3(self, capsys):
        code, out, _ = run(capsys, "count", "--rect", "30", "30")
        assert code == 3
        assert json.loads(out)["error"] == "GUARD_EXCEEDED"

    def test_bad_value_is_exit_1(self, capsys):
        code, out, _ = run(capsys, "count", "--rect", "4", "6", "--tile", "bogus")
        assert code == 1
        payload = json.loads(out)
        assert payload["error"] in ("INVALID", "MALFORMED")
