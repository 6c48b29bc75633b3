import json
import math

import pytest

from monotri.cli import (
    InvariantError,
    ParseError,
    SchemaError,
    main,
    parse_coloring_file,
    validate_coloring_doc,
)
from monotri.geom import Region
from monotri.colorings import StripColoring, ZebraColoring
from monotri.render import RenderSpec, render_svg


@pytest.fixture
def strip_file(tmp_path):
    path = tmp_path / "strip.json"
    path.write_text(json.dumps(
        {"type": "strip", "scale": 1.0, "boundary_rule": "upper-closed"}))
    return str(path)


@pytest.fixture
def zigzag_file(tmp_path):
    path = tmp_path / "zigzag.json"
    path.write_text(json.dumps(
        {"type": "zebra", "profile": [[0, 0], [0.5, 0.1], [1, 0]],
         "x_hat": [1, 0], "parity_rule": "even-black",
         "boundary_parity": "even-black"}))
    return str(path)


@pytest.fixture
def halfplane_file(tmp_path):
    path = tmp_path / "halfplane.json"
    path.write_text(json.dumps(
        {"type": "halfplane", "normal": [0, 1], "offset": 0,
         "closed_color": "black"}))
    return str(path)


class TestParseColoringFile:
    def test_strip_echo(self, strip_file):
        coloring = parse_coloring_file(strip_file)
        assert isinstance(coloring, StripColoring)
        assert coloring.scale == 1.0

    def test_invariant_error_names_problem(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"type": "zebra", "profile": [[0, 0], [1, 0.5]]}))
        with pytest.raises(InvariantError, match="periodic"):
            parse_coloring_file(str(path))

    def test_schema_error_names_field(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"type": "strip", "scale": -1}))
        with pytest.raises(SchemaError, match="scale"):
            parse_coloring_file(str(path))

    def test_parse_error_on_garbage(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            parse_coloring_file(str(path))

    def test_missing_file(self):
        with pytest.raises(ParseError):
            parse_coloring_file("/nonexistent/coloring.json")

    def test_polygonal_schema(self):
        validate_coloring_doc({
            "type": "polygonal",
            "segments": [{"p": [0, 0], "q": [1, 0]}],
            "boundary_colors": ["black"],
            "seeds": [[0.5, 0.5, "black"], [0.5, -0.5, "white"]],
        })
        with pytest.raises(SchemaError, match="boundary_colors"):
            validate_coloring_doc({
                "type": "polygonal",
                "segments": [{"p": [0, 0], "q": [1, 0]}],
                "boundary_colors": [],
                "seeds": [[0.5, 0.5, "black"]],
            })


class TestExitStatuses:
    def test_forcing_exit_zero(self, capsys):
        assert main(["forcing", "--sides", "1,1,1", "--part", "i"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["verified"] is True and doc["tested_colorings"] == 32

    def test_lines_degenerate(self, capsys):
        code = main(["lines", "--q1=-0.5773502691896258,0",
                     "--q2", "0.5773502691896258,0", "--q3", "vertical:0"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["kind"] == "degenerate-concurrent"

    def test_exhausted_scan_is_exit_zero(self, strip_file, capsys):
        code = main(["scan", "--coloring", strip_file, "--triangle", "1,1,1",
                     "--region", "0,0,4,4", "--grid", "0.5", "--angles", "8"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["result"] == "exhausted"

    def test_failed_zebra_check_is_exit_zero(self, tmp_path, capsys):
        path = tmp_path / "saw.json"
        path.write_text(json.dumps(
            {"type": "zebra", "profile": [[0, 0], [0.5, 0.8], [1, 0]]}))
        assert main(["check-zebra", "--coloring", str(path)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["d"] == "fail" and doc["witness"] is not None

    def test_schema_error_exit_one(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"type": "strip", "scale": -1}))
        code = main(["scan", "--coloring", str(path), "--triangle", "1,1,1",
                     "--region", "0,0,1,1"])
        assert code == 1

    def test_usage_error_exit_one(self, capsys):
        assert main(["scan"]) == 1

    def test_unknown_command_exit_one(self, capsys):
        assert main(["frobnicate"]) == 1


class TestWitnessFlow:
    def test_witness_json_fields(self, halfplane_file, tmp_path, capsys):
        out = tmp_path / "wit.json"
        code = main(["scan", "--coloring", halfplane_file, "--triangle", "1,1,1",
                     "--region", "0,0,4,4", "--grid", "0.1", "--angles", "8",
                     "--min-margin", "0.1", "--out", str(out)])
        assert code == 0
        doc = json.loads(out.read_text())
        assert set(doc) == {"spec", "angle", "translation", "vertices",
                            "color", "margin"}
        assert doc["color"] == "black"
        assert doc["margin"] >= 0.1
        assert len(doc["vertices"]) == 3

    def test_render_with_overlay(self, halfplane_file, tmp_path):
        wit = tmp_path / "wit.json"
        main(["scan", "--coloring", halfplane_file, "--triangle", "1,1,1",
              "--region", "0,0,4,4", "--grid", "0.1", "--angles", "8",
              "--min-margin", "0.1", "--out", str(wit)])
        svg = tmp_path / "fig.svg"
        code = main(["render", "--coloring", halfplane_file,
                     "--region", "0,0,4,4", "--out", str(svg),
                     "--witness", str(wit)])
        assert code == 0
        text = svg.read_text()
        assert text.startswith("<?xml")
        assert "<svg" in text and "polygon" in text


class TestRenderDeterminism:
    def test_byte_identical(self, zigzag_file, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        for out in (a, b):
            main(["render", "--coloring", zigzag_file, "--region", "0,0,4,4",
                  "--out", str(out)])
        assert a.read_bytes() == b.read_bytes()

    def test_cross_process_determinism(self, zigzag_file, tmp_path):
        import subprocess
        import sys
        outs = []
        for name in ("p1.json", "p2.json"):
            out = tmp_path / name
            cmd = [sys.executable, "-m", "monotri.cli", "almost",
                   "--coloring", zigzag_file, "--epsilon", "0.2",
                   "--tries", "20000", "--seed", "11", "--out", str(out)]
            proc = subprocess.run(cmd, capture_output=True)
            assert proc.returncode == 0, proc.stderr
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_strip_band_count(self):
        region = Region(0, 0, 4, 4)
        svg = render_svg(RenderSpec(StripColoring(), region))
        dark = svg.count('fill="#3a3a3a"')
        assert dark >= 3
        # exactly three black bands actually meet [0,4]^2: n = 0, 1, 2
        period = math.sqrt(3)
        visible = [n for n in range(-3, 5)
                   if n * period < region.y1 and (n + 0.5) * period > region.y0]
        assert len(visible) == 3

    def test_zebra_render_has_boundary_polylines(self):
        zc = ZebraColoring()
        svg = render_svg(RenderSpec(zc, Region(0, 0, 4, 4)))
        assert svg.count("<line") >= 4  # several curves cross the window

    def test_zebra_band_polygons(self):
        zc = ZebraColoring()
        svg = render_svg(RenderSpec(zc, Region(0, 0, 4, 4)))
        assert svg.count("<polygon") >= 2

    def test_avoid_report(self, zigzag_file, capsys):
        code = main(["avoid", "--coloring", zigzag_file, "--triangle", "1,1,1",
                     "--region", "0,0,3,3", "--grid", "0.25", "--angles", "12"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["monochromatic_count"] == 0
        assert doc["placements_tested"] == 12 * 13 * 13


class TestOtherCommands:
    def test_hexagon(self, strip_file, capsys):
        assert main(["hexagon", "--coloring", strip_file, "--point", "0,0"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["regular"] is True and doc["feasible"] is True
        assert len(doc["points"]) == 6

    def test_angles(self, zigzag_file, capsys):
        assert main(["angles", "--coloring", zigzag_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["vertices"] == []

    def test_almost_requires_seed(self, strip_file):
        assert main(["almost", "--coloring", strip_file, "--epsilon", "0.1"]) == 1

    def test_almost_runs(self, strip_file, capsys):
        code = main(["almost", "--coloring", strip_file, "--epsilon", "0.2",
                     "--tries", "20000", "--seed", "5"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert "black" in doc and "white" in doc

    def test_check_zebra_requires_zebra(self, strip_file):
        assert main(["check-zebra", "--coloring", strip_file]) == 1
