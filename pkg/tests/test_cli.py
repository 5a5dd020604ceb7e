"""Command-line interface: outputs, exit codes, JSON round trips."""

import json
from fractions import Fraction

import pytest

from curvecoh.cli import main, parse_f_expression, parse_range
from curvecoh.scalars import rational_tps


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_range():
    assert parse_range("-3..3") == list(range(-3, 4))
    assert parse_range("5") == [5]
    with pytest.raises(ValueError):
        parse_range("3..-3")


def test_parse_f_expression():
    assert parse_f_expression("1+xi", 8) == rational_tps([1, 1], 8)
    assert parse_f_expression("xi*(1+xi)", 8) == rational_tps([0, 1, 1], 8)
    assert parse_f_expression("2", 8) == rational_tps([2], 8)
    assert parse_f_expression("xi^2 - 3/2", 8) == rational_tps([Fraction(-3, 2), 0, 1], 8)
    with pytest.raises(ValueError):
        parse_f_expression("xi + %", 8)



def test_cohomology_table(capsys):
    code, out, err = run(capsys, "cohomology", "--curve", "p1", "--n", "-3..3")
    assert code == 0
    lines = out.splitlines()[2:]  # header and separator
    dims = {}
    for line in lines:
        parts = line.split()
        dims[int(parts[0])] = (int(parts[1]), int(parts[2]))
    for n in range(-3, 4):
        assert dims[n] == (max(n + 1, 0), max(-n - 1, 0))


def test_cohomology_json_example(capsys):
    code, out, _ = run(capsys, "cohomology", "--curve", "twistor", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["h0"] == 5 and data["h1"] == 0
    assert data["gr"] == {"0": 1, "1": 2, "2": 2}
    assert data["certified"] is True and "cutoff" in data


def test_json_round_trips_byte_identical(capsys):
    code, out, _ = run(capsys, "cohomology", "--curve", "twistor", "--n", "-2..2", "--format", "json")
    assert code == 0
    text = out.rstrip("\n")
    assert json.dumps(json.loads(text), sort_keys=True, indent=2) == text


def test_cutoff_too_small_exits_1(capsys):
    code, out, err = run(capsys, "cohomology", "--curve", "p1", "--n", "-8", "--cutoff", "1")
    assert code == 1
    assert "CutoffTooSmall" in err


def test_cutoff_forced_with_uncertified_ok(capsys):
    code, out, _ = run(
        capsys, "cohomology", "--curve", "p1", "--n", "-8", "--cutoff", "1", "--uncertified-ok"
    )
    assert code == 0


def test_invalid_curve_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["cohomology", "--curve", "nope", "--n", "1"])
    assert info.value.code == 2


def test_missing_argument_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["cohomology", "--curve", "p1"])
    assert info.value.code == 2


def test_section_ring_table(capsys):
    code, out, _ = run(capsys, "section-ring", "--curve", "twistor", "--max-degree", "6")
    assert code == 0
    assert "[1, 3, 5, 7, 9, 11, 13]" in out
    assert "u*u + v*v + 1*1" in out


def test_section_ring_p1_json(capsys):
    code, out, _ = run(
        capsys, "section-ring", "--curve", "p1", "--max-degree", "4", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["hilbert"] == [1, 2, 3, 4, 5]
    assert all(v == 0 for v in data["kernel_dims"].values())


def test_pipeline_pass(capsys):
    code, out, _ = run(capsys, "pipeline", "--f", "1", "--M", "16")
    assert code == 0
    assert "jump index = 1" in out
    assert "Fil_0: PASS" in out
    assert "injectivity: PASS" in out


def test_pipeline_reversion_printed(capsys):
    code, out, _ = run(capsys, "pipeline", "--f", "1+xi", "--M", "16")
    assert code == 0
    assert "reversion" in out and "-1*xi^2" in out
    assert "rebase round trip: xi + O" in out


def test_pipeline_zero_bott_exits_1(capsys):
    code, _, err = run(capsys, "pipeline", "--f", "0", "--M", "8")
    assert code == 1
    assert "ZeroBott" in err


def test_pipeline_m_too_small_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["pipeline", "--f", "1", "--M", "1"])
    assert info.value.code == 2


def test_dream_pass(capsys):
    code, out, _ = run(capsys, "dream", "--x", "i/2", "--r", "1/2", "--M", "16", "--n", "-2..2")
    assert code == 0
    assert "FAIL" not in out
    assert "overall: PASS" in out


def test_dream_point_outside_disc_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["dream", "--x", "2", "--r", "1/2", "--M", "8", "--n", "1"])
    assert info.value.code == 2


def test_dream_single_n(capsys):
    code, out, _ = run(
        capsys, "dream", "--x", "1/3", "--r", "1/2", "--M", "16", "--n", "1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    tw = [row for row in data["results"] if row["curve"] == "twistor" and row["n"] == 1]
    assert tw[0]["direct"] == "(3, 0)" and tw[0]["ok"]


def test_config_file_supplies_defaults(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"curve": "p1", "n": "0..1", "format": "json"}))
    code, out, _ = run(capsys, "cohomology", "--config", str(cfg))
    assert code == 0
    data = json.loads(out)
    assert [d["h0"] for d in data] == [1, 2]


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(
        capsys, "cohomology", "--curve", "p1", "--n", "0", "--format", "json",
        "--output", str(target),
    )
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["h0"] == 1


def test_pipeline_prec_flag(capsys):
    code, out, _ = run(capsys, "pipeline", "--f", "1", "--M", "8", "--prec", "4",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["jump_index"] == 1 and data["hfp_image_equals_fil0"] is True


def test_readme_quickstart_runs():
    import pathlib
    import re as _re

    readme = pathlib.Path(__file__).resolve().parent.parent / "README.md"
    blocks = _re.findall(r"```python\n(.*?)```", readme.read_text(), _re.S)
    assert blocks, "README quick start block missing"
    exec(compile(blocks[0], "README.md", "exec"), {})
