import json

import pytest
from click.testing import CliRunner

from g2tcs.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args, **kw):
    return runner.invoke(main, list(args), catch_exceptions=False, **kw)


# ------------------------------------------------------------------ catalog

def test_catalog_list(runner):
    result = invoke(runner, "catalog", "list")
    assert result.exit_code == 0
    assert "3.22_3" in result.output
    assert len(result.output.strip().splitlines()) >= 66


def test_catalog_show(runner):
    result = invoke(runner, "catalog", "show", "3.22_3")
    assert result.exit_code == 0
    assert "involution" in result.output
    assert "48" in result.output  # b3


def test_catalog_show_unknown_id(runner):
    result = invoke(runner, "catalog", "show", "nosuch")
    assert result.exit_code == 3


def test_catalog_validate(runner):
    result = invoke(runner, "catalog", "validate")
    assert result.exit_code == 0
    assert "66" in result.output


def test_catalog_override_missing_file(runner):
    result = invoke(runner, "--catalog", "/nonexistent/cat.json",
                    "catalog", "list")
    assert result.exit_code == 2


# -------------------------------------------------------------------- match

def test_match_rank1(runner):
    result = invoke(runner, "match", "--plus", "3.21",
                    "--minus", "3.8_1_18", "--theta", "1/4pi")
    assert result.exit_code == 0
    assert "64" in result.output and "24" in result.output


def test_match_json_deterministic(runner):
    args = ("match", "--plus", "3.21", "--minus", "3.8_1_18",
            "--theta", "1/4pi", "--format", "json")
    out1 = invoke(runner, *args)
    out2 = invoke(runner, *args)
    assert out1.exit_code == 0
    assert out1.output == out2.output
    doc = json.loads(out1.output)
    assert doc[0]["report"]["b3"] == 64


def test_match_inadmissible_pair(runner):
    result = invoke(runner, "match", "--plus", "3.8_1_4",
                    "--minus", "3.8_1_2", "--theta", "1/4pi")
    assert result.exit_code == 4


def test_match_cross_term(runner):
    result = invoke(runner, "match", "--plus", "3.28", "--minus", "3.28",
                    "--theta", "1/6pi", "--bound", "3", "--pure",
                    "--format", "json")
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert sorted(m["report"]["d_free"] for m in doc) == [2, 2, 8]


def test_match_rank2_requires_bound(runner):
    result = invoke(runner, "match", "--plus", "3.28", "--minus", "3.28",
                    "--theta", "1/6pi")
    assert result.exit_code == 4


def test_match_unknown_block(runner):
    result = invoke(runner, "match", "--plus", "nosuch",
                    "--minus", "3.28", "--theta", "1/6pi")
    assert result.exit_code == 3


# --------------------------------------------------------------- invariants

def _write_config(tmp_path, doc):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(doc))
    return str(path)


def test_invariants_pushout_config(runner, tmp_path):
    path = _write_config(tmp_path, {
        "plus": "3.22_3", "minus": "3.23_6", "theta": "1/4pi",
        "pushout": [[6, 3, 3], [3, 2, 4], [3, 4, 2]]})
    result = invoke(runner, "invariants", "--config", path,
                    "--format", "json")
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert (doc["b3"], doc["d_free"], doc["nu_bar"]) == (71, 6, -36)
    assert doc["torsion_factors"] == [3]


def test_invariants_glue_config(runner, tmp_path):
    path = _write_config(tmp_path, {
        "plus": "3.23_8", "minus": "3.11", "theta": "1/4pi",
        "base_gram": [[196, 0, 98], [0, -98, 0], [98, 0, 98]],
        "plus_basis": [["9/49", "8/49", "0"], ["5/49", "-1/49", "0"]],
        "minus_basis": [["0", "-1/14", "3/14"], ["0", "3/14", "5/14"]]})
    result = invoke(runner, "invariants", "--config", path,
                    "--format", "json")
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert (doc["b2"], doc["b3"], doc["d_free"]) == (1, 49, 12)


def test_invariants_invalid_config(runner, tmp_path):
    path = _write_config(tmp_path, {
        "plus": "3.22_1", "minus": "3.9_10", "theta": "1/4pi",
        "pushout": [[4, 3, 1], [3, 8, 4], [1, 4, 0]]})
    result = invoke(runner, "invariants", "--config", path)
    assert result.exit_code == 4


def test_invariants_missing_file(runner):
    result = invoke(runner, "invariants", "--config", "/nonexistent.json")
    assert result.exit_code == 2


# ---------------------------------------------------------------- reproduce

@pytest.mark.parametrize("target,needle", [
    ("table4", "25"), ("table5", "23"), ("examples", "20")])
def test_reproduce_targets(runner, target, needle):
    result = invoke(runner, "reproduce", target)
    assert result.exit_code == 0, result.output
    assert needle in result.output
