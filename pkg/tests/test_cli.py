"""
Test the command-line front end: outputs, caching and exit codes.

Programmer: liepyx team
Since:  2026-10
"""

import json

import pytest

from liepyx.cli import main, parse_constants, JobConfig, DEFAULT_CACHE_DIR, CACHE_ENVIRONMENT_VARIABLE
from liepyx.errors import ConfigurationError
from liepyx.polycore import Polynomial


@pytest.fixture
def dirs(tmp_path):
    return ["--cache-dir", str(tmp_path / "cache")], tmp_path / "out"


def test_compute_and_verify(dirs, capsys):
    cache, out = dirs
    assert main(["compute", "--family", "A", "--rank", "1", "--index", "1", "--output-dir", str(out)] + cache) == 0
    path = out / "A1_I1_full.json"
    with open(path) as file:
        document = json.load(file)
    assert Polynomial.from_json_obj(document["terms"], document["variables"]).to_text() == "p1^2 + x[1]*x[-1]"
    with open(out / "A1_manifest.json") as file:
        manifest = json.load(file)
    assert [entry["degree"] for entry in manifest["invariants"]] == [2]
    assert main(["verify", str(path)] + cache) == 0
    assert "all checks passed" in capsys.readouterr().out

    document["terms"].append({"coeff": "1", "exps": {"p1": 1}})
    with open(path, "w") as file:
        json.dump(document, file)
    assert main(["verify", str(path)] + cache) == 1


def test_text_output_of_all_invariants(dirs, capsys):
    cache, out = dirs
    assert main(["compute", "--family", "A", "--rank", "2", "--scope", "borel", "--format", "text", "--output-dir", str(out)] + cache) == 0
    assert (out / "A2_I1_borel.txt").read_text().strip() == "p1^2 - p1*p2 + p2^2 + x[1,0] + x[0,1]"
    assert (out / "A2_I2_borel.txt").exists()
    assert "p1^2 - p1*p2 + p2^2 + x[1,0] + x[0,1]" in capsys.readouterr().out


def test_generic_seeds(dirs):
    cache, out = dirs
    assert main(["compute", "--family", "A", "--rank", "1", "--seed-mode", "generic", "--seed", "1:3", "--degree", "2",
                 "--output-dir", str(out)] + cache) == 0
    with open(out / "A1_d2_generic_full.json") as file:
        document = json.load(file)
    assert Polynomial.from_json_obj(document["terms"], document["variables"]).to_text() == "3 * p1^2 + 3 * x[1]*x[-1]"


def test_terms(dirs, capsys):
    cache, out = dirs
    assert main(["terms", "--family", "G", "--rank", "2", "--degree", "6", "--counts-only", "--format", "json"] + cache) == 0
    assert json.loads(capsys.readouterr().out) == {"ttms": 8, "ptms": 10, "pure_cartan": 1, "ntms": 535}
    assert main(["terms", "--family", "A", "--rank", "1", "--index", "1"] + cache) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "A1, degree 2: ttms 1, ptms 0+1, ntms 0"
    assert "ttms W=() U=(f2) b=1 a=0" in lines


def test_configuration_errors(dirs):
    cache, out = dirs
    assert main(["compute", "--family", "E", "--rank", "7", "--index", "1"] + cache) == 2
    assert main(["compute", "--family", "H", "--rank", "2"] + cache) == 2
    assert main(["compute", "--family", "A", "--rank", "1", "--index", "5", "--output-dir", str(out)] + cache) == 2
    assert main(["compute", "--family", "A", "--rank", "1", "--index", "first"] + cache) == 2
    assert main(["compute", "--family", "A", "--rank", "1", "--seed-mode", "generic", "--seed", "1:1"] + cache) == 2
    assert main(["compute", "--family", "A", "--rank", "1", "--seed", "1=1"] + cache) == 2
    assert main(["terms", "--family", "A", "--rank", "1"] + cache) == 2
    assert main(["verify", str(out / "missing.json")] + cache) == 2


def test_checkpoint_mismatch(dirs, tmp_path):
    cache, out = dirs
    arguments = ["compute", "--family", "A", "--rank", "2", "--index", "1", "--output-dir", str(out)] + cache
    assert main(arguments) == 0
    checkpoint = tmp_path / "cache" / "A2_I1_full.checkpoint.json"
    with open(checkpoint) as file:
        document = json.load(file)
    document["content_hash"] = "0" * 64
    with open(checkpoint, "w") as file:
        json.dump(document, file)
    assert main(arguments) == 2
    assert main(arguments + ["--discard-mismatched-checkpoints"]) == 0


def test_cache_directory(tmp_path, monkeypatch):
    monkeypatch.delenv(CACHE_ENVIRONMENT_VARIABLE, raising=False)
    assert str(JobConfig().resolved_cache_dir()) == DEFAULT_CACHE_DIR
    monkeypatch.setenv(CACHE_ENVIRONMENT_VARIABLE, str(tmp_path / "from_env"))
    assert JobConfig().resolved_cache_dir() == tmp_path / "from_env"
    assert JobConfig(cache_dir=str(tmp_path / "explicit")).resolved_cache_dir() == tmp_path / "explicit"
    assert main(["terms", "--family", "A", "--rank", "2", "--degree", "3", "--counts-only"]) == 0
    assert (tmp_path / "from_env" / "A2-frame.json").exists()


def test_parse_constants():
    assert parse_constants(["1,1,1:0", "2:240"]) == {(1, 1, 1): "0", (2,): "240"}
    assert parse_constants(None) == {}
    with pytest.raises(ConfigurationError):
        parse_constants(["a:1"])


if __name__ == "__main__":
    pytest.main(["-v", __file__])
