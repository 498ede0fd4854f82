import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from powerideals.arrangement import boolean, braid, corpus, format_arrangement, graphic
from powerideals.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_tutte_of_g_file():
    payload = call_json("tutte", str(DATA / "example_G.arr"))
    assert payload["command"] == "tutte"
    assert payload["input_summary"] == {"n": 5, "rank": 3, "ambient_dim": 3}
    assert payload["result"]["table"] == [["0", "0", "0"], ["0", "1", "1"], ["1", "1", "0"], ["1", "0", "0"]]
    assert payload["seed"] == 0


def test_hilbert_of_g_file():
    payload = call_json("hilbert", "--k", "0", str(DATA / "example_G.arr"))
    assert payload["result"]["formula"] == ["1", "3", "5", "6", "4", "1"]
    code, out, _ = call("hilbert", "--k", "0", str(DATA / "example_G.arr"))
    assert code == 0 and "[1, 3, 5, 6, 4, 1]" in out


def test_oracle_below_minus_two():
    payload = call_json("oracle", "--k", "-3", "--max-degree", "3", str(DATA / "example_422.arr"))
    assert payload["result"]["dims"] == ["1", "1"]


def test_both_methods():
    payload = call_json("hilbert", "--k", "2", "--method", "both", "braid:3")
    assert payload["result"]["agree"] is True
    assert payload["result"]["formula"] == payload["result"]["oracle"]


def test_closed_form_refuses_low_k():
    code, out, err = call("hilbert", "--k", "-3", str(DATA / "example_422.arr"))
    assert code == 2 and out == "" and "oracle" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["hilbert", "braid:3"],
        ["tutte", "no/such/file.arr"],
        ["tutte", "cube:3"],
        ["oracle", "--k", "0", "--max-degree", "-1", "braid:3"],
        ["fatpoints", "--k", "9", "corpus:B2"],
        ["verify"],
        ["verify", "corpus:B2", "--corpus"],
        ["nonsense"],
        ["cox", "--mode", "sideways", "corpus:B2"],
    ],
)
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""


def test_malformed_file_reports_line(tmp_path):
    path = tmp_path / "bad.arr"
    path.write_text("# header\ndim 2\n1 0\n1 x\n")
    code, out, err = call("tutte", str(path))
    assert code == 2 and ":4" in err


def test_basis_and_fatpoints_and_cox():
    payload = call_json("basis", "--k", "-1", "corpus:U23")
    assert payload["result"]["count"] == 3
    payload = call_json("fatpoints", "corpus:B2")
    assert payload["result"]["telescoped"] == ["1", "2", "3", "4", "5", "6", "7"]
    payload = call_json("cox", "--mode", "central", "--method", "both", "corpus:U23")
    assert payload["result"]["agree"] is True and len(payload["result"]["lines"]) == 3


def test_verify_single_source():
    code, out, _ = call("verify", "corpus:B2")
    assert code == 0
    assert "REPORT" in out and "FAIL " not in out


def test_verify_reports_failures():
    code, out, _ = call("verify", "corpus:U23_211")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("cfg", [boolean(2, 1), braid(4), graphic([(1, 2), (2, 3), (3, 4), (1, 4)])] + list(corpus().values()))
def test_file_roundtrip(cfg, tmp_path):
    path = tmp_path / "cfg.arr"
    path.write_text(format_arrangement(cfg))
    for command in (["tutte"], ["hilbert", "--k", "1"], ["fatpoints", "--k", "1"]):
        a = call(*command, str(path), "--json")
        direct = run_on_config(command, cfg)
        assert json.loads(a[1])["result"] == direct


def run_on_config(command, cfg):
    from powerideals import cli

    class Args:
        k = int(command[2]) if len(command) > 2 else None
        max_degree = None
        method = None

    result, _ = cli.COMMANDS[command[0]](cfg, Args)
    return json.loads(json.dumps(result))


def test_determinism():
    argv = ["verify", "corpus:U23", "--seed", "17", "--json"]
    assert call(*argv) == call(*argv)
    assert call_json("verify", "corpus:U23", "--seed", "17")["seed"] == 17


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "powerideals", "tutte", "corpus:U23"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "x^2" in proc.stdout
