import json
from pathlib import Path
import subprocess
import sys

import pytest

from scottkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "--scenario", "intersection-table-oracle", "--seed", "7",
                    "--json", "--col-max", "8", "--seq-weight-max", "4")
    assert code == 0
    rep = json.loads(out.out)
    assert rep["schema"] == 1 and rep["seed"] == 7


def test_verify_unknown_scenario(capsys):
    code, out = run(capsys, "verify", "--scenario", "nonexistent")
    assert code == 2 and "unknown scenario" in out.err


def test_verify_needs_one_target(capsys):
    assert run(capsys, "verify")[0] == 2


@pytest.mark.parametrize("argv", [["verify", "--all", "--seed", "-1"],
                                  ["verify", "--all", "--stages", "0"], ["nonsense"]])
def test_bad_arguments_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("SCOTTKIT_SEED", "99")
    code, out = run(capsys, "verify", "--scenario", "gadget-encodings", "--json")
    assert code == 0 and json.loads(out.out)["seed"] == 99
    monkeypatch.setenv("SCOTTKIT_SEED", "x")
    assert run(capsys, "verify", "--scenario", "gadget-encodings")[0] == 2


def test_out_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    assert run(capsys, "verify", "--scenario", "product-omega", "--json", "--out", str(path))[0] == 0
    assert json.loads(path.read_text())["scenario"] == "product-omega"


def test_table(capsys):
    code, out = run(capsys, "table")
    assert code == 0 and "I x II" in out.out
    code, out = run(capsys, "table", "--strict", "--json")
    data = json.loads(out.out)
    assert code == (0 if data["exact"] else 1)


def test_trace_product(capsys):
    code, out = run(capsys, "trace", "product")
    assert code == 0 and "stage 2: E=[1] F=[1] A={3} B={3}" in out.out


def test_trace_json_round_trips(capsys):
    from scottkit.gallery import VerificationReport
    code, out = run(capsys, "trace", "irreducibility", "--format", "json")
    rep = VerificationReport.from_dict(json.loads(out.out))
    assert code == 0 and rep.checks[0].details["point"] == "(4|top)"


def test_product_run(capsys):
    code, out = run(capsys, "product-run", "--open", "up:3,3", "--start", "5,4", "--json")
    assert code == 0 and json.loads(out.out)["checks"][0]["status"] == "pass"
    code, out = run(capsys, "product-run", "--open", "top-only", "--start", "w,w")
    assert code == 1
    code, out = run(capsys, "product-run", "--poset-left", "nope")
    assert code == 2


def test_fixtures(capsys, tmp_path):
    code, out = run(capsys, "fixtures", "check", str(Path(__file__).parent / "fixtures"))
    assert code == 0 and "diamond.poset" in out.out
    bad = tmp_path / "bad.poset"
    bad.write_text("poset 2\n0 a : 1\n")
    assert run(capsys, "fixtures", "check", str(bad))[0] == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "scottkit", "verify", "--scenario", "gadget-encodings"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "PASS" in r.stdout
