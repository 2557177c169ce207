import json
import subprocess
import sys
from importlib.resources import files

import pytest

from effsq.cli import main
from effsq.diagram import parse_diagram

FIXTURES = files("effsq") / "fixtures"


def fixture(name):
    return str(FIXTURES / f"{name}.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fold_square_rejected_with_kernel(capsys):
    code, out, _ = run(capsys, "check-square", "--class", "mono", "--in", fixture("fold_square"), "--json")
    assert code == 1
    result = json.loads(out)["squares"]["fold"]
    assert not result["effective"]
    assert result["witness"]["obstruction"]["kernel"] == [[1, -1]]


def test_double_square_depends_on_class(capsys):
    assert run(capsys, "check-square", "--class", "mono", "--in", fixture("double"))[0] == 0
    code, out, _ = run(capsys, "check-square", "--class", "pure", "--in", fixture("double"))
    assert code == 1 and "NOT effective" in out
    assert run(capsys, "check-square", "--in", fixture("double"))[0] == 1


def test_pushout_prints_canonical_apex(capsys):
    code, out, _ = run(capsys, "pushout", "--in", fixture("span_2_3"))
    assert code == 0 and out == "two_three: Z\n"


def test_snf_on_matrix(tmp_path, capsys):
    m = tmp_path / "m.json"
    m.write_text("[[2,4],[6,8]]")
    code, out, _ = run(capsys, "snf", "--in", str(m), "--json")
    data = json.loads(out)
    assert code == 0 and data["D"] == [[2, 0], [0, 4]] and data["canonical"] == "Z/2 + Z/4"


def test_snf_on_diagram(capsys):
    code, out, _ = run(capsys, "snf", "--in", fixture("span_2_3"))
    assert code == 0 and "Z" in out


def test_check_cube_fixtures(capsys):
    assert run(capsys, "check-cube", "--in", fixture("cube"))[0] == 0
    code, out, _ = run(capsys, "check-cube", "--in", fixture("near_miss_cube"), "--json")
    assert code == 1 and not json.loads(out)["cubes"]["near_miss"]["effective"]


def test_ill_defined_input_exits_2(capsys):
    code, _, err = run(capsys, "check-square", "--in", fixture("ill_defined"))
    assert code == 2 and "IllDefined" in err


def test_bad_json_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{")
    assert run(capsys, "pushout", "--in", str(p))[0] == 2


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["suite", "--class", "epi"],
    ["suite", "nosuch"],
    ["suite", "--trials", "0"],
    ["suite", "--max-dim", "9"],
    ["suite", "--replay", "5"],
    ["gen", "widget"],
])
def test_usage_errors_exit_64(capsys, argv):
    assert run(capsys, *argv)[0] == 64


def test_missing_file_exits_74(capsys, tmp_path):
    assert run(capsys, "pushout", "--in", str(tmp_path / "absent.json"))[0] == 74


def test_unknown_name_exits_2(capsys):
    assert run(capsys, "pushout", "--name", "zzz", "--in", fixture("span_2_3"))[0] == 2


def test_suite_json_is_deterministic(capsys):
    argv = ["suite", "closure", "--class", "pure", "--trials", "50", "--seed", "7", "--json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0 and out1 == out2
    report = json.loads(out1)
    assert report["schema"] == "effsq-report/1" and report["elapsed_ms"] is None
    assert report["seed"] == 7
    assert all(set(p) == {"name", "pass", "fail", "vacuous", "failing_seeds", "witnesses"}
               for p in report["properties"])


def test_env_seed_overrides_flag(capsys, monkeypatch):
    monkeypatch.setenv("EFFSQ_SEED", "11")
    _, out, _ = run(capsys, "suite", "linalg", "--trials", "5", "--seed", "3", "--json")
    assert json.loads(out)["seed"] == 11
    monkeypatch.setenv("EFFSQ_SEED", "eleven")
    assert run(capsys, "suite", "linalg", "--trials", "5")[0] == 64


def test_timing_flag_records_elapsed(capsys):
    _, out, _ = run(capsys, "suite", "linalg", "--trials", "5", "--json", "--timing")
    assert isinstance(json.loads(out)["elapsed_ms"], float)


def test_replay_single_trial(capsys):
    code, out, _ = run(capsys, "suite", "core", "--replay", "123", "--property", "core/exactness")
    assert code == 0 and json.loads(out)["passed"]
    assert run(capsys, "suite", "core", "--replay", "1", "--property", "core/nope")[0] == 2


def test_table_output(capsys):
    code, out, _ = run(capsys, "suite", "linalg", "--trials", "5")
    assert code == 0 and out.rstrip().endswith("OK")


@pytest.mark.parametrize("kind", ["group", "hom", "mono", "span", "square", "effective-square", "cube"])
def test_gen_writes_parseable_documents(capsys, tmp_path, kind):
    out = tmp_path / "doc.json"
    assert run(capsys, "gen", kind, "--seed", "2", "--out", str(out))[0] == 0
    parse_diagram(out.read_text())


def test_gen_cube_pipes_into_check():
    gen = subprocess.run([sys.executable, "-m", "effsq.cli", "gen", "near-miss-cube", "--seed", "4"],
                         capture_output=True, text=True, check=True)
    check = subprocess.run([sys.executable, "-m", "effsq.cli", "check-cube", "--class", "mono"],
                           input=gen.stdout, capture_output=True, text=True)
    assert check.returncode == 1 and "NOT effective" in check.stdout
