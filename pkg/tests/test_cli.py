import csv
import io
import json

import pytest

from engelkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert len(out.splitlines()) == 32
    assert out.startswith("C2")


def test_analyze_json(capsys, tmp_path):
    path = tmp_path / "s4.json"
    code, out, _ = run(capsys, "analyze", "S4", "--json", str(path), "--elements")
    assert code == 0
    info = json.loads(path.read_text())
    assert info["fitting_order"] == 4 and info["fitting_height"] == 3 and info["m"] == 12
    assert len(info["elements"]) == 24
    assert "fitting_height: 3" in out


def test_analyze_group_file(capsys, tmp_path):
    f = tmp_path / "t.grp"
    f.write_text("name=T\ndegree=3\ngens=(1 2),(1 2 3)\n")
    code, out, _ = run(capsys, "analyze", str(f))
    assert code == 0 and "order: 6" in out


def test_engel(capsys):
    code, out, _ = run(capsys, "engel", "S3", "--element", "(1 2)")
    assert code == 0
    assert "E_n orders: 3,3" in out and "Engel: false" in out and "n_stab: 1" in out
    code, out, _ = run(capsys, "engel", "S3", "--element", "(1 2 3)")
    assert "E_n orders: 3,1" in out and "Engel: true" in out


def test_engel_element_not_in_group(capsys):
    code, _, err = run(capsys, "engel", "A4", "--element", "(1 2)")
    assert code == 2 and "not an element" in err


@pytest.mark.parametrize("argv", [
    ["analyze", "M24"],
    ["engel", "S3", "--element", "(1 2"],
    ["analyze", "nosuchfile.grp"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "--suite", "nope"])
    assert e.value.code == 2


def test_bad_group_file_reports_position(capsys, tmp_path):
    f = tmp_path / "bad.grp"
    f.write_text("name=X\ngens=(1 2(3)\n")
    code, _, err = run(capsys, "analyze", str(f))
    assert code == 2 and "line 2, column 10" in err


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "analyze", "S6", "--max-order", "100")
    assert code == 3 and "cap" in err


def test_verify_failure_exit_code(capsys, tmp_path):
    bad = tmp_path / "base.csv"
    bad.write_text("group,order,m,gamma_inf,fitting_index,quotient_exponent,fitting_height,nilpotent\n"
                   "S3,6,1,3,2,2,2,false\n")
    code, out, _ = run(capsys, "verify", "--suite", "theorem", "--group", "S3", "--baseline", str(bad))
    assert code == 1 and "FAIL S3" in out


def test_verify_report(capsys, tmp_path):
    rep = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "baer,zorn", "--group", "S3", "--group",
                       "frobenius(5,4)", "--report", str(rep))
    assert code == 0
    data = json.loads(rep.read_text())
    assert data["corpus"] == ["S3", "Frob5:4"]
    assert data["seed"] == 0


def test_table_csv(capsys, tmp_path):
    out_path = tmp_path / "t.csv"
    code, _, _ = run(capsys, "table", "--group", "S3", "--group", "C12", "--out", str(out_path))
    assert code == 0
    rows = list(csv.reader(io.StringIO(out_path.read_text(), newline="")))
    assert rows[0][0] == "group"
    assert rows[1] == ["S3", "6", "3", "3", "2", "2", "2", "false"]
    assert rows[2] == ["C12", "12", "1", "1", "1", "1", "1", "true"]


def test_table_unwritable(capsys, tmp_path):
    code, _, _ = run(capsys, "table", "--group", "S3", "--out", str(tmp_path / "no" / "t.csv"))
    assert code == 2
