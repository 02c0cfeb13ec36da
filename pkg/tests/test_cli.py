import json

import pytest

from qbinomdiff.cli import main
from qbinomdiff.conjecture import CSV_HEADER, DiffSpec, check
from qbinomdiff.koh import KohTerm
from qbinomdiff.poly import IntPoly
from qbinomdiff.qbinom import qbinomial


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse exits directly on usage errors
        code = exc.code if isinstance(exc.code, int) else 1
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_qbinom_text(capsys):
    code, out, _ = run(capsys, "qbinom", "6", "3")
    assert code == 0
    assert out == "1 + q + 2q^2 + 3q^3 + 3q^4 + 3q^5 + 3q^6 + 2q^7 + q^8 + q^9\n"
    assert run(capsys, "qbinom", "5", "0")[1] == "1\n"
    assert run(capsys, "qbinom", "3", "5")[1] == "0\n"


def test_qbinom_json_round_trip(capsys):
    code, out, _ = run(capsys, "qbinom", "--format", "json", "6", "3")
    assert code == 0
    data = json.loads(out)
    assert IntPoly.from_decimal_strings(data["coeffs"]) == qbinomial(6, 3)


def test_f_command(capsys):
    code, out, _ = run(capsys, "f", "4", "5", "4")
    assert code == 0
    assert out == "-q^2\n"
    code, out, _ = run(capsys, "f", "--format", "json", "3", "6", "2")
    data = json.loads(out)
    assert data["shift_exponent"] == 4
    assert IntPoly.from_decimal_strings(data["coeffs"]) == IntPoly(
        [1, 1, 2, 3, 2, 2, 3, 2, 1, 1]
    )


def test_check_agreement_exit_zero(capsys):
    code, out, _ = run(capsys, "check", "3", "6", "2")
    assert code == 0
    assert "unimodal=false" in out and "predicted_exception=true" in out
    code, _, _ = run(capsys, "check", "5", "21", "29")
    assert code == 0


def test_check_invalid_spec_exit_one(capsys):
    code, _, err = run(capsys, "check", "5", "20", "7")
    assert code == 1
    assert "parity" in err


def test_check_disagreement_exit_two(capsys):
    # f(5,19,23) genuinely fails, but with the threshold forced down to 19 the
    # prediction says it should pass: a reportable disagreement
    code, out, _ = run(capsys, "check", "--threshold", "5=19", "5", "19", "23")
    assert code == 2
    assert "agrees=false" in out
    # the stock threshold table makes no claim there
    assert run(capsys, "check", "5", "19", "23")[0] == 0


def test_check_json_round_trip(capsys):
    code, out, _ = run(capsys, "check", "--format", "json", "3", "6", "2")
    assert code == 0
    data = json.loads(out)[0]
    from qbinomdiff.conjecture import CheckReport

    assert CheckReport.from_json_dict(data) == check(DiffSpec(3, 6, 2))


def test_scan_formats_and_exit(capsys):
    code, out, _ = run(capsys, "scan", "3", "3", "12")
    assert code == 0
    assert out.count("\n") == sum(1 for _ in out.splitlines())
    code, out, _ = run(capsys, "scan", "--format", "csv", "3", "3", "12")
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[1].startswith("3,3,1,")
    code, out, _ = run(capsys, "scan", "--format", "json", "3", "3", "12")
    data = json.loads(out)
    assert all(row["agrees"] for row in data)


def test_scan_only_disagreements(capsys):
    code, out, _ = run(capsys, "scan", "--only-disagreements", "3", "3", "20")
    assert code == 0
    assert out == ""
    code, out, _ = run(
        capsys, "scan", "--only-disagreements", "--threshold", "5=5", "5", "5", "19"
    )
    assert code == 2
    assert out != ""
    assert all("agrees=false" in line for line in out.splitlines())


def test_scan_determinism_across_workers(capsys):
    outputs = []
    for workers in ("1", "4", "8"):
        code, out, _ = run(
            capsys, "scan", "--format", "json", "--workers", workers, "5", "20", "32"
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_scan_bad_range_exit_one(capsys):
    code, _, err = run(capsys, "scan", "3", "10", "5")
    assert code == 1
    assert "m_lo" in err


def test_koh_command(capsys):
    code, out, _ = run(capsys, "koh", "2", "3")
    assert code == 0
    assert out.endswith("sum identity: PASS\n")
    assert "partition=(2, 1)" in out

    code, out, _ = run(capsys, "koh", "--format", "json", "19", "5")
    assert code == 0
    data = json.loads(out)
    assert data["identity"] is True
    assert len(data["terms"]) == 7
    terms = [KohTerm.from_json_dict(t) for t in data["terms"]]
    total = IntPoly()
    for term in terms:
        total = total + term.poly
    assert total == qbinomial(24, 5)

    code, out, _ = run(capsys, "koh", "0", "4")
    assert code == 0
    assert out.endswith("sum identity: PASS\n")


def test_twelve_command(capsys):
    code, out, _ = run(capsys, "twelve", "4")
    assert code == 0
    assert len(out.splitlines()) == 12
    assert run(capsys, "twelve", "3")[0] == 1


def test_reduction_command(capsys):
    code, out, _ = run(capsys, "reduction", "4", "--b-max", "40")
    assert code == 0
    assert all(line.endswith("holds=true") for line in out.splitlines())
    code, out, _ = run(capsys, "reduction", "--format", "csv", "5", "--b-max", "20")
    lines = out.splitlines()
    assert lines[0] == "k,b,holds"
    assert lines[1] == "5,7,true"
    assert run(capsys, "reduction", "3")[0] == 1


def test_rs_scan_command(capsys):
    # the (3,6,2) counterexample appears in the slice but agrees with prediction
    code, out, _ = run(capsys, "rs-scan", "3", "3", "20")
    assert code == 0
    assert "f(3,6,2)" in out
    row = next(line for line in out.splitlines() if line.startswith("f(3,6,2)"))
    assert "unimodal=false" in row and "agrees=true" in row


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "no-such-command")[0] == 1
    assert run(capsys)[0] == 1
    assert run(capsys, "qbinom", "6")[0] == 1
    assert run(capsys, "qbinom", "6", "3", "--bogus")[0] == 1
    assert run(capsys, "scan", "3", "3", "10", "--workers", "0")[0] == 1
    assert run(capsys, "check", "--threshold", "nonsense", "3", "6", "2")[0] == 1
    assert run(capsys, "check", "--threshold", "4=10", "3", "6", "2")[0] == 1
    assert run(capsys, "qbinom", "--format", "csv", "6", "3")[0] == 1
    assert run(capsys, "koh", "--", "-1", "3")[0] == 1


def test_cache_flag_round_trip(tmp_path, capsys):
    path = tmp_path / "qb.json"
    code, first, _ = run(capsys, "qbinom", "--cache", str(path), "10", "4")
    assert code == 0
    assert path.exists()
    saved = json.loads(path.read_text())
    assert "10,4" in saved
    code, second, _ = run(capsys, "qbinom", "--cache", str(path), "10", "4")
    assert code == 0
    assert first == second


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    path = tmp_path / "env-cache.json"
    monkeypatch.setenv("QBINOMDIFF_CACHE", str(path))
    code, _, _ = run(capsys, "qbinom", "8", "3")
    assert code == 0
    assert path.exists()


def test_cache_corrupt_file_warns_and_continues(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{broken")
    with pytest.warns(UserWarning, match="discarding corrupt"):
        code, out, _ = run(capsys, "qbinom", "--cache", str(path), "6", "3")
    assert code == 0
    assert out.startswith("1 + q")
    # the save at exit replaces the corrupt file with a valid one
    json.loads(path.read_text())
