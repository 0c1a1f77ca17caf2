"""Report serialization and the command line runner."""

import json

import pytest

from liecert.cli import CHECKS, DEFAULT_ORDER, main
from liecert.report import FAIL, PASS, SKIP, CheckRecord, Report


def _record(status=PASS):
    return CheckRecord("closure", "bracket identity", {"n": 2},
                       status, {"pairs": 36}, "")


def test_report_status_aggregation():
    rep = Report("so", 2)
    rep.add(_record(PASS))
    assert rep.status == PASS
    rep.add(_record(SKIP))
    assert rep.status == PASS
    rep.add(_record(FAIL))
    assert rep.status == FAIL
    assert rep.counts() == {PASS: 1, FAIL: 1, SKIP: 1}


def test_report_json_round_trip():
    rep = Report("sp", 3)
    rep.add(_record())
    blob = rep.to_json()
    again = Report.from_json(blob)
    assert again.to_json() == blob
    data = json.loads(blob)
    assert data["schema"] == 1
    assert data["family"] == "sp(6)"
    assert data["checks"][0]["check"] == "closure"


def test_report_json_is_sorted_and_terminated():
    rep = Report("so", 2)
    rep.add(_record())
    blob = rep.to_json()
    assert blob.endswith("\n")
    assert json.dumps(json.loads(blob), sort_keys=True, indent=2) + "\n" == blob


def test_registry_covers_default_order():
    assert sorted(CHECKS) == sorted(DEFAULT_ORDER)
    assert len(DEFAULT_ORDER) == 9


def test_run_all_checks_pass_so4(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(["run", "--algebra", "so", "--n", "2",
               "--format", "json", "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_text())
    assert data["status"] == "pass"
    assert data["summary"] == {"total": 9, "passed": 9, "failed": 0, "skipped": 0}
    ids = [c["check"] for c in data["checks"]]
    assert ids == DEFAULT_ORDER


def test_json_reports_are_byte_identical(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    argv = ["run", "--algebra", "sp", "--n", "1", "--format", "json"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_text_report_to_stdout(capsys):
    rc = main(["run", "--algebra", "sp", "--n", "1", "--check", "closure"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "liecert certification: sp(2)" in out
    assert "[PASS] closure" in out


def test_check_selection_and_dedup(tmp_path):
    out = tmp_path / "r.json"
    rc = main(["run", "--algebra", "sp", "--n", "1", "--check", "killing",
               "--check", "closure", "--check", "killing",
               "--format", "json", "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_text())
    assert [c["check"] for c in data["checks"]] == ["killing", "closure"]


def test_exit_code_two_for_so2(capsys):
    assert main(["run", "--algebra", "so", "--n", "1"]) == 2
    err = capsys.readouterr().err
    assert "so(2)" in err


def test_exit_code_two_for_bad_values(capsys):
    assert main(["run", "--algebra", "so", "--n", "0"]) == 2
    assert main(["run", "--algebra", "so", "--n", "2", "--m-max", "1"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["run", "--algebra", "so", "--n", "2", "--check", "bogus"])
    assert exc.value.code == 2


def test_exit_code_one_on_failure(tmp_path, monkeypatch):
    """Plumbing only: a failing record must drive exit status 1."""
    def failing_runner(ctx, space, args):
        return CheckRecord("closure", "forced failure", {"n": ctx.n},
                           FAIL, {}, "injected")
    runner, needs, text = CHECKS["closure"]
    monkeypatch.setitem(CHECKS, "closure", (failing_runner, needs, text))
    out = tmp_path / "r.json"
    rc = main(["run", "--algebra", "sp", "--n", "1", "--check", "closure",
               "--format", "json", "--out", str(out)])
    assert rc == 1
    data = json.loads(out.read_text())
    assert data["status"] == "fail"


def test_cap_dim_skips_spectral_checks(tmp_path):
    out = tmp_path / "r.json"
    rc = main(["run", "--algebra", "so", "--n", "2", "--cap-dim", "5",
               "--format", "json", "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_text())
    by_id = {c["check"]: c for c in data["checks"]}
    for check_id in ("projector", "identities", "pairing"):
        assert by_id[check_id]["status"] == "skipped"
    assert by_id["closure"]["status"] == "pass"
    assert data["summary"]["skipped"] == 3


def test_explain_lists_and_details(capsys):
    assert main(["explain"]) == 0
    listing = capsys.readouterr().out
    for check_id in DEFAULT_ORDER:
        assert check_id in listing
    assert main(["explain", "constraints"]) == 0
    text = capsys.readouterr().out
    assert "eps(2n-eps)/4" in text
    with pytest.raises(SystemExit) as exc:
        main(["explain", "bogus"])
    assert exc.value.code == 2


def test_reports_record_identity_and_params(tmp_path):
    out = tmp_path / "r.json"
    main(["run", "--algebra", "sp", "--n", "1", "--check", "pairing",
          "--format", "json", "--out", str(out)])
    record = json.loads(out.read_text())["checks"][0]
    assert record["params"]["n"] == 1
    assert record["detail"]["quadratic"] == "t^2 + (1/4)t + (3/256)"
    assert record["detail"]["roots"] == "-1/16,-3/16"
