import csv
import io
import json
import subprocess
import sys

import pytest

from hkdet import hk_closed
from hkdet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hk_single(capsys):
    code, out, _ = run(capsys, "hk", "--m", "2", "--n", "2", "--q", "2")
    assert code == 0
    assert out == "m,n,q,hk\n2,2,2,10\n"


def test_hk_range_csv_and_json_agree(capsys):
    _, out_csv, _ = run(capsys, "hk", "--m", "3", "--n", "4", "--q-range", "0:6")
    _, out_json, _ = run(capsys, "hk", "--m", "3", "--n", "4", "--q-range", "0:6",
                         "--format", "json")
    rows = list(csv.DictReader(io.StringIO(out_csv)))
    records = json.loads(out_json)
    assert [r["hk"] for r in rows] == [r["hk"] for r in records]
    assert [int(r["q"]) for r in rows] == [r["q"] for r in records] == list(range(7))
    assert records[-1]["hk"] == str(hk_closed(3, 4, 6))


def test_hk_small_cases(capsys):
    _, out, _ = run(capsys, "hk", "--m", "1", "--n", "1", "--q-range", "1:3")
    assert out.splitlines()[1:] == ["1,1,1,1", "1,1,2,2", "1,1,3,3"]
    _, out, _ = run(capsys, "hk", "--m", "3", "--n", "3", "--q", "1")
    assert out.splitlines()[1] == "3,3,1,1"


def test_hk_is_deterministic_and_big(capsys):
    _, a, _ = run(capsys, "hk", "--m", "10", "--n", "10", "--q", "1000000")
    _, b, _ = run(capsys, "hk", "--m", "10", "--n", "10", "--q", "1000000")
    assert a == b
    assert int(a.splitlines()[1].split(",")[3]) == hk_closed(10, 10, 10**6)


@pytest.mark.parametrize(
    "argv",
    [
        ["hk", "--m", "0", "--n", "2", "--q", "2"],
        ["hk", "--m", "2", "--n", "2"],
        ["hk", "--m", "2", "--n", "2", "--q", "1", "--q-range", "1:2"],
        ["hk", "--m", "2", "--n", "2", "--q-range", "5:2"],
        ["hk", "--m", "2", "--n", "2", "--q-range", "x"],
        ["hk", "--m", "2", "--n", "2", "--q", "-1"],
        ["count", "--kind", "nq", "--m", "2", "--n", "2", "--q", "2", "--cols", "1,0"],
        ["count", "--kind", "nq", "--m", "2", "--n", "2", "--q", "2", "--cols", "1,2,3"],
        ["count", "--kind", "nq", "--m", "2", "--n", "2", "--q", "2", "--rows", "a"],
        ["count", "--kind", "mq", "--m", "0", "--n", "2", "--q", "2"],
        ["fit", "--m", "2", "--n", "2", "--check-upto", "1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "error" in err


def test_argparse_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--kind", "bogus", "--m", "1", "--n", "1", "--q", "1"])
    assert exc.value.code == 2


def test_count_examples(capsys):
    assert run(capsys, "count", "--kind", "nq", "--m", "0", "--n", "3", "--q", "5")[1] == "1\n"
    assert run(capsys, "count", "--kind", "nq", "--m", "2", "--n", "2", "--q", "2",
               "--rows", "inf", "--cols", "inf", "--method", "oracle-margins")[1] == "10\n"
    assert run(capsys, "count", "--kind", "mq", "--m", "2", "--n", "1", "--q", "3",
               "--method", "closed")[1] == "3\n"


def test_count_methods_agree(capsys):
    for kind, cols in [("nq", "inf"), ("nq", "2"), ("mq", "2")]:
        outs = {
            run(capsys, "count", "--kind", kind, "--m", "2", "--n", "3", "--q", "3",
                "--cols", cols, "--method", method)[1]
            for method in ("closed", "oracle-margins", "oracle-matrix")
        }
        assert len(outs) == 1


def test_count_oracle_with_arbitrary_bounds(capsys):
    code, out, _ = run(capsys, "count", "--kind", "nq", "--m", "2", "--n", "2", "--q", "2",
                       "--cols", "1,1", "--method", "oracle-matrix")
    assert (code, out) == (0, "8\n")


def test_count_budget_exhaustion(capsys):
    code, out, err = run(capsys, "count", "--kind", "nq", "--m", "3", "--n", "3", "--q", "5",
                         "--method", "oracle-margins", "--work-budget", "1000")
    assert code == 3
    assert "work budget" in err and "q=5" in err


def test_budget_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("HKDET_WORK_BUDGET", "100")
    argv = ["count", "--kind", "nq", "--m", "2", "--n", "2", "--q", "3",
            "--method", "oracle-margins"]
    assert run(capsys, *argv)[0] == 3
    assert run(capsys, *argv, "--work-budget", "100000")[1] == "35\n"
    monkeypatch.setenv("HKDET_WORK_BUDGET", "lots")
    assert run(capsys, *argv)[0] == 2


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "corollary", "--max-n", "10",
                       "--max-q", "50")
    assert code == 0 and out.startswith("corollary: 510 checks passed")
    code, out, _ = run(capsys, "verify", "--suite", "m2", "--max-n", "8", "--max-q", "30")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--max-m", "2", "--max-n", "2",
                       "--max-q", "3")
    assert code == 0


def test_verify_reports_counterexample(capsys, monkeypatch):
    import hkdet.verify as verify

    monkeypatch.setattr(verify, "corollary_rhs", lambda n, q: 0 if (n, q) == (3, 2) else
                        verify.corollary_lhs(n, q))
    code, out, _ = run(capsys, "verify", "--suite", "corollary")
    assert code == 1
    assert "counterexample" in out and "n=3, q=2" in out


def test_verify_budget(capsys):
    code, _, err = run(capsys, "verify", "--suite", "oracle", "--work-budget", "50")
    assert code == 3
    assert "CountSpec(m=" in err


def test_fit_output(capsys):
    code, out, _ = run(capsys, "fit", "--m", "2", "--n", "2")
    payload = json.loads(out)
    assert code == 0
    assert payload["degree"] == 3
    assert payload["leading_coefficient"] == {"num": "4", "den": "3"}
    assert payload["verified_upto"] == 14
    _, out, _ = run(capsys, "fit", "--m", "1", "--n", "1")
    assert [c["num"] for c in json.loads(out)["coefficients"]] == ["0", "1"]
    _, out, _ = run(capsys, "fit", "--m", "1", "--n", "2", "--check-upto", "30")
    payload = json.loads(out)
    assert [(c["num"], c["den"]) for c in payload["coefficients"]] == [
        ("0", "1"), ("0", "1"), ("1", "1")
    ]
    assert payload["verified_upto"] == 30


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hkdet", "hk", "--m", "2", "--n", "3", "--q", "2",
         "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == [{"m": 2, "n": 3, "q": 2, "hk": str(hk_closed(2, 3, 2))}]
