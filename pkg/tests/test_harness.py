import json
import shutil
from pathlib import Path

import pytest

from qtshuffle.coeffs import q, t
from qtshuffle.harness import goldens
from qtshuffle.harness.cache import CacheCorruptionError, JsonCache
from qtshuffle.harness.cases import (
    CONJECTURE, COUNTEREXAMPLE, ERROR, FAIL, OBSERVATION, PASS, PROVED, SKIPPED, Check, exit_code,
    first_difference, run_checks,
)
from qtshuffle.harness.cli import main, parse_op
from qtshuffle.harness.config import Config, ConfigError, parse_config
from qtshuffle.harness.report import build_report, dumps_csv, dumps_json, strip_timing
from qtshuffle.harness.runner import UnknownSuiteError, combined_exit_code, run_suite
from qtshuffle.harness.suites.common import Selection
from qtshuffle.limits import Limits
from qtshuffle.operators import OpExpr, Q
from qtshuffle.symfunc import s

GOLDEN = Path(goldens.__file__).parent / "golden"


# configuration ----------------------------------------------------------------------------

def test_config_roundtrip():
    cfg = Config(degree_cap=9, jobs=2, formats=("json",), record_timing=False)
    assert parse_config(cfg.dumps()) == cfg
    assert cfg.limits() == Limits(9, 14, 8, 8)


@pytest.mark.parametrize("text,message", [
    ("degree_cap = 8\n", "must declare 'version'"),
    ("version = 1\ncolour = red\n", "unknown key"),
    ("version = 1\ndegree_cap = eight\n", "expected an integer"),
    ("version = 1\nrecord_timing = maybe\n", "expected a boolean"),
    ("version = 1\nkn_cap = 12\n", "exceeds degree_cap"),
    ("version = 2\n", "unsupported config version"),
    ("version = 1\nformats = json,xml\n", "unknown output formats"),
    ("version = 1\njobs = 0\n", "must be positive"),
    ("version = 1\ntruncation = fixed\n", "unknown truncation"),
    ("version = 1\nthis line has no equals sign\n", "expected 'key = value'"),
])
def test_config_errors(text, message):
    with pytest.raises(ConfigError, match=message):
        parse_config(text)


def test_config_comments_and_blank_lines():
    cfg = parse_config("# run settings\nversion = 1\n\ncache_dir = /tmp/x  # local\n")
    assert cfg.cache_dir == "/tmp/x"


# cache ----------------------------------------------------------------------------------

def test_cache_roundtrip_and_corruption(tmp_path):
    cache = JsonCache(tmp_path)
    cache.put_json("basis-n3", {"a": [1, 2, 3]})
    assert cache.get_json("basis-n3") == {"a": [1, 2, 3]}
    assert cache.get_json("missing") is None
    assert cache.keys() == ["basis-n3"]

    path = tmp_path / "basis-n3.json"
    doc = json.loads(path.read_text())
    doc["payload"]["a"][0] = 99
    path.write_text(json.dumps(doc))
    with pytest.raises(CacheCorruptionError, match="checksum"):
        cache.get_json("basis-n3")

    path.write_text("{not json")
    with pytest.raises(CacheCorruptionError, match="unreadable"):
        cache.get_json("basis-n3")

    with pytest.raises(ValueError):
        cache.put_json("../escape", {})
    cache.clear()
    assert cache.keys() == []


def test_corrupted_basis_cache_is_reported(tmp_path):
    from qtshuffle.macdonald import build_basis, forget_bases

    cache = JsonCache(tmp_path)
    forget_bases()
    try:
        build_basis(2, Limits(), cache)
        forget_bases()
        (tmp_path / "macdonald-v1-n2.json").write_text('{"payload": {}, "sha256": "0"}')
        with pytest.raises(CacheCorruptionError):
            build_basis(2, Limits(), cache)
    finally:
        forget_bases()


# cases ----------------------------------------------------------------------------------

def _c(case_id, status, lhs, rhs):
    return Check(case_id, "identity", status, {}, "lhs", "rhs", lambda: (lhs, rhs))


def _boom():
    raise ZeroDivisionError("division by zero in Q(q,t)")


def test_run_checks_results_and_abort():
    checks = [
        _c("ok", PROVED, 1, 1),
        _c("finding", CONJECTURE, q, t),
        _c("seen", OBSERVATION, 1, 2),
        _c("broken", PROVED, s((2,)), s((1, 1))),
        _c("after", PROVED, 1, 1),
    ]
    cases = run_checks(checks)
    assert [c.result for c in cases] == [PASS, COUNTEREXAMPLE, COUNTEREXAMPLE, FAIL, SKIPPED]
    assert cases[3].payload["first_difference"] == "coefficient of s[2]: 1 vs 0"
    assert "broken" in cases[4].payload["reason"]
    assert exit_code(cases) == 1
    assert exit_code(cases[:3]) == 2
    assert exit_code(cases[:1]) == 0


def test_errors_are_recorded_and_gate():
    cases = run_checks([Check("err", "identity", CONJECTURE, {}, "a", "b", _boom)])
    assert cases[0].result == ERROR
    assert "ZeroDivisionError" in cases[0].payload["error"]
    assert exit_code(cases) == 1


def test_parallel_run_keeps_order():
    checks = [_c(f"c{i}", PROVED, i, i) for i in range(6)]
    cases = run_checks(checks, jobs=2)
    assert [c.case_id for c in cases] == [f"c{i}" for i in range(6)]
    assert all(c.result == PASS for c in cases)


def test_first_difference_descriptions():
    assert first_difference(q + 2 * t, q + 3 * t) == "coefficient of q^0*t^1: 2 vs 3"
    assert first_difference(Q(3, 5), Q(3, 5)) is None
    assert first_difference(OpExpr.letter(1), OpExpr.letter(2)).startswith("coefficient of D[2]")
    assert first_difference([1, 2], [1, 3]) == "at index 1: 2 vs 3"


def test_report_is_deterministic_without_timing():
    checks = [_c("a", PROVED, 1, 1), _c("b", CONJECTURE, q, t)]
    one = dumps_json(strip_timing(build_report("demo", run_checks(checks), Config().to_dict())))
    two = dumps_json(strip_timing(build_report("demo", run_checks(checks), Config().to_dict())))
    assert one == two
    report = json.loads(one)
    assert report["totals"] == {CONJECTURE: {COUNTEREXAMPLE: 1}, PROVED: {PASS: 1}}
    assert report["exit_code"] == 2
    assert dumps_csv(run_checks(checks), timing=False).splitlines()[0].startswith("case_id;kind;status")


# runner and goldens ---------------------------------------------------------------------------

def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("nonsense")


def test_combined_exit_codes():
    class R:
        def __init__(self, code):
            self.exit_code = code

    assert combined_exit_code([R(0), R(2)]) == 2
    assert combined_exit_code([R(2), R(1)]) == 1
    assert combined_exit_code([R(0)]) == 0


def test_golden_errors(tmp_path):
    with pytest.raises(goldens.GoldenError, match="not found"):
        goldens.load("e36_schur", tmp_path)
    (tmp_path / "e36_schur.json").write_text("{")
    with pytest.raises(goldens.GoldenError, match="not valid JSON"):
        goldens.load("e36_schur", tmp_path)


def test_catalan_suite_selection_runs_clean(tmp_path):
    run = run_suite("catalan", Config(), tmp_path, selection=Selection(m=2, n=3))
    assert run.exit_code == 0
    assert {c.result for c in run.cases} == {PASS}
    assert sorted(p.name for p in run.paths) == ["catalan.csv", "catalan.json"]


# command line ---------------------------------------------------------------------------------

def test_cli_catalan(capsys):
    assert main(["catalan", "--m", "2", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "all 4 methods agree" in out
    assert "t + q" in out


def test_cli_expand(capsys):
    assert main(["expand", "--op", "Q(3,5)", "--words"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [w["letters"] for w in data["words"]["words"]] == [[2, 2, 1], [2, 1, 2], [1, 2, 2]]
    assert main(["expand", "--op", "e(3,6)"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["apply_to"] == -1
    assert main(["expand", "--op", "C(2,4)"]) == 1
    assert "needs a composition" in capsys.readouterr().err


def test_parse_op_forms():
    lim = Limits()
    assert parse_op("D(3)", lim) == (OpExpr.letter(3), 1)
    assert parse_op("Q(2,3)", lim)[1] == -1
    assert parse_op("B(2,4;1,1)", lim)[1] == 1
    with pytest.raises(ValueError):
        parse_op("X(1,2)", lim)


def test_cli_paths(capsys):
    assert main(["paths", "--m", "1", "--n", "2", "--k", "3", "--alpha", "1,2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "u;area;dinv_path;parking_functions"
    assert len(lines) > 1
    assert main(["paths", "--m", "2", "--n", "3", "--csv"]) == 0
    assert capsys.readouterr().out.startswith("u;v;area")


def test_cli_cap_violation(capsys):
    assert main(["verify", "--suite", "conjectures", "--m", "1", "--n", "3", "--k", "3"]) == 1
    assert "exceeds degree_cap" in capsys.readouterr().err


def test_cli_bad_config(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("version = 1\nmn_cap = lots\n")
    assert main(["verify", "--suite", "catalan", "--config", str(cfg)]) == 1
    assert "expected an integer" in capsys.readouterr().err


def test_cli_golden_mismatch_reports_first_difference(tmp_path, capsys):
    golden = tmp_path / "golden"
    shutil.copytree(GOLDEN, golden)
    data = json.loads((golden / "e36_schur.json").read_text())
    first = data["terms"][0]
    first["coeff"] = first["coeff"] + " + 1"
    (golden / "e36_schur.json").write_text(json.dumps(data))

    out_dir = tmp_path / "out"
    code = main(["verify", "--suite", "paper-tables", "--m", "1", "--n", "2", "--k", "3",
                 "--golden", str(golden), "--out", str(out_dir), "--quiet"])
    assert code == 1
    out = capsys.readouterr().out
    index = first["index"]
    assert f"FAIL     golden-e36-schur  coefficient of s{index}:" in out
    report = json.loads((out_dir / "paper-tables.json").read_text())
    results = {c["case_id"]: c["result"] for c in report["cases"]}
    assert results["golden-e36-schur"] == FAIL
    # a proved failure stops the run; later cases are skipped, not silently passed
    assert set(results.values()) == {FAIL, SKIPPED}
