"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line,
repeated in the summary at the end of the run."""
from collections import Counter

from qtshuffle.coeffs import parse, specialize, specialize_q
from qtshuffle.ctengine import catalan_count, catalan_pairing, catalan_tableaux, negut_ct
from qtshuffle.harness import goldens
from qtshuffle.harness.cases import CONJECTURE, PASS, run_checks
from qtshuffle.harness.config import Config
from qtshuffle.harness.runner import make_context, run_suite
from qtshuffle.harness.suites import paper_tables
from qtshuffle.operators import Q, _q_cached, e_operator_value
from qtshuffle.ratpark import enum_paths, path_sum
from qtshuffle.symfunc import e, hall, s

CATALAN_PAIRS = ((1, 2), (1, 3), (2, 3), (3, 2), (2, 5), (3, 4), (3, 5))


def _tally(cases) -> tuple[bool, str]:
    counts = Counter(c.result for c in cases)
    bad = [c for c in cases if c.result != PASS]
    detail = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
    if bad:
        first = bad[0]
        why = first.payload.get("first_difference") or first.payload.get("error") or ""
        detail += f"; first: {first.case_id} {why}".rstrip()
    return not bad, detail


def _e36():
    return e_operator_value(1, 2, 3)


def test_criterion_01_q35_word(criterion):
    def compute():
        _q_cached.cache_clear()
        got = Q(3, 5)
        want = goldens.word_expansion(goldens.load("q35_word"))
        return got == want, f"{len(got.words)} words"

    ok, in_time, _, detail = criterion.run(1, "Q(3,5) word expansion", compute, 1.0)
    assert ok, detail
    assert in_time


def test_criterion_02_splits_and_bracketings(criterion):
    def compute():
        ctx = make_context(Config())
        return _tally(run_checks(paper_tables.split_cases(ctx)))

    ok, in_time, elapsed, detail = criterion.run(2, "splits and the (12,8) bracketings", compute, 30.0)
    assert ok, detail
    assert in_time, f"correct, but took {elapsed:.1f} s"


def test_criterion_03_e36_schur(criterion):
    def compute():
        got = _e36()
        want = goldens.symf(goldens.load("e36_schur"))
        return got == want, f"{len(got.to_basis('s'))} Schur terms"

    ok, in_time, _, detail = criterion.run(3, "e_{3,6}.(-1) Schur expansion", compute, 300.0)
    assert ok, detail
    assert in_time


def test_criterion_04_e36_hilbert(criterion):
    def compute():
        data = goldens.load("e36_pairings")
        val = hall(_e36(), e(1) ** 6)
        checks = {
            "polynomial": val == parse(data["hilbert"]),
            "q=1 slice": specialize_q(val, 1) == parse("t^6 + 6*t^5 + 21*t^4 + 50*t^3 + 90*t^2 + 120*t + 90"),
            "value 378": specialize(val, 1, 1) == 378,
        }
        return all(checks.values()), ", ".join(k for k, v in checks.items() if not v)

    ok, in_time, _, detail = criterion.run(4, "<e_{3,6}.(-1), e_1^6>", compute, 300.0)
    assert ok, detail
    assert in_time


def test_criterion_05_e36_alternants(criterion):
    def compute():
        data = goldens.load("e36_pairings")
        val = hall(_e36(), s((1,) * 6))
        checks = {
            "polynomial": val == parse(data["alternants"]),
            "value 12": specialize(val, 1, 1) == 12,
            "path sum": val == path_sum(1, 2, 3),
            "12 paths": len(enum_paths(1, 2, 3)) == 12,
        }
        return all(checks.values()), ", ".join(k for k, v in checks.items() if not v)

    ok, in_time, _, detail = criterion.run(5, "<e_{3,6}.(-1), s_{1^6}>", compute, 300.0)
    assert ok, detail
    assert in_time


def test_criterion_06_identity_suite(criterion):
    ok, in_time, _, detail = criterion.run(
        6, "identity suite", lambda: _tally(run_suite("identities").cases), 15 * 60.0)
    assert ok, detail
    assert in_time


def test_criterion_07_macdonald_suite(criterion):
    ok, in_time, _, detail = criterion.run(
        7, "Macdonald construction", lambda: _tally(run_suite("macdonald").cases), 300.0)
    assert ok, detail
    assert in_time


def test_criterion_08_catalan(criterion):
    def compute():
        bad = []
        for m, n in CATALAN_PAIRS:
            ct = negut_ct(m, n)
            if not (ct == catalan_tableaux(m, n) == catalan_pairing(m, n)):
                bad.append(f"({m},{n}) methods disagree")
            if specialize(ct, 1, 1) != catalan_count(m, n):
                bad.append(f"({m},{n}) count")
        return not bad, "; ".join(bad) or f"{len(CATALAN_PAIRS)} pairs"

    ok, in_time, _, detail = criterion.run(8, "Catalan three-way agreement", compute, 300.0)
    assert ok, detail
    assert in_time


def test_criterion_09_conjecture_suites(criterion):
    def compute():
        cases = run_suite("conjectures").cases
        ok, detail = _tally(cases)
        statuses = {c.status for c in cases}
        if statuses != {CONJECTURE}:
            return False, f"unexpected statuses {sorted(statuses)}"
        findings = [c.case_id for c in cases if c.result != PASS]
        if findings:
            detail += f"; findings: {', '.join(findings)}"
        return ok, detail

    ok, in_time, _, detail = criterion.run(9, "conjecture suites, all pass", compute, 30 * 60.0)
    assert ok, detail
    assert in_time


def test_criterion_10_property_suites(criterion):
    ok, in_time, _, detail = criterion.run(
        10, "property suites standalone", lambda: _tally(run_suite("properties").cases), 600.0)
    assert ok, detail
    assert in_time
