"""Verification cases, their comparison, and the suite runner."""
from __future__ import annotations

import multiprocessing
import time
import traceback
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

from ..coeffs import QTRatio, poly_terms, render
from ..operators import OpExpr
from ..symfunc.qsym import QSymCoords
from ..symfunc.sym import SymF

PROVED = "proved-identity"
CONJECTURE = "conjecture"
OBSERVATION = "observation"
STATUSES = (PROVED, CONJECTURE, OBSERVATION)

PASS, FAIL, COUNTEREXAMPLE, ERROR, SKIPPED = "pass", "fail", "counterexample", "error", "skipped"


@dataclass
class Check:
    """A case before it runs: what is compared, and how to compute both sides.

    ``compute`` returns the pair (lhs, rhs).  Values are compared with ``==``
    unless ``compare`` is given, which must return None on agreement or a
    description of the first difference.
    """

    case_id: str
    kind: str
    status: str
    params: dict
    lhs: str
    rhs: str
    compute: Callable[[], tuple[Any, Any]]
    compare: Callable[[Any, Any], str | None] | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class VerificationCase:
    case_id: str
    kind: str
    status: str
    params: dict
    lhs: str
    rhs: str
    result: str
    payload: dict = field(default_factory=dict)
    runtime: float | None = None

    @property
    def gates(self) -> bool:
        return self.status == PROVED

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "case_id": self.case_id,
            "kind": self.kind,
            "status": self.status,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "result": self.result,
            "payload": self.payload,
        }
        if timing and self.runtime is not None:
            out["runtime"] = round(self.runtime, 3)
        return out


# rendering and comparison ----------------------------------------------------------------

def describe(value) -> Any:
    """A JSON-friendly rendering of a computed value."""
    if isinstance(value, QTRatio):
        return render(value)
    if isinstance(value, SymF):
        return value.to_json("s")
    if isinstance(value, (QSymCoords, OpExpr)):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): describe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [describe(v) for v in value]
    if isinstance(value, (int, str, bool, float)) or value is None:
        return value
    return str(value)


def _label(key) -> str:
    return str(list(key)) if isinstance(key, tuple) else str(key)


def first_difference(lhs, rhs) -> str | None:
    """None when equal, else a short description of the first differing coefficient."""
    if isinstance(lhs, SymF) and isinstance(rhs, SymF):
        a, b = lhs.to_basis("s"), rhs.to_basis("s")
        keys = sorted(set(a) | set(b), key=lambda lam: (sum(lam), tuple(-x for x in lam)))
        for lam in keys:
            x, y = a.get(lam, QTRatio(0)), b.get(lam, QTRatio(0))
            if x != y:
                return f"coefficient of s{_label(lam)}: {render(x)} vs {render(y)}"
        return None
    if isinstance(lhs, QSymCoords) and isinstance(rhs, QSymCoords):
        if lhs.degree != rhs.degree:
            return f"degree {lhs.degree} vs {rhs.degree}"
        for key in lhs.differences(rhs):
            return f"coefficient of F{_label(key)}: {render(lhs[key])} vs {render(rhs[key])}"
        return None
    if isinstance(lhs, OpExpr) and isinstance(rhs, OpExpr):
        words = sorted(set(lhs.words) | set(rhs.words), key=lambda w: (len(w), tuple(-k for k in w)))
        for w in words:
            x, y = lhs.words.get(w, QTRatio(0)), rhs.words.get(w, QTRatio(0))
            if x != y:
                return f"coefficient of D{_label(w)}: {render(x)} vs {render(y)}"
        return None
    if isinstance(lhs, dict) and isinstance(rhs, dict):
        for key in sorted(set(lhs) | set(rhs), key=repr):
            if key not in lhs or key not in rhs:
                return f"key {_label(key)} present on one side only"
            diff = first_difference(lhs[key], rhs[key])
            if diff is not None:
                return f"at {_label(key)}: {diff}"
        return None
    if isinstance(lhs, (list, tuple)) and isinstance(rhs, (list, tuple)):
        if len(lhs) != len(rhs):
            return f"length {len(lhs)} vs {len(rhs)}"
        for i, (x, y) in enumerate(zip(lhs, rhs)):
            diff = first_difference(x, y)
            if diff is not None:
                return f"at index {i}: {diff}"
        return None
    if isinstance(lhs, QTRatio) and isinstance(rhs, QTRatio) and lhs.is_polynomial() and rhs.is_polynomial():
        a, b = poly_terms(lhs.num), poly_terms(rhs.num)
        for mono in sorted(set(a) | set(b), reverse=True):
            if a.get(mono, 0) != b.get(mono, 0):
                i, j = mono
                return f"coefficient of q^{i}*t^{j}: {a.get(mono, 0)} vs {b.get(mono, 0)}"
        return None
    if lhs == rhs:
        return None
    return f"{describe(lhs)} vs {describe(rhs)}"


# running ---------------------------------------------------------------------------------

def run_check(check: Check) -> VerificationCase:
    start = time.perf_counter()
    payload: dict = {}
    try:
        lhs, rhs = check.compute()
        diff = (check.compare or first_difference)(lhs, rhs)
        if diff is None:
            result = PASS
            payload["value"] = describe(lhs)
        else:
            result = FAIL if check.status == PROVED else COUNTEREXAMPLE
            payload.update(first_difference=diff, lhs=describe(lhs), rhs=describe(rhs))
    except Exception as exc:  # recorded, never swallowed silently
        result = ERROR
        payload["error"] = f"{type(exc).__name__}: {exc}"
        payload["traceback"] = traceback.format_exc(limit=4).splitlines()[-3:]
    return VerificationCase(
        check.case_id, check.kind, check.status, check.params, check.lhs, check.rhs,
        result, payload, time.perf_counter() - start,
    )


def _skipped(check: Check, reason: str) -> VerificationCase:
    return VerificationCase(
        check.case_id, check.kind, check.status, check.params, check.lhs, check.rhs,
        SKIPPED, {"reason": reason}, 0.0,
    )


def _aborts(case: VerificationCase) -> bool:
    return case.gates and case.result in (FAIL, ERROR)


_POOL_CHECKS: Sequence[Check] = ()


def _pool_run(index: int) -> VerificationCase:
    return run_check(_POOL_CHECKS[index])


def run_checks(checks: Iterable[Check], jobs: int = 1, progress=None) -> list[VerificationCase]:
    """Run checks in order.  A failing proved identity is a bug: the remaining
    cases are marked skipped.  With jobs > 1 the checks run in forked workers
    and are collected in submission order, so reports stay deterministic.
    """
    global _POOL_CHECKS
    checks = list(checks)
    out: list[VerificationCase] = []
    aborted: str | None = None

    def record(case: VerificationCase) -> None:
        nonlocal aborted
        out.append(case)
        if progress is not None:
            progress(case)
        if _aborts(case):
            aborted = case.case_id

    if jobs <= 1 or len(checks) < 2 or "fork" not in multiprocessing.get_all_start_methods():
        for check in checks:
            if aborted:
                out.append(_skipped(check, f"aborted after proved-identity failure in {aborted}"))
                continue
            record(run_check(check))
        return out

    _POOL_CHECKS = checks
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        for case in pool.imap(_pool_run, range(len(checks))):
            if aborted:
                break
            record(case)
        pool.terminate()
    _POOL_CHECKS = ()
    for check in checks[len(out):]:
        out.append(_skipped(check, f"aborted after proved-identity failure in {aborted}"))
    return out


def totals(cases: Sequence[VerificationCase]) -> dict:
    out: dict[str, dict[str, int]] = {}
    for c in cases:
        bucket = out.setdefault(c.status, {})
        bucket[c.result] = bucket.get(c.result, 0) + 1
    return {k: dict(sorted(v.items())) for k, v in sorted(out.items())}


def exit_code(cases: Sequence[VerificationCase]) -> int:
    """0 when every gate passes and no finding was made, 2 for conjecture
    findings only, 1 for a proved-identity failure or any error."""
    if any(c.result == ERROR or (c.gates and c.result != PASS) for c in cases):
        return 1
    if any(c.result == COUNTEREXAMPLE for c in cases):
        return 2
    return 0
