"""Deterministic JSON and CSV reports for a suite run."""
from __future__ import annotations

import csv
import io
import json
import platform
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

import flint

from .. import __version__
from .cases import VerificationCase, exit_code, totals

REPORT_VERSION = 1
TIMING_FIELDS = ("generated_at", "runtime", "total_runtime")
CSV_COLUMNS = ("case_id", "kind", "status", "result", "params", "lhs", "rhs", "detail", "runtime")


def environment() -> dict:
    return {
        "package": "qtshuffle",
        "version": __version__,
        "python": platform.python_version(),
        "python_flint": flint.__version__,
    }


def build_report(suite: str, cases: Sequence[VerificationCase], config: dict, timing: bool = True) -> dict:
    report = {
        "report_version": REPORT_VERSION,
        "suite": suite,
        "config": config,
        "environment": environment(),
        "totals": totals(cases),
        "exit_code": exit_code(cases),
        "cases": [c.to_json(timing) for c in cases],
    }
    if timing:
        report["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
        report["total_runtime"] = round(sum(c.runtime or 0.0 for c in cases), 3)
    return report


def strip_timing(obj):
    """Drop the timestamp and runtime fields, recursively."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k not in TIMING_FIELDS}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def dumps_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _detail(case: VerificationCase) -> str:
    p = case.payload
    for key in ("first_difference", "error", "reason", "note"):
        if key in p:
            return str(p[key])
    return ""


def dumps_csv(cases: Sequence[VerificationCase], timing: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=";", lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for c in cases:
        params = json.dumps(c.params, sort_keys=True, separators=(",", ":"))
        runtime = f"{c.runtime:.3f}" if timing and c.runtime is not None else ""
        writer.writerow((c.case_id, c.kind, c.status, c.result, params, c.lhs, c.rhs, _detail(c), runtime))
    return buf.getvalue()


def write_report(out_dir: str | Path, suite: str, cases: Sequence[VerificationCase], config: dict,
                 formats: Sequence[str] = ("json", "csv"), timing: bool = True) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if "json" in formats:
        path = out / f"{suite}.json"
        path.write_text(dumps_json(build_report(suite, cases, config, timing)))
        written.append(path)
    if "csv" in formats:
        path = out / f"{suite}.csv"
        path.write_text(dumps_csv(cases, timing))
        written.append(path)
    return written
