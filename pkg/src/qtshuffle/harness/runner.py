"""Suite registry and the run_suite entry point."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .cache import JsonCache
from .cases import Check, VerificationCase, exit_code, run_checks
from .config import Config
from .report import write_report
from .suites import catalan, conjectures, identities, macdonald_basis, paper_tables, properties
from .suites.common import Context, Selection

SUITES = {
    "identities": identities,
    "paper-tables": paper_tables,
    "macdonald": macdonald_basis,
    "catalan": catalan,
    "conjectures": conjectures,
    "properties": properties,
}


class UnknownSuiteError(KeyError):
    pass


@dataclass
class SuiteRun:
    suite: str
    cases: list[VerificationCase]
    paths: list[Path] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return exit_code(self.cases)


def make_context(config: Config, golden_dir=None, selection: Selection = Selection()) -> Context:
    cache = JsonCache(config.cache_dir) if config.cache_dir else None
    return Context(config.limits(), cache, golden_dir, selection)


def _check_caps(check: Check, config: Config) -> None:
    p = check.params
    if "n" in p and "k" in p:
        config.check_case(p["k"] * p["n"])


def build_checks(name: str, ctx: Context, config: Config) -> list[Check]:
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    checks = [c for c in SUITES[name].build(ctx) if ctx.selection.admits(c.params)]
    for c in checks:
        _check_caps(c, config)
    return checks


def run_suite(name: str, config: Config = Config(), out_dir=None, golden_dir=None,
              selection: Selection = Selection(),
              progress: Callable[[VerificationCase], None] | None = None) -> SuiteRun:
    """Build, run and (when out_dir is given) report one suite."""
    ctx = make_context(config, golden_dir, selection)
    checks = build_checks(name, ctx, config)
    cases = run_checks(checks, config.jobs, progress)
    run = SuiteRun(name, cases)
    if out_dir is not None:
        run.paths = write_report(out_dir, name, cases, config.to_dict(), config.formats, config.record_timing)
    return run


def combined_exit_code(runs) -> int:
    codes = [r.exit_code for r in runs]
    if 1 in codes:
        return 1
    return 2 if 2 in codes else 0
