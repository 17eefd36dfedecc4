"""Loading the frozen reference values shipped with the package."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from ..coeffs import QTRatio, parse
from ..operators import OpExpr
from ..symfunc.sym import SymF

NAMES = ("e36_schur", "e36_pairings", "q35_word", "splits", "e3_algF")


class GoldenError(ValueError):
    """A golden file is missing or malformed."""


def load(name: str, directory: str | Path | None = None) -> dict:
    """Read ``<name>.json`` from ``directory``, or from the packaged set when None."""
    filename = f"{name}.json"
    try:
        if directory is None:
            text = resources.files("qtshuffle.harness").joinpath("golden").joinpath(filename).read_text()
        else:
            text = (Path(directory) / filename).read_text()
    except FileNotFoundError as exc:
        raise GoldenError(f"golden file {filename} not found") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GoldenError(f"golden file {filename} is not valid JSON: {exc}") from exc


def symf(data: dict) -> SymF:
    """A golden symmetric function stored as basis + index/coeff terms."""
    terms = {tuple(item["index"]): parse(item["coeff"]) for item in data["terms"]}
    return SymF.from_basis(data["basis"], terms)


def word_expansion(data: dict) -> OpExpr:
    return OpExpr({tuple(item["letters"]): parse(item["coeff"]) for item in data["words"]})


def coefficients(data: dict) -> dict[tuple[int, ...], QTRatio]:
    return {tuple(item["index"]): parse(item["coeff"]) for item in data["terms"]}
