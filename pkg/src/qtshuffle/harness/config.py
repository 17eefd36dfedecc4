"""Run configuration, read from a versioned ``key = value`` text file."""
from __future__ import annotations

from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from ..limits import Limits

CONFIG_VERSION = 1
FORMATS = ("json", "csv")
TRUNCATION_POLICIES = ("double-until-stable",)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Config:
    version: int = CONFIG_VERSION
    degree_cap: int = 8
    mn_cap: int = 14
    kn_cap: int = 8
    lattice_cap: int = 8
    truncation: str = "double-until-stable"
    cache_dir: str = ""
    jobs: int = 1
    formats: tuple[str, ...] = FORMATS
    record_timing: bool = True

    def __post_init__(self):
        if self.version != CONFIG_VERSION:
            raise ConfigError(f"unsupported config version {self.version} (expected {CONFIG_VERSION})")
        if self.kn_cap > self.degree_cap:
            raise ConfigError(f"kn_cap {self.kn_cap} exceeds degree_cap {self.degree_cap}")
        if min(self.degree_cap, self.mn_cap, self.kn_cap, self.lattice_cap, self.jobs) < 1:
            raise ConfigError("caps and jobs must be positive")
        if self.truncation not in TRUNCATION_POLICIES:
            raise ConfigError(f"unknown truncation policy {self.truncation!r}")
        bad = set(self.formats) - set(FORMATS)
        if bad:
            raise ConfigError(f"unknown output formats {sorted(bad)}")

    def limits(self) -> Limits:
        return Limits(self.degree_cap, self.mn_cap, self.kn_cap, self.lattice_cap)

    def check_case(self, kn: int) -> None:
        """A case producing degree kn must fit under the degree cap."""
        if kn > self.degree_cap:
            raise ConfigError(f"case of degree {kn} exceeds degree_cap {self.degree_cap}")

    def with_(self, **changes) -> "Config":
        return replace(self, **changes)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["formats"] = list(self.formats)
        return d

    def dumps(self) -> str:
        lines = []
        for k, v in self.to_dict().items():
            if isinstance(v, list):
                v = ",".join(v)
            elif isinstance(v, bool):
                v = "true" if v else "false"
            lines.append(f"{k} = {v}")
        return "\n".join(lines) + "\n"


def _convert(name: str, kind, text: str):
    if kind is bool or kind == "bool":
        low = text.lower()
        if low not in ("true", "false", "1", "0", "yes", "no"):
            raise ConfigError(f"{name}: expected a boolean, got {text!r}")
        return low in ("true", "1", "yes")
    if kind is int or kind == "int":
        try:
            return int(text)
        except ValueError:
            raise ConfigError(f"{name}: expected an integer, got {text!r}") from None
    if name == "formats":
        return tuple(x.strip() for x in text.split(",") if x.strip())
    return text


def parse_config(text: str) -> Config:
    types = {f.name: f.type for f in fields(Config)}
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (x.strip() for x in line.split("=", 1))
        if key not in types:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = _convert(key, types[key], value)
    if "version" not in values:
        raise ConfigError("config file must declare 'version'")
    return Config(**values)


def load_config(path: str | Path | None) -> Config:
    if path is None:
        return Config()
    return parse_config(Path(path).read_text())
