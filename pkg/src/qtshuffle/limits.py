"""Size limits shared by the kernels.  Passed explicitly; there is no global state."""
from __future__ import annotations

from dataclasses import dataclass, replace


class LimitError(ValueError):
    """A request exceeds one of the configured size limits."""


@dataclass(frozen=True)
class Limits:
    degree_cap: int = 8
    mn_cap: int = 14
    kn_cap: int = 8
    lattice_cap: int = 8

    def check_degree(self, d: int, what: str = "result") -> None:
        if d > self.degree_cap:
            raise LimitError(f"{what} has degree {d}, above the degree cap {self.degree_cap}")

    def check_mn(self, m: int, n: int) -> None:
        if m + n > self.mn_cap:
            raise LimitError(f"m+n = {m + n} exceeds the cap {self.mn_cap}")

    def check_kn(self, kn: int) -> None:
        if kn > self.kn_cap:
            raise LimitError(f"kn = {kn} exceeds the cap {self.kn_cap}")

    def check_lattice(self, u: int, v: int) -> None:
        if max(u, v) > self.lattice_cap:
            raise LimitError(f"lattice {u}x{v} exceeds the cap {self.lattice_cap}")

    def with_(self, **changes) -> "Limits":
        return replace(self, **changes)


DEFAULT_LIMITS = Limits()
