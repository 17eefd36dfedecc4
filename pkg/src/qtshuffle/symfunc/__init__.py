"""Symmetric and quasisymmetric functions over Q(q,t)."""
from .plethysm import (
    B, C, D, Dstar, ZSeries, creation_op, omega_minus_uM, omega_series, plethysm_linear,
    plethysm_scalar, plethystic_substitute, schur_hook_eval,
)
from .qsym import QSymCoords, qsym_coords
from .sym import SymF, basis_functions, convert_basis, e, h, hall, m, p, s, star

__all__ = [
    "SymF", "ZSeries", "QSymCoords", "p", "e", "h", "s", "m", "hall", "star", "convert_basis",
    "basis_functions", "plethystic_substitute", "omega_series", "creation_op", "D", "Dstar",
    "C", "B", "plethysm_scalar", "plethysm_linear", "schur_hook_eval", "omega_minus_uM",
    "qsym_coords",
]
