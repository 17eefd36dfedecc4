"""Exact operator calculus and parking-function combinatorics for the shuffle conjectures."""

__version__ = "0.1.0"
