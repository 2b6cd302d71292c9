"""Exact divisor class group arithmetic on odd-degree hyperelliptic curves."""

from ._hyperjac import (
    Curve,
    Divisor,
    Error,
    __version__,
    add,
    cantor_add,
    double,
    selftest_report,
    smul,
)

__all__ = [
    "Curve",
    "Divisor",
    "Error",
    "__version__",
    "add",
    "cantor_add",
    "double",
    "selftest_report",
    "smul",
]
