"""Exact Groebner bases, star conditions and GNS representations for
finitely presented *-algebras."""

from ._core import (
    NonExpandingViolation,
    ParseError,
    PreconditionError,
    System,
    conditions,
    hankel_demo,
    hankel_moment,
    hankel_norms,
    load,
    preset_names,
    preset_text,
    run,
)

__all__ = [
    "NonExpandingViolation",
    "ParseError",
    "PreconditionError",
    "System",
    "conditions",
    "hankel_demo",
    "hankel_moment",
    "hankel_norms",
    "load",
    "preset_names",
    "preset_text",
    "run",
]
