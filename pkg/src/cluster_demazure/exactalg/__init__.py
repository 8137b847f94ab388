"""Exact sparse Laurent-polynomial arithmetic over the integers."""

from ._backend import NAME as BACKEND
from .laurent import (
    LaurentMono,
    LaurentPoly,
    NotDivisible,
    ParseError,
    UnmappedVariable,
    Var,
    ZeroSubstitution,
    add,
    divide_exact,
    eval_rational,
    mul,
    substitute,
    torus,
    y,
)

__all__ = [
    "BACKEND",
    "LaurentMono",
    "LaurentPoly",
    "NotDivisible",
    "ParseError",
    "UnmappedVariable",
    "Var",
    "ZeroSubstitution",
    "add",
    "divide_exact",
    "eval_rational",
    "mul",
    "substitute",
    "torus",
    "y",
]
