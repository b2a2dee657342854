"""Polynomial gcd and half-gcd over NTT-friendly prime fields."""

from ._core import (
    DEFAULT_PRIME,
    Error,
    ParseError,
    PreconditionViolated,
    Undefined,
    UnsupportedField,
    UnsupportedLength,
    bench,
    gcd,
    hgcd,
    selftest,
    xgcd,
)

__all__ = [
    "DEFAULT_PRIME",
    "Error",
    "ParseError",
    "PreconditionViolated",
    "Undefined",
    "UnsupportedField",
    "UnsupportedLength",
    "bench",
    "gcd",
    "hgcd",
    "selftest",
    "xgcd",
]
