"""Exact hyperreal, Dedekind-cut and Hermite-integer computations.

Every function returns plain Python data decoded from the JSON the C++ core
emits. Rationals stay exact and are given as "p/q" strings; use
:func:`fraction` to turn one into :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Union

from . import _core
from ._core import NsrealError

__all__ = [
    "NsrealError",
    "certificate",
    "dirichlet",
    "extsum",
    "fraction",
    "goldbach",
    "hermite_m",
    "liouville",
    "run",
    "sieve",
    "verify_certificate",
    "wat",
]

RationalLike = Union[int, str, Fraction]


def fraction(text: str) -> Fraction:
    return Fraction(text)


def _rational_text(q: RationalLike) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def goldbach(limit: int) -> dict:
    return json.loads(_core.goldbach(limit))


def sieve(depth: int, steps: int) -> dict:
    return json.loads(_core.sieve(depth, steps))


def extsum(series: str, depth: int = 4096, tolerance: RationalLike = Fraction(1, 10**6)) -> dict:
    return json.loads(_core.extsum(series, depth, _rational_text(tolerance)))


def hermite_m(n: int, p: int, k: int) -> int:
    return int(json.loads(_core.hermite_m(n, p, k))["M"])


def certificate(coeffs: Iterable[RationalLike]) -> dict:
    return json.loads(_core.certificate([_rational_text(c) for c in coeffs]))


def verify_certificate(cert: dict) -> dict:
    """Recomputes the certificate checks from the certificate's own fields."""
    return json.loads(_core.verify_certificate(json.dumps(cert)))


def dirichlet(alpha: Union[str, RationalLike], count: int) -> dict:
    if not isinstance(alpha, str) or alpha not in ("pi", "e"):
        alpha = _rational_text(alpha)
    return json.loads(_core.dirichlet(alpha, count))


def liouville(m: int, n: int) -> dict:
    return json.loads(_core.liouville(m, n))


def wat(expr: str) -> dict:
    return json.loads(_core.wat(expr))


def run(*args: str) -> tuple[int, str, str]:
    return _core.run(list(args))
