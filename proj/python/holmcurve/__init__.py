"""Exact arithmetic on Holm curves k(y^3 - y) = l(x^3 - x).

Coordinates are ``fractions.Fraction`` and INFINITY is ``None``. Everything is
computed by the C++ core in ``holmcurve._core``; values cross as decimal strings
so nothing is rounded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import _core
from ._core import (
    CapacityError,
    ConsistencyError,
    ContradictionError,
    TorsionDenominatorError,
    ValidationError,
)

__all__ = [
    "Curve",
    "HolmCurve",
    "Point",
    "vp",
    "violation",
    "run_cli",
    "CapacityError",
    "ConsistencyError",
    "ContradictionError",
    "TorsionDenominatorError",
    "ValidationError",
]

Point = Optional[Tuple[Fraction, Fraction]]


def _s(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _to_core(p: Point):
    return None if p is None else (_s(p[0]), _s(p[1]))


def _from_core(p) -> Point:
    return None if p is None else (Fraction(p[0]), Fraction(p[1]))


def vp(x, p: int) -> Optional[int]:
    """p-adic valuation of a nonzero rational; None for x = 0."""
    return _core.vp(_s(x), str(p))


def violation(k: int, l: int) -> Optional[str]:
    """Why (k, l) is not a valid parameter pair, or None."""
    return _core.violation(str(k), str(l))


def run_cli(*args: str) -> Tuple[int, str, str]:
    """Run the command-line front end in-process: (exit code, stdout, stderr)."""
    return tuple(_core.run_cli([str(a) for a in args]))


@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + a x + b over the rationals."""

    a: int
    b: int

    def _ab(self):
        return str(self.a), str(self.b)

    @property
    def discriminant(self) -> int:
        return int(_core.discriminant(*self._ab()))

    def contains(self, p: Point) -> bool:
        return _core.on_curve(*self._ab(), _to_core(p))

    def add(self, p: Point, q: Point) -> Point:
        return _from_core(_core.add(*self._ab(), _to_core(p), _to_core(q)))

    def negate(self, p: Point) -> Point:
        return _from_core(_core.negate(*self._ab(), _to_core(p)))

    def mul(self, n: int, p: Point) -> Point:
        return _from_core(_core.scalar_mul(*self._ab(), n, _to_core(p)))

    def mul_via_divpolys(self, n: int, p: Point) -> Point:
        return _from_core(_core.mul_via_divpolys(*self._ab(), n, _to_core(p)))

    def order_upto(self, p: Point, max_order: int = 12) -> Optional[int]:
        return _core.order_upto(*self._ab(), _to_core(p), max_order)

    def division_polynomials(self, n: int) -> dict:
        """psi_n = psi_f + y psi_g, phi_n and omega_n = omega_f + y omega_g as
        integer coefficient lists, constant term first."""
        raw = _core.division_polynomials(*self._ab(), n)
        return {key: [int(c) for c in coeffs] for key, coeffs in raw.items()}

    def integral_points(self, bound: Optional[int] = None) -> list:
        return [_from_core(p) for p in _core.integral_points(*self._ab(), None if bound is None else str(bound))]


class HolmCurve(Curve):
    """The Weierstrass model of k(y^3 - y) = l(x^3 - x), with the map between them."""

    def __init__(self, k: int, l: int):
        a, b = _core.curve_coefficients(str(k), str(l))
        super().__init__(int(a), int(b))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)

    def __repr__(self) -> str:
        return f"HolmCurve(k={self.k}, l={self.l})"

    def _kl(self):
        return str(self.k), str(self.l)

    def gamma(self, h: Tuple[Fraction, Fraction]) -> Point:
        """Holm-curve point to Weierstrass point."""
        return _from_core(_core.gamma(*self._kl(), _s(h[0]), _s(h[1])))

    def gamma_inv(self, p: Point) -> Tuple[Fraction, Fraction]:
        """Weierstrass point to Holm-curve point; INFINITY goes to (0, 0)."""
        return _from_core(_core.gamma_inv(*self._kl(), _to_core(p)))

    def lemma_report(self, p: Point) -> dict:
        return json.loads(_core.lemma_report(*self._kl(), _to_core(p)))

    def certify(self, max_order: int = 12, workers: int = 1) -> dict:
        return json.loads(_core.certify(*self._kl(), max_order, workers))
