"""Exact arithmetic in Q(sqrt2, sqrt3) with a decidable total order.

Elements are a + b*sqrt2 + c*sqrt3 + d*sqrt6 over Fractions.  Ordering is
by exact sign determination: rational interval enclosures of the radicals
are refined until the enclosure of the element excludes zero (guaranteed
to terminate because a nonzero field element is a nonzero real).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Rat = Union[int, Fraction]


def _sqrt_bounds(n: int, digits: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(n) <= hi with hi - lo = 10^-digits."""
    scale = 10 ** digits
    lo = Fraction(isqrt(n * scale * scale), scale)
    return lo, lo + Fraction(1, scale)


@dataclass(frozen=True)
class AlgNum:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    @staticmethod
    def of(a: Rat = 0, b: Rat = 0, c: Rat = 0, d: Rat = 0) -> "AlgNum":
        return AlgNum(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    @staticmethod
    def rational(x: Rat) -> "AlgNum":
        return AlgNum.of(x)

    # -- ring operations ----------------------------------------------------

    def __add__(self, o: "AlgNum") -> "AlgNum":
        o = _coerce(o)
        return AlgNum(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self) -> "AlgNum":
        return AlgNum(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, o: "AlgNum") -> "AlgNum":
        return self + (-_coerce(o))

    def __rsub__(self, o) -> "AlgNum":
        return _coerce(o) - self

    def __mul__(self, o: "AlgNum") -> "AlgNum":
        o = _coerce(o)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return AlgNum(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def inverse(self) -> "AlgNum":
        if self.is_zero():
            raise ZeroDivisionError("AlgNum inverse of zero")
        # solve self * y = 1 as a 4x4 Fraction system
        cols = [self * e for e in _BASIS]
        m = [[cols[j][i] for j in range(4)] + [Fraction(i == 0)]
             for i in range(4)]
        for p in range(4):
            piv = next(r for r in range(p, 4) if m[r][p] != 0)
            m[p], m[piv] = m[piv], m[p]
            inv = Fraction(1) / m[p][p]
            m[p] = [x * inv for x in m[p]]
            for r in range(4):
                if r != p and m[r][p]:
                    f = m[r][p]
                    m[r] = [x - f * y for x, y in zip(m[r], m[p])]
        return AlgNum(m[0][4], m[1][4], m[2][4], m[3][4])

    def __truediv__(self, o) -> "AlgNum":
        return self * _coerce(o).inverse()

    def __rtruediv__(self, o) -> "AlgNum":
        return _coerce(o) * self.inverse()

    def __getitem__(self, i: int) -> Fraction:
        return (self.a, self.b, self.c, self.d)[i]

    # -- order ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.a > 0 else -1
        digits = 4
        while True:
            lo, hi = self.bounds(digits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            digits *= 2

    def bounds(self, digits: int) -> tuple[Fraction, Fraction]:
        lo = hi = self.a
        for coef, n in ((self.b, 2), (self.c, 3), (self.d, 6)):
            if not coef:
                continue
            rlo, rhi = _sqrt_bounds(n, digits)
            if coef > 0:
                lo += coef * rlo
                hi += coef * rhi
            else:
                lo += coef * rhi
                hi += coef * rlo
        return lo, hi

    def __lt__(self, o) -> bool:
        return (self - _coerce(o)).sign() < 0

    def __le__(self, o) -> bool:
        return (self - _coerce(o)).sign() <= 0

    def __gt__(self, o) -> bool:
        return (self - _coerce(o)).sign() > 0

    def __ge__(self, o) -> bool:
        return (self - _coerce(o)).sign() >= 0

    def __float__(self) -> float:
        lo, hi = self.bounds(20)
        return float((lo + hi) / 2)

    # -- rendering -------------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for coef, tag in ((self.a, ""), (self.b, "sqrt(2)"),
                          (self.c, "sqrt(3)"), (self.d, "sqrt(6)")):
            if not coef:
                continue
            sign = "-" if coef < 0 else ("+" if parts else "")
            mag = abs(coef)
            if not tag:
                body = str(mag)
            elif mag == 1:
                body = tag
            else:
                body = f"{mag}*{tag}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts) if parts else "0"

    __repr__ = __str__

    def as_dict(self) -> dict:
        return {"a": _frac_str(self.a), "b": _frac_str(self.b),
                "c": _frac_str(self.c), "d": _frac_str(self.d)}


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _coerce(x) -> AlgNum:
    if isinstance(x, AlgNum):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgNum.rational(x)
    raise TypeError(f"cannot coerce {x!r} to AlgNum")


_BASIS = (AlgNum.of(1), AlgNum.of(0, 1), AlgNum.of(0, 0, 1),
          AlgNum.of(0, 0, 0, 1))

ZERO_A = AlgNum.of(0)
ONE_A = AlgNum.of(1)


class FieldOverflow(Exception):
    """A square root left Q(sqrt2, sqrt3)."""


def sqrt_rational(x: Rat) -> AlgNum:
    """Exact square root of a nonnegative rational, if it stays in the field.

    sqrt(p/q) = sqrt(p q)/q; admissible iff the squarefree part of p*q is
    one of 1, 2, 3, 6.  Raises FieldOverflow otherwise.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return ZERO_A
    n = x.numerator * x.denominator
    square, free = 1, 1
    m, p = n, 2
    while p * p <= m:
        while m % (p * p) == 0:
            square *= p
            m //= p * p
        if m % p == 0:
            free *= p
            m //= p
        p += 1
    free *= m
    coef = Fraction(square, x.denominator)
    if free == 1:
        return AlgNum.of(coef)
    if free == 2:
        return AlgNum.of(0, coef)
    if free == 3:
        return AlgNum.of(0, 0, coef)
    if free == 6:
        return AlgNum.of(0, 0, 0, coef)
    raise FieldOverflow(f"sqrt({x}) is outside Q(sqrt2, sqrt3)")


def sqrt_upper(x: Rat, digits: int = 30) -> Fraction:
    """Certified rational upper bound for sqrt(x), for overflow fallbacks."""
    x = Fraction(x)
    scale = 10 ** digits
    num = isqrt(x.numerator * x.denominator * scale * scale) + 1
    return Fraction(num, x.denominator * scale)
