"""Truncated rational cohomology ring of a Picard-rank-1 threefold.

Classes are written in the basis ``{1, H, l, p}`` where ``H`` is the ample
generator, ``l`` the class of a line and ``p`` the class of a point.  The only
variety-dependent relation is ``H*H = nu*l``; the rest is universal::

    H*l = p,   H*p = l*l = l*p = 0,   integral(p) = 1

so that ``integral(H**3) = nu``.  A curve of degree ``d`` has class ``d*l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction]

_BASIS = ("", "H", "l", "p")


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


@dataclass(frozen=True)
class CohClass:
    """An element ``a0 + a1*H + a2*l + a3*p`` with exact rational coefficients."""

    a0: Fraction = Fraction(0)
    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            object.__setattr__(self, name, _q(getattr(self, name)))

    @classmethod
    def from_coefficients(cls, coeffs) -> "CohClass":
        coeffs = list(coeffs)
        if len(coeffs) > 4:
            raise ValueError("at most four coefficients (degrees 0..3)")
        coeffs += [0] * (4 - len(coeffs))
        return cls(*coeffs)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a0, self.a1, self.a2, self.a3)

    def part(self, degree: int) -> "CohClass":
        """The pure degree-``degree`` component."""
        coeffs = [0, 0, 0, 0]
        coeffs[degree] = self.coefficients[degree]
        return CohClass(*coeffs)

    def is_pure(self, degree: int) -> bool:
        return all(c == 0 for i, c in enumerate(self.coefficients) if i != degree)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __add__(self, other: "CohClass") -> "CohClass":
        if not isinstance(other, CohClass):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: "CohClass") -> "CohClass":
        if not isinstance(other, CohClass):
            return NotImplemented
        return add(self, -other)

    def __neg__(self) -> "CohClass":
        return CohClass(*(-c for c in self.coefficients))

    def __mul__(self, scalar) -> "CohClass":
        # scalar multiplication only; ring products need nu, see mul()
        if isinstance(scalar, CohClass):
            raise TypeError("use ring.mul(a, b, nu) for products of classes")
        s = _q(scalar)
        return CohClass(*(s * c for c in self.coefficients))

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = []
        for c, sym in zip(self.coefficients, _BASIS):
            if c == 0:
                continue
            if not sym:
                terms.append(str(c))
            elif c == 1:
                terms.append(sym)
            elif c == -1:
                terms.append("-" + sym)
            else:
                terms.append(f"{c}{sym}" if c.denominator == 1 else f"({c}){sym}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


ZERO = CohClass()
ONE = CohClass(1)
H = CohClass(0, 1)
L = CohClass(0, 0, 1)
P = CohClass(0, 0, 0, 1)


def add(a: CohClass, b: CohClass) -> CohClass:
    return CohClass(*(x + y for x, y in zip(a.coefficients, b.coefficients)))


def mul(a: CohClass, b: CohClass, nu: int) -> CohClass:
    """Graded product truncated above degree 3, with ``H*H = nu*l``."""
    if nu < 1:
        raise ValueError(f"nu must be a positive integer, got {nu}")
    a0, a1, a2, a3 = a.coefficients
    b0, b1, b2, b3 = b.coefficients
    return CohClass(
        a0 * b0,
        a0 * b1 + a1 * b0,
        a0 * b2 + a2 * b0 + nu * a1 * b1,
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    )


def power(a: CohClass, n: int, nu: int) -> CohClass:
    if n < 0:
        raise ValueError("negative powers are not defined; use inverse()")
    result = ONE
    for _ in range(n):
        result = mul(result, a, nu)
    return result


def inverse(a: CohClass, nu: int) -> CohClass:
    """Multiplicative inverse of a class with nonzero degree-0 part."""
    if a.a0 == 0:
        raise ZeroDivisionError("class with vanishing degree-0 part is not invertible")
    # a = a0 (1 + x) with x nilpotent, x^4 = 0
    x = a * (1 / a.a0) - ONE
    series = ONE - x + power(x, 2, nu) - power(x, 3, nu)
    return series * (1 / a.a0)


def integrate(a: CohClass) -> Fraction:
    return a.a3


def exp_class(a: CohClass, nu: int) -> CohClass:
    """``exp`` of a class with vanishing degree-0 part."""
    if a.a0 != 0:
        raise ValueError("exp_class needs a nilpotent argument")
    a2 = mul(a, a, nu)
    return ONE + a + a2 * Fraction(1, 2) + mul(a2, a, nu) * Fraction(1, 6)
