"""Chern class calculus for sheaves of rank at most 3.

A :class:`SheafClass` is a rank together with a total Chern class
``1 + c1 + c2 + c3``.  The formulas are applied formally, so they are used for
reflexive and ideal sheaves exactly as for vector bundles.

Functions needing the ring relation ``H*H = nu*l`` take ``nu`` explicitly;
those needing the Todd class take any object with ``nu`` and ``tangent``
attributes (a :class:`~foliatlas.varieties.ThreefoldModel`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralError, RankError
from .ring import H, ONE, CohClass, exp_class, integrate, inverse, mul, power

MAX_RANK = 3


def gbinom(n: int, k: int) -> Fraction:
    """Binomial coefficient valid for negative ``n`` (``k >= 0``)."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    for j in range(k):
        num *= n - j
    for j in range(2, k + 1):
        num /= j
    return num


@dataclass(frozen=True)
class SheafClass:
    rank: int
    total: CohClass = ONE

    def __post_init__(self):
        if not 0 <= self.rank <= MAX_RANK:
            raise RankError(f"rank must lie in 0..{MAX_RANK}, got {self.rank}")
        if self.total.a0 != 1:
            raise ValueError("total Chern class must have degree-0 part 1")

    @classmethod
    def from_coefficients(cls, rank: int, c1=0, c2=0, c3=0) -> "SheafClass":
        """Build from the coefficients of ``H``, ``l`` and ``p``."""
        return cls(rank, CohClass(1, c1, c2, c3))

    @property
    def c1(self) -> CohClass:
        return self.total.part(1)

    @property
    def c2(self) -> CohClass:
        return self.total.part(2)

    @property
    def c3(self) -> CohClass:
        return self.total.part(3)

    @property
    def chern_numbers(self) -> tuple[Fraction, Fraction, Fraction]:
        """Coefficients of ``c1`` on ``H``, ``c2`` on ``l``, ``c3`` on ``p``."""
        return (self.total.a1, self.total.a2, self.total.a3)

    def __str__(self) -> str:
        return f"rank {self.rank}, c = {self.total}"


def trivial(rank: int = 1) -> SheafClass:
    return SheafClass(rank)


def line_bundle(t: int) -> SheafClass:
    """``O_X(t)``."""
    return SheafClass(1, CohClass(1, t))


def whitney_product(a: SheafClass, b: SheafClass, nu: int) -> SheafClass:
    """Chern data of the middle term of ``0 -> a -> ? -> b -> 0``."""
    rank = a.rank + b.rank
    if rank > MAX_RANK:
        raise RankError(f"rank overflow: {a.rank} + {b.rank} > {MAX_RANK}")
    return SheafClass(rank, mul(a.total, b.total, nu))


def whitney_quotient(total: SheafClass, sub: SheafClass, nu: int) -> SheafClass:
    """The ``q`` with ``whitney_product(sub, q) == total``."""
    rank = total.rank - sub.rank
    if rank < 0:
        raise RankError(f"cannot remove rank {sub.rank} from rank {total.rank}")
    return SheafClass(rank, mul(total.total, inverse(sub.total, nu), nu))


def twist(F: SheafClass, t, nu: int) -> SheafClass:
    """Chern data of ``F(t) = F (x) O(t)``.

    ``c_k(F(t)) = sum_i binom(rank - i, k - i) c_i(F) (tH)^(k-i)``; the
    generalized binomial keeps this valid for rank 0 and 1 classes.
    """
    if t == 0:
        return F
    tH = H * t
    tH_pow = [power(tH, j, nu) for j in range(4)]
    c = [F.total.part(i) for i in range(4)]
    new = ONE
    for k in range(1, 4):
        ck = CohClass()
        for i in range(k + 1):
            coeff = gbinom(F.rank - i, k - i)
            if coeff:
                ck = ck + mul(c[i], tH_pow[k - i], nu) * coeff
        new = new + ck
    return SheafClass(F.rank, new)


def dual(F: SheafClass) -> SheafClass:
    """Locally free sign rule ``c_i -> (-1)^i c_i``."""
    a0, a1, a2, a3 = F.total.coefficients
    return SheafClass(F.rank, CohClass(a0, -a1, a2, -a3))


def reflexive_dual(F: SheafClass, nu: int) -> SheafClass:
    """Dual of a rank 2 reflexive sheaf, ``F^v = F(-c1)``; keeps ``c3``."""
    if F.rank != 2:
        raise RankError("reflexive_dual is defined for rank 2 only")
    a1 = F.total.a1
    if a1.denominator != 1:
        raise ValueError("c1 must be an integral multiple of H")
    return twist(F, -int(a1), nu)


def chern_character(F: SheafClass, nu: int) -> CohClass:
    c1, c2, c3 = F.c1, F.c2, F.c3
    c1sq = mul(c1, c1, nu)
    ch2 = (c1sq - c2 * 2) * Fraction(1, 2)
    ch3 = (mul(c1sq, c1, nu) - mul(c1, c2, nu) * 3 + c3 * 3) * Fraction(1, 6)
    return CohClass(F.rank) + c1 + ch2 + ch3


def ch_dual(ch: CohClass) -> CohClass:
    """Chern character of the (derived) dual: ``ch_i -> (-1)^i ch_i``."""
    a0, a1, a2, a3 = ch.coefficients
    return CohClass(a0, -a1, a2, -a3)


def ch_line(t, nu: int) -> CohClass:
    """``ch(O(t)) = exp(tH)``."""
    return exp_class(H * t, nu)


def todd_class(tangent: SheafClass, nu: int) -> CohClass:
    if tangent.rank != 3:
        raise RankError("the tangent class of a threefold has rank 3")
    c1, c2 = tangent.c1, tangent.c2
    return (
        ONE
        + c1 * Fraction(1, 2)
        + (mul(c1, c1, nu) + c2) * Fraction(1, 12)
        + mul(c1, c2, nu) * Fraction(1, 24)
    )


def hrr(ch: CohClass, X) -> Fraction:
    """``integral(ch * td(X))`` without the integrality check."""
    return integrate(mul(ch, todd_class(X.tangent, X.nu), X.nu))


def euler_characteristic_of_ch(ch: CohClass, X) -> int:
    value = hrr(ch, X)
    if value.denominator != 1:
        raise NonIntegralError(f"Euler characteristic {value} is not an integer")
    return int(value)


def euler_characteristic(F: SheafClass, X) -> int:
    """Hirzebruch-Riemann-Roch; fractional results raise NonIntegralError."""
    return euler_characteristic_of_ch(chern_character(F, X.nu), X)


def tensor_euler_characteristic(a: SheafClass, b: SheafClass, X) -> int:
    """``chi(a (x) b)`` for any ranks, through the Chern characters."""
    ch = mul(chern_character(a, X.nu), chern_character(b, X.nu), X.nu)
    return euler_characteristic_of_ch(ch, X)


def ext_euler_characteristic(a: SheafClass, b: SheafClass, X) -> int:
    """``sum (-1)^i dim Ext^i(a, b) = integral(ch(a)^* ch(b) td(X))``."""
    ch = mul(ch_dual(chern_character(a, X.nu)), chern_character(b, X.nu), X.nu)
    return euler_characteristic_of_ch(ch, X)
