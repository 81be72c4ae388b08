"""Dimensions of moduli components swept out by normal sheaves of generic foliations.

Every quantity is recomputed from binomial cohomology and Riemann-Roch, then
compared with the published closed-form cubics in :data:`PUBLISHED`.

For a generic foliation of degree ``r`` the normal sheaf ``N`` is stable and
simple, so ``Hom(N, N)`` is one-dimensional and ``Ext^3(N, N) = 0``; hence
``ext1 - ext2 = 1 - chi(N, N)``.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .chern import SheafClass, euler_characteristic, ext_euler_characteristic, tensor_euler_characteristic, twist
from .errors import RangeNotCovered
from .foliations import normal_chern, normal_sheaf_cohomology
from .report import exact
from .varieties import (
    P3,
    Q3,
    ThreefoldModel,
    h_cotangent,
    h_line,
    h_restricted_cotangent_p4,
    h_restricted_tangent_p4,
    h_tangent,
)


class Parity(str, enum.Enum):
    ODD = "odd"
    EVEN = "even"

    def __str__(self) -> str:
        return self.value

    def degree(self, k: int) -> int:
        return 2 * k + 1 if self is Parity.ODD else 2 * k


def _parity(parity) -> Parity:
    return parity if isinstance(parity, Parity) else Parity(str(parity).lower())


@dataclass(frozen=True)
class FamilyRecord:
    variety: str
    parity: Parity
    k: int
    chern: SheafClass
    dim_family: int
    ext1: int
    ext2: int
    dim_D: Optional[int] = None
    dim_normal_family: Optional[int] = None
    # printed rows differing from ``chern``: (location, (c1, c2, c3)) in H-units
    printed_chern: tuple = ()

    @property
    def degree(self) -> int:
        return self.parity.degree(self.k)

    @property
    def nu(self) -> int:
        return {"P3": 1, "Q3": 2}[self.variety]

    @property
    def chern_h(self) -> tuple[Fraction, Fraction, Fraction]:
        """``(c1, c2, c3)`` as multiples of ``H``, ``H^2``, ``H^3``."""
        a1, a2, a3 = self.chern.chern_numbers
        return (a1, a2 / self.nu, a3 / self.nu)

    def as_row(self) -> dict:
        c1, c2, c3 = self.chern_h
        return {
            "variety": self.variety,
            "parity": self.parity.value,
            "k": self.k,
            "c1": c1,
            "c2": c2,
            "c3": c3,
            "dim_family": self.dim_family,
            "ext1": self.ext1,
            "ext2": self.ext2,
            "dim_D": self.dim_D,
        }


def normalized_normal_chern(X: ThreefoldModel, parity, k: int) -> SheafClass:
    parity = _parity(parity)
    return twist(normal_chern(X, parity.degree(k)), -2 - k, X.nu)


def _ext1(X: ThreefoldModel, normal: SheafClass, ext2: int) -> int:
    return ext2 + 1 - ext_euler_characteristic(normal, normal, X)


def p3_ext2(parity, k: int) -> int:
    r = _parity(parity).degree(k)
    return 4 * normal_sheaf_cohomology(P3, r, 2, -1) - normal_sheaf_cohomology(P3, r, 2, 0)


def p3_family(k: int, parity) -> FamilyRecord:
    parity = _parity(parity)
    k_min = 1 if parity is Parity.ODD else 0
    if k < k_min:
        raise RangeNotCovered(f"P3 {parity} family needs k >= {k_min}, got {k}")
    twist_ = 2 * k if parity is Parity.ODD else 2 * k - 1
    dim = h_tangent(P3, 0, twist_) - 1
    chern = normalized_normal_chern(P3, parity, k)
    ext2 = p3_ext2(parity, k)
    return FamilyRecord("P3", parity, k, chern, dim, _ext1(P3, chern, ext2), ext2)


def _aut_split(a: int, b: int) -> int:
    """``dim Aut(O(a) + O(b))`` on Q3."""
    if a == b:
        return 4
    return 2 + h_line(Q3, 0, abs(a - b))


def q3_hom_minus_aut(k: int, parity) -> int:
    """Dimension of ``O(-2-r) + O(-2) -> Omega_P4|Q`` presentations up to automorphism."""
    r = _parity(parity).degree(k)
    hom = h_restricted_cotangent_p4(0, 2 + r) + h_restricted_cotangent_p4(0, 2)
    return hom - _aut_split(-2 - r, -2)


def q3_dim_D(k: int, parity) -> int:
    r = _parity(parity).degree(k)
    return h_cotangent(Q3, 0, 2 + r) - 1


def q3_h3_aux(k: int) -> int:
    return h_restricted_tangent_p4(3, -3 - 2 * k)


def q3_ext2(k: int, parity) -> int:
    r = _parity(parity).degree(k)
    return h_restricted_tangent_p4(3, -2 - r) - normal_sheaf_cohomology(Q3, r, 2, 0)


Q3_ODD_K0_COMPONENT = 45


def q3_family(k: int, parity) -> FamilyRecord:
    parity = _parity(parity)
    if k < 0:
        raise RangeNotCovered(f"Q3 families need k >= 0, got {k}")
    chern = normalized_normal_chern(Q3, parity, k)
    ext2 = q3_ext2(k, parity)
    ext1 = _ext1(Q3, chern, ext2)
    family = q3_hom_minus_aut(k, parity)
    dim = family
    if parity is Parity.ODD and k == 0:
        # the normal sheaves fill a divisor of a smooth 45-dimensional component
        dim = Q3_ODD_K0_COMPONENT
    printed_rows = tuple(
        (f.location, f.printed_row(k))
        for f in PRINTED_CHERN_ROWS
        if f.applies(parity, k) and f.printed_row(k) != _h_units(chern, 2)
    )
    return FamilyRecord("Q3", parity, k, chern, dim, ext1, ext2,
                        dim_D=q3_dim_D(k, parity), dim_normal_family=family,
                        printed_chern=printed_rows)


def family(variety: str, k: int, parity) -> FamilyRecord:
    key = variety.upper()
    if key == "P3":
        return p3_family(k, parity)
    if key == "Q3":
        return q3_family(k, parity)
    raise RangeNotCovered(f"moduli tables exist only for P3 and Q3, not {variety}")


def families(variety: str, parity, ks: Iterable[int]) -> list[FamilyRecord]:
    return [family(variety, k, parity) for k in ks]


def _h_units(chern: SheafClass, nu: int) -> tuple[Fraction, Fraction, Fraction]:
    a1, a2, a3 = chern.chern_numbers
    return (a1, a2 / nu, a3 / nu)


def q3_chi_difference(k: int) -> int:
    """``chi(Omega_Q (x) N) - chi(N(1+2k))`` for the normal sheaf of degree ``2k+1``."""
    N = normal_chern(Q3, 2 * k + 1)
    return tensor_euler_characteristic(Q3.cotangent, N, Q3) - euler_characteristic(twist(N, 1 + 2 * k, Q3.nu), Q3)


# -- published closed forms ------------------------------------------------


def _poly(*coeffs) -> Callable[[int], Fraction]:
    """Polynomial in ``k`` from the constant term upwards."""
    return lambda k: sum(Fraction(c) * k**i for i, c in enumerate(coeffs))


@dataclass(frozen=True)
class PublishedFormula:
    key: str
    location: str
    expression: str
    k_min: int
    printed: Callable[[int], Fraction]
    derived: Callable[[int], Fraction]
    discrepancy: Optional[str] = None


@dataclass(frozen=True)
class ChernRow:
    location: str
    parity: Parity
    k_min: int
    c1: Callable[[int], Fraction]
    c2: Callable[[int], Fraction]
    c3: Callable[[int], Fraction]
    k_max: Optional[int] = None

    def applies(self, parity: Parity, k: int) -> bool:
        return parity is self.parity and k >= self.k_min and (self.k_max is None or k <= self.k_max)

    def printed_row(self, k: int) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c1(k), self.c2(k), self.c3(k))


Q3_MAIN = "Q3 main theorem (moduli of normal sheaves)"
Q3_ODD_THM = "Q3 odd-degree moduli theorem"
Q3_EVEN_THM = "Q3 even-degree moduli theorem"
Q3_ODD_K0 = "Q3 degree-1 remark (k = 0)"

PRINTED_CHERN_ROWS = (
    ChernRow(Q3_MAIN, Parity.ODD, 1, _poly(0), _poly(4, 6, 3), _poly(6, 26, 24, 8)),
    ChernRow(Q3_ODD_THM, Parity.ODD, 1, _poly(0), _poly(4, 6, 3), _poly(6, 26, 24, 8)),
    ChernRow(Q3_ODD_K0, Parity.ODD, 0, _poly(0), _poly(4), _poly(6), k_max=0),
    ChernRow(Q3_MAIN, Parity.EVEN, 0, _poly(-1), _poly(1, 3, 3), _poly(-2, 8, 12, 8)),
    ChernRow(Q3_EVEN_THM, Parity.EVEN, 0, _poly(-1), _poly(2, 3, 3), _poly(-2, 8, 12, 8)),
)


def _chern_h(variety: ThreefoldModel, parity: Parity, index: int):
    return lambda k: _h_units(normalized_normal_chern(variety, parity, k), variety.nu)[index]


def _p3_diff(parity: Parity):
    def value(k):
        rec = p3_family(k, parity)
        return rec.ext1 - rec.ext2
    return value


def _q3_diff(k):
    rec = q3_family(k, Parity.ODD)
    return rec.ext1 - rec.ext2


def _q3_component(k):
    return q3_family(k, Parity.EVEN).dim_family


ODD, EVEN = Parity.ODD, Parity.EVEN

P3_ODD_THM = "P3 odd-degree moduli theorem"
P3_EVEN = "P3 even-degree moduli discussion"

PUBLISHED: tuple[PublishedFormula, ...] = (
    PublishedFormula("p3.odd.c1", P3_ODD_THM, "0", 1, _poly(0), _chern_h(P3, ODD, 0)),
    PublishedFormula("p3.odd.c2", P3_ODD_THM, "3k^2+4k+2", 1, _poly(2, 4, 3), _chern_h(P3, ODD, 1)),
    PublishedFormula("p3.odd.c3", P3_ODD_THM, "8k^3+16k^2+12k+4", 1, _poly(4, 12, 16, 8), _chern_h(P3, ODD, 2)),
    PublishedFormula("p3.odd.dim", P3_ODD_THM, "4k^3+20k^2+31k+14", 1, _poly(14, 31, 20, 4),
                     lambda k: p3_family(k, ODD).dim_family),
    PublishedFormula("p3.odd.ext1", P3_ODD_THM, "4k^3+20k^2+31k+14", 1, _poly(14, 31, 20, 4),
                     lambda k: p3_family(k, ODD).ext1),
    PublishedFormula("p3.odd.ext2", P3_ODD_THM, "4k^3-4k^2-k+1", 1, _poly(1, -1, -4, 4),
                     lambda k: p3_ext2(ODD, k)),
    PublishedFormula("p3.odd.ext_difference", P3_ODD_THM, "24k^2+32k+13", 1, _poly(13, 32, 24), _p3_diff(ODD)),
    PublishedFormula("p3.even.c1", P3_EVEN, "-1", 0, _poly(-1), _chern_h(P3, EVEN, 0)),
    PublishedFormula("p3.even.c2", P3_EVEN, "3k^2+k+1", 0, _poly(1, 1, 3), _chern_h(P3, EVEN, 1)),
    PublishedFormula("p3.even.c3", P3_EVEN, "8k^3+4k^2+2k+1", 0, _poly(1, 2, 4, 8), _chern_h(P3, EVEN, 2)),
    PublishedFormula("p3.even.dim", P3_EVEN, "4k^3+14k^2+14k+3", 0, _poly(3, 14, 14, 4),
                     lambda k: p3_family(k, EVEN).dim_family),
    PublishedFormula("p3.even.ext1", P3_EVEN, "4k^3+14k^2+14k+3", 0, _poly(3, 14, 14, 4),
                     lambda k: p3_family(k, EVEN).ext1),
    PublishedFormula("p3.even.ext2", P3_EVEN, "4k^3-6k^2+6k", 0, _poly(0, 6, -6, 4),
                     lambda k: p3_ext2(EVEN, k), discrepancy="d"),
    PublishedFormula("p3.even.ext_difference", P3_EVEN, "24k^2+8k+3", 0, _poly(3, 8, 24), _p3_diff(EVEN)),
    PublishedFormula("q3.odd.c1", Q3_ODD_THM, "0", 1, _poly(0), _chern_h(Q3, ODD, 0)),
    PublishedFormula("q3.odd.c2", Q3_ODD_THM, "(3k^2+6k+4)H^2", 1, _poly(4, 6, 3), _chern_h(Q3, ODD, 1)),
    PublishedFormula("q3.odd.c3", Q3_ODD_THM, "(8k^3+24k^2+26k+6)H^3", 1, _poly(6, 26, 24, 8),
                     _chern_h(Q3, ODD, 2), discrepancy="a"),
    PublishedFormula("q3.odd.k0_c3", Q3_ODD_K0, "6H^3", 0, lambda k: Fraction(6),
                     lambda k: _chern_h(Q3, ODD, 2)(0), discrepancy="a"),
    PublishedFormula("q3.odd.dim", Q3_ODD_THM, "8k^3+42k^2+69k+44", 1, _poly(44, 69, 42, 8),
                     lambda k: q3_hom_minus_aut(k, ODD)),
    PublishedFormula("q3.odd.ext1", Q3_ODD_THM, "8k^3+42k^2+69k+44", 1, _poly(44, 69, 42, 8),
                     lambda k: q3_family(k, ODD).ext1),
    PublishedFormula("q3.odd.dim_D", Q3_ODD_THM, "8k^3+42k^2+69k+34", 1, _poly(34, 69, 42, 8),
                     lambda k: q3_dim_D(k, ODD)),
    PublishedFormula("q3.odd.ext2", Q3_ODD_THM, "8k^3+6k^2-3k-1", 1, _poly(-1, -3, 6, 8),
                     lambda k: q3_ext2(k, ODD)),
    PublishedFormula("q3.odd.ext_difference", Q3_ODD_THM, "36k^2+72k+45", 0, _poly(45, 72, 36), _q3_diff),
    PublishedFormula("q3.odd.chi_difference", Q3_ODD_THM, "-36k^2-72k-44", 0, _poly(-44, -72, -36),
                     q3_chi_difference),
    PublishedFormula("q3.odd.h3_aux", Q3_ODD_THM, "(1/3)(2k-1)(2k+1)(8k+3)", 1,
                     lambda k: Fraction((2 * k - 1) * (2 * k + 1) * (8 * k + 3), 3), q3_h3_aux),
    PublishedFormula("q3.odd.k0_component", Q3_ODD_K0, "45", 0, lambda k: Fraction(45),
                     lambda k: q3_family(0, ODD).ext1),
    PublishedFormula("q3.odd.k0_family", Q3_ODD_K0, "44", 0, lambda k: Fraction(44),
                     lambda k: q3_hom_minus_aut(0, ODD)),
    PublishedFormula("q3.odd.k0_ext2", Q3_ODD_K0, "0", 0, lambda k: Fraction(0), lambda k: q3_ext2(0, ODD)),
    PublishedFormula("q3.even.c1", Q3_EVEN_THM, "-H", 0, _poly(-1), _chern_h(Q3, EVEN, 0)),
    PublishedFormula("q3.even.c2", Q3_EVEN_THM, "(3k^2+3k+2)H^2", 0, _poly(2, 3, 3), _chern_h(Q3, EVEN, 1)),
    PublishedFormula("q3.even.c2_main", Q3_MAIN, "(3k^2+3k+1)H^2", 0, _poly(1, 3, 3),
                     _chern_h(Q3, EVEN, 1), discrepancy="b"),
    PublishedFormula("q3.even.c3", Q3_EVEN_THM, "(8k^3+12k^2+8k-2)H^3", 0, _poly(-2, 8, 12, 8),
                     _chern_h(Q3, EVEN, 2), discrepancy="a"),
    PublishedFormula("q3.even.dim_D", Q3_EVEN_THM, "8k^3+30k^2+33k+9", 0, _poly(9, 33, 30, 8),
                     lambda k: q3_dim_D(k, EVEN)),
    PublishedFormula("q3.even.component_k0", Q3_EVEN_THM, "18", 0, lambda k: Fraction(18),
                     lambda k: _q3_component(0)),
    PublishedFormula("q3.even.component", Q3_EVEN_THM, "8k^3+30k^2+33k+19", 1, _poly(19, 33, 30, 8),
                     _q3_component),
    PublishedFormula("q3.even.ext1", Q3_EVEN_THM, "8k^3+30k^2+33k+19", 1, _poly(19, 33, 30, 8),
                     lambda k: q3_family(k, EVEN).ext1),
)

_SINGLE_K = {"q3.odd.k0_c3", "q3.odd.k0_component", "q3.odd.k0_family", "q3.odd.k0_ext2", "q3.even.component_k0"}


@dataclass(frozen=True)
class Mismatch:
    k: int
    printed: Fraction
    derived: Fraction


@dataclass(frozen=True)
class FormulaCheck:
    formula: PublishedFormula
    ks: tuple[int, ...]
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


@dataclass(frozen=True)
class PolynomialReport:
    k_max: int
    checks: tuple[FormulaCheck, ...] = field(default_factory=tuple)

    @property
    def mismatches(self) -> list[tuple[str, Mismatch]]:
        return [(c.formula.key, m) for c in self.checks for m in c.mismatches]

    def check(self, key: str) -> FormulaCheck:
        for c in self.checks:
            if c.formula.key == key:
                return c
        raise KeyError(key)


def check_formula(formula: PublishedFormula, k_max: int) -> FormulaCheck:
    ks = (0,) if formula.key in _SINGLE_K else tuple(range(formula.k_min, k_max + 1))
    bad = []
    for k in ks:
        printed, derived = Fraction(formula.printed(k)), Fraction(formula.derived(k))
        if printed != derived:
            bad.append(Mismatch(k, printed, derived))
    return FormulaCheck(formula, ks, tuple(bad))


def verify_polynomial_formulas(k_max: int = 10) -> PolynomialReport:
    """Sweep every published cubic over ``k in [k_min, k_max]``; ``k_max >= 4``."""
    if k_max < 4:
        raise ValueError("k_max must be at least 4 to pin down a cubic")
    return PolynomialReport(k_max, tuple(check_formula(f, k_max) for f in PUBLISHED))


# -- rendering -------------------------------------------------------------

COLUMNS = ("variety", "parity", "k", "c1", "c2", "c3", "dim_family", "ext1", "ext2", "dim_D")


def render_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


def to_csv(records: Iterable[FamilyRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for rec in records:
        row = rec.as_row()
        writer.writerow([render_value(row[c]) for c in COLUMNS])
    return buf.getvalue()


def record_payload(rec: FamilyRecord) -> dict:
    row = dict(rec.as_row())
    row["dim_normal_family"] = rec.dim_normal_family
    if rec.printed_chern:
        row["printed_chern"] = [
            {"location": loc, "c1": c1, "c2": c2, "c3": c3} for loc, (c1, c2, c3) in rec.printed_chern
        ]
    return exact(row)


def to_json(records: Iterable[FamilyRecord]) -> str:
    return json.dumps([record_payload(r) for r in records], indent=2, sort_keys=True) + "\n"


def to_markdown(records: Iterable[FamilyRecord]) -> str:
    records = list(records)
    rows = [[render_value(rec.as_row()[c]) for c in COLUMNS] for rec in records]
    widths = [max(len(c), *(len(r[i]) for r in rows)) if rows else len(c) for i, c in enumerate(COLUMNS)]
    lines = [
        "| " + " | ".join(c.ljust(w) for c, w in zip(COLUMNS, widths)) + " |",
        "|" + "|".join("-" * (w + 2) for w in widths) + "|",
    ]
    lines += ["| " + " | ".join(v.rjust(w) for v, w in zip(r, widths)) + " |" for r in rows]
    notes = []
    for rec in records:
        for loc, (c1, c2, c3) in rec.printed_chern:
            notes.append(
                f"- {rec.variety} {rec.parity} k={rec.k}: printed in {loc} as "
                f"({render_value(c1)}, {render_value(c2)}, {render_value(c3)})"
            )
    if notes:
        lines += ["", "Printed Chern rows that differ from the derived ones:", *notes]
    return "\n".join(lines) + "\n"


RENDERERS = {"csv": to_csv, "json": to_json, "md": to_markdown}
