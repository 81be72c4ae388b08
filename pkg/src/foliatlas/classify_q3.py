"""Foliations on the quadric threefold built from spinor and Ottaviani-Szurek bundles,
and the numerical classification of LCI foliations of degree 0 and 1.

Exclusions whose justification is sheaf-theoretic rather than numerical are
kept as :class:`Step` entries with ``kind="curated"``; everything else is
``kind="computed"`` and is re-derived on each call.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .chern import SheafClass, chern_character, euler_characteristic_of_ch, twist
from .errors import InconsistentModelError, InvalidFoliation
from .foliations import CurveData, FoliationSpec, curve_from_conormal, twist_offset, verify_c3_identity
from .moduli import render_value
from .ring import H, L, integrate, mul
from .stability import bogomolov_max_curve_degree
from .varieties import Q3, SPINOR, SheafId, ThreefoldModel, h_spinor, sheaf_ch

OS_BUNDLE = SheafClass.from_coefficients(2, 0, 2, 0)
TRIVIAL_RANK2 = SheafClass(2)


def zero_locus_curve(X: ThreefoldModel, E: SheafClass) -> CurveData:
    """Curve cut out by a regular section of a rank 2 bundle ``E``.

    ``deg Y = c2(E).H`` and ``2 p_a - 2 = (c1(E) + K_X).c2(E)``.
    """
    if E.rank != 2:
        raise InvalidFoliation("zero loci are taken for rank 2 bundles")
    deg = integrate(mul(E.c2, H, X.nu))
    canonical = E.c1 - X.tangent.c1
    two_pa_minus_2 = integrate(mul(canonical, E.c2, X.nu))
    return CurveData(int(deg), int(-two_pa_minus_2 / 2))


# -- spinor foliations -----------------------------------------------------


def spinor_printed_degree(t: int) -> int:
    return 6 * t * t + 18 * t + 15


def spinor_printed_genus(t: int) -> int:
    return 10 * t**3 + 36 * t * t + 43 * t + 16


@dataclass(frozen=True)
class SpinorFoliation:
    t: int
    r: int
    conormal: SheafClass
    curve: CurveData


def spinor_foliation(t: int) -> SpinorFoliation:
    """``0 -> S(-2-t) -> Omega_Q -> I_C(2+2t) -> 0``, defined for ``t >= -1``."""
    if t < -1:
        raise InvalidFoliation(
            f"t = {t}: slope of S(-2-t) is {Fraction(-(2 * t + 5), 2)}, "
            "above that of Omega_Q, so S(-2-t) cannot inject into it"
        )
    r = 2 * t + 2
    conormal = twist(SPINOR, -2 - t, Q3.nu)
    curve = curve_from_conormal(Q3, r, conormal.c2)
    if (curve.deg, curve.genus) != (spinor_printed_degree(t), spinor_printed_genus(t)):
        raise InconsistentModelError(f"spinor closed forms fail at t = {t}")
    return SpinorFoliation(t, r, conormal, curve)


# -- Ottaviani-Szurek bundles ----------------------------------------------


def os_printed_degree(t: int) -> int:
    return 22 * t * t - 48 * t + 24


def os_printed_genus(t: int) -> int:
    return 58 * t**3 - 219 * t * t + 262 * t - 97


def os_derived_degree(t: int) -> int:
    return 6 * t * t + 12 * t + 6


def os_derived_genus(t: int) -> int:
    return 10 * t**3 + 21 * t * t + 10 * t


@dataclass(frozen=True)
class OSBundleFoliation:
    t: int
    r: int
    stable: bool
    conormal: SheafClass
    curve: CurveData
    printed_deg: int
    printed_genus: int

    @property
    def discrepancy_flag(self) -> bool:
        return (self.curve.deg, self.curve.genus) != (self.printed_deg, self.printed_genus)


def os_bundle_foliation(t: int, stable: bool = True) -> OSBundleFoliation:
    """``0 -> E(-2-t) -> Omega_Q -> I_C(2t+1) -> 0`` with ``c1(E) = 0``, ``c2(E) = 2l``.

    Only ``t >= 1`` is accepted: negative ``t`` is ruled out by slopes and
    ``t = 0`` is left open.  The numerics do not depend on ``stable``.
    """
    if t < 1:
        raise InvalidFoliation(f"t = {t} is outside the range t >= 1")
    r = 2 * t + 1
    conormal = twist(OS_BUNDLE, -2 - t, Q3.nu)
    curve = curve_from_conormal(Q3, r, conormal.c2)
    return OSBundleFoliation(t, r, stable, conormal, curve, os_printed_degree(t), os_printed_genus(t))


@dataclass(frozen=True)
class EulerCheck:
    name: str
    printed: int
    derived: int

    @property
    def ok(self) -> bool:
        return self.printed == self.derived


def _chi_ch(ch) -> int:
    return euler_characteristic_of_ch(ch, Q3)


def os_bundle_euler_characteristics() -> list[EulerCheck]:
    """Euler characteristics used for the ``t = 0`` case, next to the printed values."""
    nu = Q3.nu
    chE = chern_character(OS_BUNDLE, nu)

    def chi_E(t):
        return _chi_ch(chern_character(twist(OS_BUNDLE, t, nu), nu))

    restricted = _chi_ch(mul(chE, sheaf_ch(Q3, SheafId.OmegaP4restQ, 2), nu))
    cotangent = _chi_ch(mul(chE, sheaf_ch(Q3, SheafId.Omega1X, 2), nu))
    return [
        EulerCheck("chi(E)", -1, chi_E(0)),
        EulerCheck("chi(E(1))", 5, chi_E(1)),
        EulerCheck("chi(E(2))", 17, chi_E(2)),
        EulerCheck("chi(E (x) Omega_P4|Q(2))", 8, restricted),
        EulerCheck("chi(E (x) Omega_Q(2))", 9, cotangent),
    ]


def spinor_hom_count() -> int:
    """``h0(S (x) Omega_P4|Q(2)) = 5 h0(S(1)) - h0(S(2))``."""
    return 5 * h_spinor(0, 1) - h_spinor(0, 2)


# -- classification --------------------------------------------------------


@dataclass(frozen=True)
class ClassificationCase:
    label: str
    r: int
    conormal_twisted: SheafClass
    curve: CurveData
    notes: str
    component_chi: tuple[int, ...] = ()

    def spec(self) -> FoliationSpec:
        return FoliationSpec(Q3, self.r, 0, (self.curve,))


@dataclass(frozen=True)
class Step:
    deg: int
    chi: Fraction
    accepted: bool
    kind: str  # "computed" or "curated"
    reason: str


@dataclass(frozen=True)
class Enumeration:
    r: int
    bogomolov_bound: Fraction
    steps: tuple[Step, ...] = field(default_factory=tuple)


def _chi_for_degree(r: int, deg: int) -> Fraction:
    """``chi(O_C)`` forced by the conormal Chern data of an LCI foliation."""
    m = twist_offset(Q3, r)
    c3_int = integrate(twist(Q3.cotangent, -m, Q3.nu).c3)
    return -(c3_int + 3 * m * deg) / 2


def degree0_enumeration() -> Enumeration:
    bound = bogomolov_max_curve_degree(Q3, 0)
    steps = []
    target = twist(SPINOR, -1, Q3.nu).c2
    for deg in range(1, int(bound) + 1):
        chi = _chi_for_degree(0, deg)
        if deg == 1:
            steps.append(Step(deg, chi, False, "curated", "a degree 1 curve is a line, with chi = 1"))
        elif deg == 2:
            steps.append(Step(deg, chi, False, "curated",
                              "C is 1-Buchsbaum, so the conormal sheaf is ACM: split sums are "
                              "impossible and S(-1) forces deg C = 3"))
        else:
            c2 = Q3.cotangent.c2 - L * deg
            ok = c2 == target
            steps.append(Step(deg, chi, ok, "computed",
                              "c2 = 8l - [C] equals c2(S(-1)) = 5l" if ok else "c2 differs from c2(S(-1))"))
    return Enumeration(0, bound, tuple(steps))


def classify_degree0() -> ClassificationCase:
    conormal = twist(SPINOR, -1, Q3.nu)
    curve = curve_from_conormal(Q3, 0, conormal.c2)
    return ClassificationCase("degree 0", 0, conormal, curve, "line + conic (disjoint)")


def degree1_enumeration() -> Enumeration:
    bound = bogomolov_max_curve_degree(Q3, 1)
    steps = []
    for deg in range(1, int(bound) + 1):
        chi = _chi_for_degree(1, deg)
        if chi.denominator != 1:
            steps.append(Step(deg, chi, False, "computed", "chi(O_C) is not an integer"))
        elif deg == 2:
            steps.append(Step(deg, chi, False, "curated", "a degree 2 curve with chi = 7 cannot be reduced"))
        elif deg == 4:
            steps.append(Step(deg, chi, False, "curated",
                              "four skew lines would give a monomorphism O(-1)+O(1) -> TQ, "
                              "but h0(TQ(-1)) = 0"))
        else:
            steps.append(Step(deg, chi, True, "computed", "chi = 10 - 3 deg/2"))
    return Enumeration(1, bound, tuple(steps))


def classify_degree1() -> list[ClassificationCase]:
    cases = []
    for label, E, notes, split in (
        ("degree 1, stable E", OS_BUNDLE, "rational curve of degree 6", ()),
        ("degree 1, strictly semistable E", OS_BUNDLE, "rational + elliptic curve, disjoint", (1, 0)),
        ("degree 1, E trivial", TRIVIAL_RANK2, "connected curve of degree 8 and genus 3", ()),
    ):
        conormal = twist(E, -2, Q3.nu)
        curve = curve_from_conormal(Q3, 1, conormal.c2)
        if sum(split) and sum(split) != curve.chi:
            raise InconsistentModelError(f"components do not add up for {label}")
        cases.append(ClassificationCase(label, 1, E, curve, notes, split))
    return cases


def degree1_relation_holds(case: ClassificationCase) -> bool:
    return Fraction(case.curve.chi) == 10 - Fraction(3, 2) * case.curve.deg


# -- report ----------------------------------------------------------------


def _sheaf_payload(F: SheafClass, nu: int) -> dict:
    a1, a2, a3 = F.chern_numbers
    return {"rank": F.rank, "c1_H": render_value(a1), "c2_l": render_value(a2), "c3_p": render_value(a3)}


def _case_payload(case: ClassificationCase) -> dict:
    return {
        "label": case.label,
        "degree": case.r,
        "bundle": _sheaf_payload(case.conormal_twisted, Q3.nu),
        "curve": {"deg": case.curve.deg, "chi": case.curve.chi, "genus": case.curve.genus},
        "component_chi": list(case.component_chi),
        "notes": case.notes,
        "c3_identity": verify_c3_identity(case.spec()).holds,
    }


def _enumeration_payload(enum: Enumeration) -> dict:
    return {
        "degree": enum.r,
        "bogomolov_bound": render_value(enum.bogomolov_bound),
        "steps": [
            {"deg": s.deg, "chi": render_value(s.chi), "accepted": s.accepted, "kind": s.kind, "reason": s.reason}
            for s in enum.steps
        ],
    }


def classification_report() -> dict:
    return {
        "degree0": {"case": _case_payload(classify_degree0()), "enumeration": _enumeration_payload(degree0_enumeration())},
        "degree1": {
            "cases": [_case_payload(c) for c in classify_degree1()],
            "enumeration": _enumeration_payload(degree1_enumeration()),
        },
    }


def report_json() -> str:
    return json.dumps(classification_report(), indent=2, sort_keys=True) + "\n"


def report_markdown() -> str:
    rep = classification_report()
    lines = ["# LCI foliations of degree 0 and 1 on Q3", ""]
    for key in ("degree0", "degree1"):
        block = rep[key]
        enum = block["enumeration"]
        cases = [block["case"]] if "case" in block else block["cases"]
        lines += [f"## Degree {enum['degree']}", "", f"Bogomolov bound: deg C <= {enum['bogomolov_bound']}", ""]
        lines += ["| deg | chi | accepted | kind | reason |", "|---|---|---|---|---|"]
        lines += [f"| {s['deg']} | {s['chi']} | {'yes' if s['accepted'] else 'no'} | {s['kind']} | {s['reason']} |"
                  for s in enum["steps"]]
        lines += ["", "| case | c(E) | deg | chi | genus | notes |", "|---|---|---|---|---|---|"]
        for c in cases:
            b = c["bundle"]
            lines.append(f"| {c['label']} | ({b['c1_H']}H, {b['c2_l']}l) | {c['curve']['deg']} | "
                         f"{c['curve']['chi']} | {c['curve']['genus']} | {c['notes']} |")
        lines.append("")
    return "\n".join(lines)
