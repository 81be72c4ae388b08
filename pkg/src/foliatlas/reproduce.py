"""Golden reproduction suite behind ``foliatlas verify-paper``.

Every published number the library can recompute is checked.  Mismatches are
allowed only when they belong to a documented discrepancy; each documented
discrepancy also carries an adjudication showing that the derived value is
internally consistent and the printed one is not.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from . import classify_q3 as cq
from .chern import SheafClass, chern_character, ext_euler_characteristic, hrr, twist
from .foliations import (
    CurveData,
    FoliationSpec,
    conormal_chern,
    normal_chern,
    singular_points_count,
    verify_c3_identity,
)
from .moduli import Parity, normalized_normal_chern, q3_ext2, verify_polynomial_formulas
from .report import Discrepancy, ReportDocument
from .ring import CohClass, integrate
from .stability import (
    Status,
    bogomolov_max_curve_degree,
    check_conormal_stability,
    check_generic_normal_stability,
    conormal_threshold,
)
from .varieties import P3, Q3, SheafId, custom, h, h_cotangent, h_spinor, h_tangent

SWEEP_ENV = "FOLIATLAS_SWEEP_MAX"
DEFAULT_SWEEP = 10


def sweep_max() -> int:
    raw = os.environ.get(SWEEP_ENV, "")
    if not raw:
        return DEFAULT_SWEEP
    value = int(raw)
    if value < 4:
        raise ValueError(f"{SWEEP_ENV} must be at least 4, got {value}")
    return value


@dataclass(frozen=True)
class Check:
    group: str
    name: str
    printed: Any
    derived: Any
    documented: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.printed == self.derived


@dataclass(frozen=True)
class Adjudication:
    statement: str
    derived_consistent: bool
    printed_consistent: bool

    @property
    def ok(self) -> bool:
        return self.derived_consistent and not self.printed_consistent


@dataclass(frozen=True)
class DocumentedDiscrepancy:
    key: str
    claim_location: str
    paper_value: str
    derived_value: str
    adjudicate: Callable[[int], list[Adjudication]]

    def as_discrepancy(self) -> Discrepancy:
        return Discrepancy(self.claim_location, self.paper_value, self.derived_value)


# -- adjudications ---------------------------------------------------------


def _adjudicate_q3_c3(k_max: int) -> list[Adjudication]:
    derived_ok = printed_ok = True
    for parity, printed in ((Parity.ODD, lambda k: 8 * k**3 + 24 * k * k + 26 * k + 6),
                            (Parity.EVEN, lambda k: 8 * k**3 + 12 * k * k + 8 * k - 2)):
        for k in range(0, k_max + 1):
            r = parity.degree(k)
            length = singular_points_count(Q3, r)
            c3_p = normalized_normal_chern(Q3, parity, k).total.a3
            derived_ok &= c3_p == length
            printed_ok &= printed(k) * Q3.nu == length
    # the printed rows are what c(TQ) = 1 + 3H + 8l - 4p would give
    shifted = custom(2, 0, 2, 3, SheafClass.from_coefficients(3, 3, 8, -4), name="Q3 with c3(T) = -4p")
    rows_match = all(
        _normal_c3_h(shifted, 2 * k + 1, k) == 8 * k**3 + 24 * k * k + 26 * k + 6
        for k in range(0, k_max + 1)
    )
    relation_derived = _degree1_chi(Q3, 6) == 1
    relation_printed = rows_match and _degree1_chi(shifted, 6) == 1
    return [
        Adjudication("c3(N) * nu equals the singular length integral c3(TX(r+tau))", derived_ok, printed_ok),
        Adjudication("LCI degree 1 foliations with deg C = 6 have chi(O_C) = 1", relation_derived, relation_printed),
    ]


def _normal_c3_h(X, r: int, k: int) -> Fraction:
    return twist(normal_chern(X, r), -2 - k, X.nu).total.a3 / X.nu


def _degree1_chi(X, deg: int) -> Fraction:
    m = 1 + X.tau
    c3 = integrate(twist(X.cotangent, -m, X.nu).c3)
    return -(c3 + 3 * m * deg) / 2


def _adjudicate_q3_even_c2(k_max: int) -> list[Adjudication]:
    def component_dim(chern: SheafClass) -> int:
        return q3_ext2(0, Parity.EVEN) + 1 - ext_euler_characteristic(chern, chern, Q3)

    derived = normalized_normal_chern(Q3, Parity.EVEN, 0)
    printed = SheafClass(2, CohClass(1, -1, 1 * Q3.nu, derived.total.a3))
    rows = [(normalized_normal_chern(Q3, Parity.EVEN, k).total.a2 / Q3.nu, 3 * k * k + 3 * k + 1)
            for k in range(k_max + 1)]
    even_theorem = [3 * k * k + 3 * k + 2 for k in range(k_max + 1)]
    return [
        Adjudication("ext1 at k = 0 equals the printed component dimension 18",
                     component_dim(derived) == 18, component_dim(printed) == 18),
        Adjudication("agrees with the c2 row (3k^2+3k+2)H^2 of the even-degree moduli theorem",
                     [d for d, _ in rows] == even_theorem, [p for _, p in rows] == even_theorem),
    ]


def _adjudicate_os(k_max: int) -> list[Adjudication]:
    derived_ok = printed_ok = True
    for t in range(1, k_max + 1):
        m = 2 * t + 1
        length = singular_points_count(Q3, m)
        fol = cq.os_bundle_foliation(t)
        derived_ok &= verify_c3_identity(FoliationSpec(Q3, m, 0, (fol.curve,))).holds
        deg, genus = fol.printed_deg, fol.printed_genus
        printed_ok &= deg >= 1 and 3 * m * deg + 2 * (1 - genus) == length
    return [Adjudication("LCI balance integral c3(TX(r+tau)) = 3(r+tau) deg C + 2 chi(O_C)", derived_ok, printed_ok)]


def _adjudicate_p3_even_ext2(k_max: int) -> list[Adjudication]:
    derived_ok = printed_ok = True
    for k in range(0, k_max + 1):
        forced = (4 * k**3 + 14 * k * k + 14 * k + 3) - (24 * k * k + 8 * k + 3)
        derived_ok &= forced == 4 * k**3 - 10 * k * k + 6 * k
        printed_ok &= forced == 4 * k**3 - 6 * k * k + 6 * k
    return [Adjudication("dim Ext^2 = dim Ext^1 - (24k^2+8k+3) with dim Ext^1 = 4k^3+14k^2+14k+3",
                         derived_ok, printed_ok)]


def _adjudicate_os_euler(k_max: int) -> list[Adjudication]:
    # c2(E) = n l is the only free parameter once c1(E) = 0 and c3(E) = 0
    def chi(n: int, t: int) -> Fraction:
        return hrr(chern_character(twist(SheafClass.from_coefficients(2, 0, n, 0), t, Q3.nu), Q3.nu), Q3)

    fits = [n for n in range(-20, 21) if chi(n, 0) == -1 and chi(n, 1) == 5]
    return [
        Adjudication("chi(E) = -1, chi(E(1)) = 5 and chi(E(2)) fit one rank 2 class with c1 = 0",
                     fits == [2] and chi(2, 2) == 21,
                     any(chi(n, 2) == 17 for n in fits)),
    ]


def _adjudicate_p3_remark(k_max: int) -> list[Adjudication]:
    def verdicts(threshold):
        return [("Stable" if r < threshold else "Semistable" if r == threshold else "Inconclusive")
                for r in (0, 1)]

    expected = ["Stable", "Semistable"]
    printed = (2 * P3.rho - P3.tau) * P3.nu - P3.cX
    derived = (2 * P3.rho - P3.tau) * P3.nu + P3.cX
    return [Adjudication("degree 0 conormal sheaves stable and degree 1 semistable on P3",
                         verdicts(derived) == expected and derived == conormal_threshold(P3) * P3.nu,
                         verdicts(printed) == expected)]


DOCUMENTED: dict[str, DocumentedDiscrepancy] = {
    d.key: d
    for d in (
        DocumentedDiscrepancy(
            "a",
            "Q3 moduli: c3 rows of the main theorem, the odd and even moduli theorems and the degree-1 remark",
            "(8k^3+24k^2+26k+6)H^3 odd; (8k^3+12k^2+8k-2)H^3 even; 6H^3 for degree 1",
            "(8k^3+24k^2+26k+10)H^3 odd; (8k^3+12k^2+8k+2)H^3 even; 10H^3 for degree 1",
            _adjudicate_q3_c3,
        ),
        DocumentedDiscrepancy(
            "b",
            "Q3 main theorem: c2 row for even degree",
            "(3k^2+3k+1)H^2",
            "(3k^2+3k+2)H^2",
            _adjudicate_q3_even_c2,
        ),
        DocumentedDiscrepancy(
            "c",
            "Q3 odd-degree foliations with Ottaviani-Szurek conormal bundle: degree and genus of C",
            "deg C = 22t^2-48t+24; g = 58t^3-219t^2+262t-97",
            "deg C = 6t^2+12t+6; g = 10t^3+21t^2+10t",
            _adjudicate_os,
        ),
        DocumentedDiscrepancy(
            "d",
            "P3 even-degree moduli: dim Ext^2(N, N)",
            "4k^3-6k^2+6k",
            "4k^3-10k^2+6k",
            _adjudicate_p3_even_ext2,
        ),
        DocumentedDiscrepancy(
            "e",
            "Q3 Ottaviani-Szurek bundle, critical case t = 0: Euler characteristics",
            "chi(E(2)) = 17; chi(E (x) Omega_P4|Q(2)) = 8; chi(E (x) Omega_Q(2)) = 9",
            "chi(E(2)) = 21; chi(E (x) Omega_P4|Q(2)) = 4; chi(E (x) Omega_Q(2)) = 5",
            _adjudicate_os_euler,
        ),
        DocumentedDiscrepancy(
            "f",
            "P3 remark on the sharpness of the conormal stability bound",
            "(2 rho - tau) nu - cX = 1",
            "(2 rho - tau) nu + cX = 1; the printed expression evaluates to 9",
            _adjudicate_p3_remark,
        ),
    )
}


# -- checks ----------------------------------------------------------------


def _constant_checks() -> list[Check]:
    g = "constants"
    out = []
    for X, consts in ((P3, (1, -1, 2, 4, -4)), (Q3, (2, 0, 2, 3, -6))):
        derived = (X.nu, X.tau, X.rho, X.iota, X.cX)
        for name, p, d in zip(("nu", "tau", "rho", "iota", "cX"), consts, derived):
            out.append(Check(g, f"{X.name} {name}", p, d))
        out.append(Check(g, f"{X.name} integral c3(TX)", 4, integrate(X.tangent.c3)))
        out.append(Check(g, f"{X.name} tau minimal", True,
                         h_tangent(X, 0, X.tau) > 0 and h_tangent(X, 0, X.tau - 1) == 0))
        out.append(Check(g, f"{X.name} rho minimal", True,
                         h_cotangent(X, 0, X.rho) > 0 and h_cotangent(X, 0, X.rho - 1) == 0))
        out.append(Check(g, f"{X.name} h0(Omega(t)) = 0 for t <= 1", True,
                         all(h_cotangent(X, 0, t) == 0 for t in range(-10, 2))))
        out.append(Check(g, f"{X.name} conormal threshold", 1, conormal_threshold(X)))
    out.append(Check(g, "P3 (2 rho - tau) nu - cX", 1, (2 * P3.rho - P3.tau) * P3.nu - P3.cX, "f"))
    out.append(Check(g, "h0(Omega_P4|Q(2))", 11, h(Q3, SheafId.OmegaP4restQ, 0, 2)))
    out.append(Check(g, "h1(Omega_P4|Q)", 1, h(Q3, SheafId.OmegaP4restQ, 1, 0)))
    return out


def _moduli_checks(k_max: int) -> list[Check]:
    report = verify_polynomial_formulas(k_max)
    out = []
    for check in report.checks:
        f = check.formula
        bad = {m.k: m for m in check.mismatches}
        for k in check.ks:
            printed = f.printed(k) if k not in bad else bad[k].printed
            derived = printed if k not in bad else bad[k].derived
            out.append(Check("moduli", f"{f.key} [{f.expression}] k={k}", printed, derived, f.discrepancy))
    return out


def _foliation_checks() -> list[Check]:
    g = "foliations"
    out = []
    for deg in (1, 2, 3):
        spec = FoliationSpec.build(Q3, 0, 0, [(deg, "solve")])
        out.append(Check(g, f"Q3 r=0 deg C={deg}: c2(N^v) = 4H^2 - [C]", 8 - deg,
                         conormal_chern(spec).chern_numbers[1]))
        out.append(Check(g, f"Q3 r=0 deg C={deg}: c1(N^v) = -3H", -3, conormal_chern(spec).chern_numbers[0]))
        out.append(Check(g, f"Q3 r=0 deg C={deg}: chi(O_C) = 2", 2, spec.curves[0].chi))
    for deg in (2, 4, 6, 8):
        spec = FoliationSpec.build(Q3, 1, 0, [(deg, "solve")])
        out.append(Check(g, f"Q3 r=1 deg C={deg}: c2(N^v) = 8H^2 - [C]", 16 - deg,
                         conormal_chern(spec).chern_numbers[1]))
        out.append(Check(g, f"Q3 r=1 deg C={deg}: chi = 10 - 3 deg/2", 10 - Fraction(3 * deg, 2),
                         spec.curves[0].chi))
    out.append(Check(g, "P3 r=1 singular length", 4, singular_points_count(P3, 1)))
    spinor0 = FoliationSpec(Q3, 2, 0, (CurveData(15, -15),))
    rep = verify_c3_identity(spinor0)
    out.append(Check(g, "Q3 spinor t=0 balance", (60, 60), (rep.lhs, rep.rhs)))
    return out


def _stability_checks() -> list[Check]:
    g = "stability"
    S, SS, I = Status.STABLE, Status.SEMISTABLE, Status.INCONCLUSIVE
    out = [
        Check(g, "Q3 conormal r=0", S, check_conormal_stability(Q3, 0).status),
        Check(g, "Q3 conormal r=1", SS, check_conormal_stability(Q3, 1).status),
        Check(g, "P3 conormal r=0", S, check_conormal_stability(P3, 0).status),
        Check(g, "P3 conormal r=1", SS, check_conormal_stability(P3, 1).status),
        Check(g, "P3 conormal r=2", I, check_conormal_stability(P3, 2).status),
        Check(g, "Q3 Bogomolov bound r=0", Fraction(7, 2), bogomolov_max_curve_degree(Q3, 0)),
        Check(g, "Q3 Bogomolov bound r=1", 8, bogomolov_max_curve_degree(Q3, 1)),
    ]
    for X in (P3, Q3):
        out.append(Check(g, f"{X.name} generic normal sheaves r in [0,100]", True,
                         all(check_generic_normal_stability(X, r).status is S for r in range(101))))
    return out


def _spinor_checks(k_max: int) -> list[Check]:
    g = "spinor"
    out = []
    for t in range(-1, k_max + 1):
        fol = cq.spinor_foliation(t)
        out.append(Check(g, f"t={t} deg C [6t^2+18t+15]", cq.spinor_printed_degree(t), fol.curve.deg))
        out.append(Check(g, f"t={t} genus [10t^3+36t^2+43t+16]", cq.spinor_printed_genus(t), fol.curve.genus))
        out.append(Check(g, f"t={t} degree", 2 * t + 2, fol.r))
    out.append(Check(g, "5 h0(S(1)) - h0(S(2))", 4, cq.spinor_hom_count()))
    out.append(Check(g, "h0(S) = h1(S) = 0", (0, 0), (h_spinor(0, 0), h_spinor(1, 0))))
    return out


def _os_checks(k_max: int) -> list[Check]:
    g = "os_bundle"
    out = []
    for t in range(1, k_max + 1):
        fol = cq.os_bundle_foliation(t)
        out.append(Check(g, f"t={t} deg C [22t^2-48t+24]", fol.printed_deg, fol.curve.deg, "c"))
        out.append(Check(g, f"t={t} genus [58t^3-219t^2+262t-97]", fol.printed_genus, fol.curve.genus, "c"))
    for e in cq.os_bundle_euler_characteristics():
        out.append(Check(g, e.name, e.printed, e.derived, None if e.name in ("chi(E)", "chi(E(1))") else "e"))
    y = cq.zero_locus_curve(Q3, cq.OS_BUNDLE)
    out.append(Check(g, "double line Y: (deg, p_a)", (2, -2), (y.deg, y.genus)))
    return out


def _classification_checks() -> list[Check]:
    g = "classification"
    c0 = cq.classify_degree0()
    out = [
        Check(g, "degree 0: c1(S(-1))", -3, c0.conormal_twisted.chern_numbers[0]),
        Check(g, "degree 0: curve (deg, chi)", (3, 2), (c0.curve.deg, c0.curve.chi)),
        Check(g, "degree 0: Bogomolov bound", Fraction(7, 2), cq.degree0_enumeration().bogomolov_bound),
    ]
    expected = [(2, 6, 1, ()), (2, 6, 1, (1, 0)), (0, 8, -2, ())]
    for case, (c2, deg, chi, split) in zip(cq.classify_degree1(), expected):
        got = (case.conormal_twisted.chern_numbers[1], case.curve.deg, case.curve.chi, case.component_chi)
        out.append(Check(g, f"{case.label}: (c2(E), deg, chi, split)", (c2, deg, chi, split), got))
        out.append(Check(g, f"{case.label}: chi = 10 - 3 deg/2", True, cq.degree1_relation_holds(case)))
    out.append(Check(g, "degree 1, E trivial: genus", 3, cq.classify_degree1()[2].curve.genus))
    accepted = [s.deg for s in cq.degree1_enumeration().steps if s.accepted]
    out.append(Check(g, "degree 1: surviving degrees", [6, 8], accepted))
    chi2 = [s.chi for s in cq.degree1_enumeration().steps if s.deg == 2][0]
    out.append(Check(g, "degree 1: deg C = 2 gives chi = 7", 7, chi2))
    return out


@dataclass
class GoldenResult:
    k_max: int
    checks: list[Check]
    adjudications: dict[str, list[Adjudication]]
    observed: list[str] = field(default_factory=list)
    anomalies: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 2 if self.anomalies else 0

    @property
    def discrepancies(self) -> list[Discrepancy]:
        return [DOCUMENTED[key].as_discrepancy() for key in self.observed]


def run_golden(k_max: Optional[int] = None) -> GoldenResult:
    k_max = sweep_max() if k_max is None else k_max
    checks = (
        _constant_checks()
        + _moduli_checks(k_max)
        + _foliation_checks()
        + _stability_checks()
        + _spinor_checks(k_max)
        + _os_checks(k_max)
        + _classification_checks()
    )
    anomalies = []
    observed = set()
    for c in checks:
        if c.ok:
            continue
        if c.documented in DOCUMENTED:
            observed.add(c.documented)
        else:
            anomalies.append(f"{c.group}: {c.name}: printed {c.printed}, derived {c.derived}")
    adjudications = {}
    for key in sorted(DOCUMENTED):
        if key not in observed:
            anomalies.append(f"documented discrepancy {key} was not reproduced")
            continue
        adjudications[key] = DOCUMENTED[key].adjudicate(k_max)
        for a in adjudications[key]:
            if not a.ok:
                anomalies.append(f"adjudication of {key} failed: {a.statement}")
    return GoldenResult(k_max, checks, adjudications, sorted(observed), anomalies)


def golden_document(result: GoldenResult) -> ReportDocument:
    groups: dict[str, dict] = {}
    for c in result.checks:
        entry = groups.setdefault(c.group, {"checks": 0, "matched": 0, "documented_mismatches": 0})
        entry["checks"] += 1
        if c.ok:
            entry["matched"] += 1
        elif c.documented:
            entry["documented_mismatches"] += 1
    mismatches = [
        {"group": c.group, "name": c.name, "printed": _plain(c.printed), "derived": _plain(c.derived),
         "discrepancy": c.documented}
        for c in result.checks if not c.ok
    ]
    adjudications = {
        key: [{"statement": a.statement, "derived_consistent": a.derived_consistent,
               "printed_consistent": a.printed_consistent} for a in items]
        for key, items in result.adjudications.items()
    }
    results = {
        "groups": groups,
        "mismatches": mismatches,
        "adjudications": adjudications,
        "undocumented": result.anomalies,
        "status": "ok" if not result.anomalies else "undocumented mismatch",
    }
    return ReportDocument("verify-paper", {"k_max": result.k_max}, results, result.discrepancies)


def _plain(value):
    if isinstance(value, Status):
        return value.value
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    return value
