"""Invariants of foliations by curves ``0 -> O(-r-tau) -> TX -> N -> 0``.

Throughout, ``m = r + tau`` is the twist of the tangent bundle carrying the
defining vector field.  The singular scheme is recorded numerically: the
length ``h0U`` of its zero-dimensional part and ``(deg, chi)`` for each
connected component of its one-dimensional part.  Everything rests on the
balance

    integral c3(TX(m)) = h0U + sum_j (3*m*deg(C_j) + 2*chi(O_C_j))
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .chern import SheafClass, line_bundle, twist, whitney_quotient
from .errors import (
    CriterionNotApplicable,
    InconsistentModelError,
    InvalidFoliation,
    NonIntegralError,
    RangeNotCovered,
)
from .ring import H, L, P, CohClass, integrate, mul, power
from .varieties import ThreefoldModel, h_line, h_tangent, resolve_variety

SOLVE = "solve"


@dataclass(frozen=True)
class CurveData:
    deg: int
    chi: int

    def __post_init__(self):
        if int(self.deg) != self.deg or self.deg < 1:
            raise InvalidFoliation(f"curve degree must be a positive integer, got {self.deg}")
        if int(self.chi) != self.chi:
            raise NonIntegralError(f"chi(O_C) must be an integer, got {self.chi}")
        object.__setattr__(self, "deg", int(self.deg))
        object.__setattr__(self, "chi", int(self.chi))

    @property
    def genus(self) -> int:
        return 1 - self.chi

    @property
    def cls(self) -> CohClass:
        return L * self.deg


def twist_offset(X: ThreefoldModel, r: int) -> int:
    return r + X.tau


def singular_points_count(X: ThreefoldModel, r: int) -> int:
    """Length of the singular scheme of a generic degree ``r`` foliation."""
    value = integrate(twist(X.tangent, twist_offset(X, r), X.nu).c3)
    if value < 0 or value.denominator != 1:
        raise InconsistentModelError(f"integral c3(TX(r+tau)) = {value} is not a length")
    return int(value)


def mu_invariant(X: ThreefoldModel, r: int, curve: CurveData) -> int:
    return 3 * twist_offset(X, r) * curve.deg + 2 * curve.chi


@dataclass(frozen=True)
class FoliationSpec:
    """Numerical description of a foliation; see :meth:`build` for solve mode."""

    X: ThreefoldModel
    r: int
    h0U: int
    curves: tuple[CurveData, ...] = ()

    def __post_init__(self):
        if self.r < 0:
            raise InvalidFoliation(f"degree must be nonnegative, got {self.r}")
        if self.h0U < 0:
            raise InvalidFoliation(f"isolated length must be nonnegative, got {self.h0U}")
        object.__setattr__(self, "curves", tuple(self.curves))

    @property
    def m(self) -> int:
        return twist_offset(self.X, self.r)

    @property
    def curve_degree(self) -> int:
        return sum(c.deg for c in self.curves)

    @property
    def curve_chi(self) -> int:
        return sum(c.chi for c in self.curves)

    @property
    def is_generic(self) -> bool:
        return not self.curves

    @property
    def is_lci(self) -> bool:
        return self.h0U == 0

    @classmethod
    def generic(cls, X: ThreefoldModel, r: int) -> "FoliationSpec":
        return cls(X, r, singular_points_count(X, r))

    @classmethod
    def build(cls, X: ThreefoldModel, r: int, h0U=0,
              curves: Iterable = (), check: bool = True) -> "FoliationSpec":
        """Construct a spec, solving for at most one unknown.

        ``h0U`` or the ``chi`` of one curve may be :data:`SOLVE` (or ``None``);
        the missing value is then fixed by the c3 balance.  With ``check`` the
        balance is enforced.
        """
        raw = [c if isinstance(c, CurveData) else tuple(c) for c in curves]
        unknowns = [i for i, c in enumerate(raw) if not isinstance(c, CurveData) and c[1] in (None, SOLVE)]
        solve_points = h0U in (None, SOLVE)
        if len(unknowns) + solve_points > 1:
            raise InvalidFoliation("at most one value can be solved for")
        lhs = singular_points_count(X, r)
        m = twist_offset(X, r)
        if unknowns:
            idx = unknowns[0]
            known = [CurveData(*c) if not isinstance(c, CurveData) else c
                     for i, c in enumerate(raw) if i != idx]
            deg = raw[idx][0]
            rest = lhs - h0U - sum(mu_invariant(X, r, c) for c in known) - 3 * m * deg
            if rest % 2:
                raise NonIntegralError(f"solved chi = {Fraction(rest, 2)} is not an integer")
            raw[idx] = (deg, rest // 2)
        parsed = tuple(c if isinstance(c, CurveData) else CurveData(*c) for c in raw)
        if solve_points:
            h0U = lhs - sum(mu_invariant(X, r, c) for c in parsed)
            if h0U < 0:
                raise InvalidFoliation(f"solved isolated length {h0U} is negative")
        spec = cls(X, r, int(h0U), parsed)
        if check and not verify_c3_identity(spec).holds:
            raise InvalidFoliation("singular scheme data violates the c3 balance")
        return spec

    @classmethod
    def from_dict(cls, doc: dict, check: bool = True) -> "FoliationSpec":
        """Parse ``{variety, degree, isolated_length, curves: [{deg, chi}]}``."""
        X = doc["variety"]
        if not isinstance(X, ThreefoldModel):
            X = resolve_variety(str(X))
        curves = [(c["deg"], c.get("chi", SOLVE)) for c in doc.get("curves", [])]
        return cls.build(X, int(doc["degree"]), doc.get("isolated_length", 0), curves, check=check)


def normal_chern(X: ThreefoldModel, r: int) -> SheafClass:
    return whitney_quotient(X.tangent, line_bundle(-twist_offset(X, r)), X.nu)


def conormal_c1_c2(X: ThreefoldModel, m: int) -> tuple[CohClass, CohClass]:
    om = X.cotangent
    c1 = om.c1 - H * m
    c2 = om.c2 - mul(om.c1, H, X.nu) * m + power(H, 2, X.nu) * (m * m)
    return c1, c2


def conormal_chern(spec: FoliationSpec) -> SheafClass:
    """Chern classes of the conormal sheaf; ``c3 = h0U * p``."""
    c1, c2 = conormal_c1_c2(spec.X, spec.m)
    c2 = c2 - L * spec.curve_degree
    return SheafClass(2, CohClass(1) + c1 + c2 + P * spec.h0U)


def conormal_c3_from_curves(spec: FoliationSpec) -> CohClass:
    """``-c3(Omega(-m)) - 3m[C]H - (2chi/nu)H^3``, the curve-side expression for c3."""
    X, m = spec.X, spec.m
    om_twist = twist(X.cotangent, -m, X.nu)
    h3 = power(H, 3, X.nu)
    return (
        -om_twist.c3
        - mul(L * spec.curve_degree, H, X.nu) * (3 * m)
        - h3 * Fraction(2 * spec.curve_chi, X.nu)
    )


def ideal_sheaf_chern(spec: FoliationSpec) -> SheafClass:
    """Chern data of ``I_Z(m)`` for the singular scheme ``Z``."""
    X = spec.X
    C = L * spec.curve_degree
    c1_tangent = X.tangent.c1
    # c3(I_Z) = -(2 chi + 2 h0U) p + [C].c1(TX)
    c3 = P * (-2 * (spec.curve_chi + spec.h0U)) + mul(C, c1_tangent, X.nu)
    ideal = SheafClass(1, CohClass(1) + C + c3)
    return twist(ideal, spec.m, X.nu)


def conormal_chern_whitney(spec: FoliationSpec) -> SheafClass:
    """Conormal Chern data from ``c(Omega) = c(N^v) c(I_Z(m))``."""
    return whitney_quotient(spec.X.cotangent, ideal_sheaf_chern(spec), spec.X.nu)


@dataclass(frozen=True)
class C3IdentityReport:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def verify_c3_identity(spec: FoliationSpec) -> C3IdentityReport:
    lhs = singular_points_count(spec.X, spec.r)
    rhs = spec.h0U + sum(mu_invariant(spec.X, spec.r, c) for c in spec.curves)
    return C3IdentityReport(lhs, rhs)


def curve_from_conormal(X: ThreefoldModel, r: int, c2_conormal: CohClass) -> CurveData:
    """Degree and ``chi`` of the singular curve of an LCI foliation."""
    m = twist_offset(X, r)
    om = X.cotangent
    deg = integrate(mul(om.c2 - c2_conormal, H, X.nu)) - m * X.cX + m * m * X.nu
    if deg.denominator != 1:
        raise NonIntegralError(f"curve degree {deg} is not an integer")
    c3_int = integrate(twist(om, -m, X.nu).c3)
    chi = -(c3_int + 3 * m * deg) / 2
    if chi.denominator != 1:
        raise NonIntegralError(f"chi(O_C) = {chi} is not an integer")
    return CurveData(int(deg), int(chi))


def connectedness_applicable(X: ThreefoldModel, r: int) -> bool:
    iota, tau = X.iota, X.tau
    if iota == 4:
        return r != 1
    if iota == 3:
        return r not in (0, 1)
    if iota == 2:
        return r < -4 - tau
    if iota == 1:
        return r < -3 - tau
    return False


def connected_components_count(X: ThreefoldModel, r: int,
                               h2_conormal_twisted: int, c3_conormal_integral: int) -> int:
    """``h0(O_C) = h2(N^v(-r-tau)) + 1 - integral c3(N^v)``."""
    if not connectedness_applicable(X, r):
        raise CriterionNotApplicable(
            f"connectedness count not covered for index {X.iota} and degree {r}"
        )
    count = h2_conormal_twisted + 1 - c3_conormal_integral
    if count < 1:
        raise InvalidFoliation(f"h0(O_C) = {count} < 1 for a nonempty curve")
    return count


def ci_foliation_degree(X: ThreefoldModel, r1: int, r2: int) -> int:
    """Degree of ``O(-r1-rho) + O(-r2-rho) -> Omega -> I_C(r+tau)``."""
    value = X.cX / X.nu + r1 + r2 + 2 * X.rho - X.tau
    if value.denominator != 1:
        raise NonIntegralError(f"degree {value} is not an integer")
    return int(value)


def normal_sheaf_cohomology(X: ThreefoldModel, r: int, i: int, t: int) -> int:
    """``h^i(N(t))`` for the normal sheaf of a generic degree ``r`` foliation.

    Read off the twisted defining sequence.  ``h^2`` and ``h^3`` are only
    determined when ``h^3(TX(t)) = 0``; elsewhere RangeNotCovered is raised.
    """
    if not X.h1_line_vanishing:
        raise RangeNotCovered("needs h^1(O_X(t)) = 0 for all t")
    m = twist_offset(X, r)
    if i == 0:
        return h_tangent(X, 0, t) - h_line(X, 0, t - m)
    if i == 1:
        return h_tangent(X, 1, t)
    if i not in (2, 3):
        raise RangeNotCovered(f"cohomological degree {i} outside 0..3")
    if h_tangent(X, 3, t):
        raise RangeNotCovered(f"h^{i}(N({t})) depends on the vector field (h^3(TX({t})) != 0)")
    if i == 3:
        return 0
    return h_tangent(X, 2, t) + h_line(X, 3, t - m)


@dataclass(frozen=True)
class ConormalVanishing:
    """Twists with guaranteed vanishing of ``h^i(N^v(t))`` for any foliation."""

    h0_zero_for_t_at_most: int
    h1_zero_for_t_at_most: int
    h2_zero_for_t_above: int
    h3_zero_for_t_at_least: int

    def forces_zero(self, i: int, t: int) -> bool:
        if i == 0:
            return t <= self.h0_zero_for_t_at_most
        if i == 1:
            return t <= self.h1_zero_for_t_at_most
        if i == 2:
            return t > self.h2_zero_for_t_above
        if i == 3:
            return t >= self.h3_zero_for_t_at_least
        raise RangeNotCovered(f"cohomological degree {i} outside 0..3")


def conormal_vanishing(X: ThreefoldModel, r: int) -> ConormalVanishing:
    m = twist_offset(X, r)
    return ConormalVanishing(1, -m, -2 * X.iota + 1, m - 1)


def curves_total(curves: Sequence[CurveData]) -> tuple[int, int]:
    return sum(c.deg for c in curves), sum(c.chi for c in curves)
