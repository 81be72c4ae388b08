"""Numerical sufficient criteria for slope stability of normal and conormal sheaves.

The predicates only compare model constants.  Failing a sufficient condition
yields ``Inconclusive``, never ``Unstable``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .chern import SheafClass, twist
from .errors import InvalidFoliation, RankError
from .foliations import conormal_c1_c2, twist_offset
from .ring import CohClass, H, integrate, mul, power
from .varieties import ThreefoldModel


class Status(str, enum.Enum):
    STABLE = "Stable"
    SEMISTABLE = "Semistable"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class StabilityVerdict:
    status: Status
    criterion: str
    lhs: Fraction
    rhs: Fraction
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "status": self.status.value,
            "criterion": self.criterion,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "note": self.note,
        }


GENERIC_NORMAL = "generic normal sheaf: r > cX/nu - 3 tau"
GENERIC_NORMAL_TX = "generic normal sheaf: TX is mu-stable"
CONORMAL = "conormal sheaf: r < 2 rho - tau + cX/nu"

P3_DEGREE2_NOTE = (
    "the bound is sharp on P3: the complete intersection foliation "
    "O(-2)+O(-3) -> Omega -> I_Z(1) has degree 2 and a conormal sheaf "
    "that is not mu-semistable"
)


def slope(F: SheafClass, X: ThreefoldModel) -> Fraction:
    if F.rank == 0:
        raise RankError("slope is undefined for rank 0")
    return integrate(mul(F.c1, power(H, 2, X.nu), X.nu)) / F.rank


def generic_normal_threshold(X: ThreefoldModel) -> Fraction:
    return X.cX / X.nu - 3 * X.tau


def conormal_threshold(X: ThreefoldModel) -> Fraction:
    return 2 * X.rho - X.tau + X.cX / X.nu


def _compare(r: int, threshold: Fraction, criterion: str, strict_above: bool) -> StabilityVerdict:
    r = Fraction(r)
    if r == threshold:
        status = Status.SEMISTABLE
    elif (r > threshold) == strict_above:
        status = Status.STABLE
    else:
        status = Status.INCONCLUSIVE
    return StabilityVerdict(status, criterion, r, threshold)


def check_generic_normal_stability(X: ThreefoldModel, r: int) -> StabilityVerdict:
    if r < 0:
        raise InvalidFoliation(f"degree must be nonnegative, got {r}")
    threshold = generic_normal_threshold(X)
    if not X.h1_line_vanishing:
        return StabilityVerdict(
            Status.INCONCLUSIVE, GENERIC_NORMAL, Fraction(r), threshold,
            "h^1(O_X(t)) = 0 for all t is not asserted for this model",
        )
    if X.tx_stable:
        return StabilityVerdict(Status.STABLE, GENERIC_NORMAL_TX, Fraction(r), threshold)
    return _compare(r, threshold, GENERIC_NORMAL, strict_above=True)


def check_conormal_stability(X: ThreefoldModel, r: int) -> StabilityVerdict:
    if r < 0:
        raise InvalidFoliation(f"degree must be nonnegative, got {r}")
    verdict = _compare(r, conormal_threshold(X), CONORMAL, strict_above=False)
    if verdict.status is Status.INCONCLUSIVE and X.builtin_key == "P3" and r == 2:
        return StabilityVerdict(verdict.status, verdict.criterion, verdict.lhs, verdict.rhs, P3_DEGREE2_NOTE)
    return verdict


def bogomolov_max_curve_degree(X: ThreefoldModel, r: int) -> Fraction:
    """Largest ``deg C`` allowed by ``integral (4 c2 - c1^2) H >= 0`` for the conormal sheaf."""
    c1, c2 = conormal_c1_c2(X, twist_offset(X, r))
    c2_h = integrate(mul(c2, H, X.nu))
    c1sq_h = integrate(mul(mul(c1, c1, X.nu), H, X.nu))
    return c2_h - c1sq_h / 4


def existence_triple(X: ThreefoldModel, r: int) -> SheafClass:
    """Chern data of a mu-stable rank 2 reflexive sheaf guaranteed for ``r`` above the normal threshold."""
    if not r > generic_normal_threshold(X):
        raise InvalidFoliation(
            f"degree {r} must exceed cX/nu - 3 tau = {generic_normal_threshold(X)}"
        )
    m = twist_offset(X, r)
    c1, c2 = conormal_c1_c2(X, m)
    c3 = -twist(X.cotangent, -m, X.nu).c3
    return SheafClass(2, CohClass(1) + c1 + c2 + c3)
