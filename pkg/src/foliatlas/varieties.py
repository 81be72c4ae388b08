"""Threefold models and exact cohomology tables.

Two built-in models are provided, projective space ``P3`` and the smooth
quadric ``Q3`` in ``P4``.  Arbitrary Picard-rank-1 threefolds can be described
numerically with :func:`custom`; such models support all Chern-level
computations but no cohomology tables.

The tables are closed forms obtained from the Euler sequences

    0 -> Omega_P3 -> O(-1)^4 -> O -> 0
    0 -> Omega_P4|Q -> O_Q(-1)^5 -> O_Q -> 0
    0 -> O_Q(-2) -> Omega_P4|Q -> Omega_Q -> 0

together with the vanishing of intermediate line bundle cohomology and the
isomorphism ``T_Q = Omega_Q(2)``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb
from pathlib import Path

from .chern import (
    SheafClass,
    ch_line,
    chern_character,
    euler_characteristic,
    line_bundle,
    todd_class,
    twist,
)
from .errors import InconsistentModelError, RangeNotCovered, RankError, UnsupportedModel
from .ring import H, CohClass, integrate, mul, power


@dataclass(frozen=True)
class ThreefoldModel:
    """Numerical data of a smooth projective threefold with Picard group ``Z*H``.

    ``tau`` and ``rho`` are the smallest twists for which ``T_X(t)`` resp.
    ``Omega_X(t)`` has a nonzero section; ``iota`` is the Fano index.  The two
    flags record hypotheses of the stability criteria that cannot be computed
    from Chern data: ``h1_line_vanishing`` (``h^1(O_X(t)) = 0`` for all ``t``)
    and ``tx_stable`` (``T_X`` is mu-stable).
    """

    name: str
    nu: int
    tau: int
    rho: int
    iota: int
    tangent: SheafClass
    tx_stable: bool = False
    h1_line_vanishing: bool = False
    builtin_key: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.nu < 1:
            raise InconsistentModelError(f"nu must be positive, got {self.nu}")
        if self.iota < 1:
            raise InconsistentModelError(f"Fano index must be positive, got {self.iota}")
        if self.tangent.rank != 3:
            raise InconsistentModelError("tangent class must have rank 3")
        if self.tangent.c1 != H * self.iota:
            raise InconsistentModelError(
                f"c1(TX) = {self.tangent.c1} is inconsistent with index {self.iota}"
            )

    @property
    def cX(self) -> Fraction:
        return -integrate(mul(self.tangent.c1, power(H, 2, self.nu), self.nu))

    @property
    def is_builtin(self) -> bool:
        return self.builtin_key is not None

    @cached_property
    def cotangent(self) -> SheafClass:
        a0, a1, a2, a3 = self.tangent.total.coefficients
        return SheafClass(3, CohClass(a0, -a1, a2, -a3))

    @cached_property
    def todd(self) -> CohClass:
        return todd_class(self.tangent, self.nu)

    def line(self, t: int) -> SheafClass:
        return line_bundle(t)


_P3 = ThreefoldModel(
    "P3", nu=1, tau=-1, rho=2, iota=4,
    tangent=SheafClass.from_coefficients(3, 4, 6, 4),
    tx_stable=True, h1_line_vanishing=True, builtin_key="P3",
)
_Q3 = ThreefoldModel(
    "Q3", nu=2, tau=0, rho=2, iota=3,
    tangent=SheafClass.from_coefficients(3, 3, 8, 4),
    tx_stable=True, h1_line_vanishing=True, builtin_key="Q3",
)
BUILTINS = {"P3": _P3, "Q3": _Q3}


def builtin(name: str) -> ThreefoldModel:
    try:
        return BUILTINS[name.upper()]
    except KeyError:
        raise ValueError(f"unknown built-in threefold {name!r}; choose P3 or Q3") from None


P3 = _P3
Q3 = _Q3


def custom(nu, tau, rho, iota, tangent: SheafClass, name: str = "custom",
           tx_stable: bool = False, h1_line_vanishing: bool = False) -> ThreefoldModel:
    return ThreefoldModel(name, nu, tau, rho, iota, tangent,
                          tx_stable=tx_stable, h1_line_vanishing=h1_line_vanishing)


def model_from_dict(doc: dict) -> ThreefoldModel:
    """Build a custom model from ``{name, nu, tau, rho, iota, tangent_chern}``.

    ``tangent_chern`` lists the coefficients of ``c1`` on ``H``, ``c2`` on
    ``l`` and ``c3`` on ``p``; entries may be integers or ``"a/b"`` strings.
    """
    missing = {"nu", "tau", "rho", "iota", "tangent_chern"} - doc.keys()
    if missing:
        raise ValueError(f"threefold document lacks {sorted(missing)}")
    chern = [Fraction(str(c)) for c in doc["tangent_chern"]]
    if len(chern) != 3:
        raise ValueError("tangent_chern must have three entries [c1_H, c2_l, c3_p]")
    return custom(
        int(doc["nu"]), int(doc["tau"]), int(doc["rho"]), int(doc["iota"]),
        SheafClass.from_coefficients(3, *chern),
        name=str(doc.get("name", "custom")),
        tx_stable=bool(doc.get("tx_stable", False)),
        h1_line_vanishing=bool(doc.get("h1_line_vanishing", False)),
    )


def load_model(path) -> ThreefoldModel:
    return model_from_dict(json.loads(Path(path).read_text()))


def resolve_variety(spec: str) -> ThreefoldModel:
    """``"p3"``, ``"q3"`` or the path of a JSON threefold document."""
    if spec.upper() in BUILTINS:
        return BUILTINS[spec.upper()]
    if not Path(spec).is_file():
        raise UnsupportedModel(f"unknown variety {spec!r}: expected p3, q3 or a JSON model file")
    return load_model(spec)


# --- cohomology tables --------------------------------------------------------

class SheafId(str, enum.Enum):
    O = "O"
    Omega1X = "Omega1X"
    TX = "TX"
    OmegaP4restQ = "OmegaP4restQ"
    TP4restQ = "TP4restQ"
    Spinor = "Spinor"


@dataclass(frozen=True)
class CohTableEntry:
    sheaf_id: SheafId
    twist: int
    h: tuple[int, int, int, int]

    @property
    def euler(self) -> int:
        return self.h[0] - self.h[1] + self.h[2] - self.h[3]


def _key(X: ThreefoldModel) -> str:
    if not X.is_builtin:
        raise UnsupportedModel(f"cohomology tables are unavailable for {X.name!r}")
    return X.builtin_key


def _check_degree(i: int):
    if i not in (0, 1, 2, 3):
        raise RangeNotCovered(f"cohomological degree {i} outside 0..3")


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _h0_line(key: str, t: int) -> int:
    if t < 0:
        return 0
    if key == "P3":
        return comb(t + 3, 3)
    return comb(t + 4, 4) - comb(t + 2, 4)


def _h3_line(key: str, t: int) -> int:
    iota = BUILTINS[key].iota
    return _h0_line(key, -t - iota)


def h_line(X: ThreefoldModel, i: int, t: int) -> int:
    """``h^i(O_X(t))``."""
    key = _key(X)
    _check_degree(i)
    if i == 0:
        return _h0_line(key, t)
    if i == 3:
        return _h3_line(key, t)
    return 0


@lru_cache(maxsize=None)
def _omega_restricted(i: int, t: int) -> int:
    # Omega_P4|Q(t) via 0 -> . -> O_Q(t-1)^5 -> O_Q(t) -> 0; H^0 multiplication is
    # onto for t != 0
    h1 = _delta(t, 0)
    if i == 0:
        return 5 * _h0_line("Q3", t - 1) - _h0_line("Q3", t) + h1
    if i == 1:
        return h1
    if i == 2:
        return 0
    return 5 * _h3_line("Q3", t - 1) - _h3_line("Q3", t)


@lru_cache(maxsize=None)
def _tangent_restricted(i: int, t: int) -> int:
    # T_P4|Q(t) via 0 -> O_Q(t) -> O_Q(t+1)^5 -> . -> 0
    h2 = _delta(t, -3)
    if i == 0:
        return 5 * _h0_line("Q3", t + 1) - _h0_line("Q3", t)
    if i == 1:
        return 0
    if i == 2:
        return h2
    return 5 * _h3_line("Q3", t + 1) - _h3_line("Q3", t) + h2


def h_restricted_cotangent_p4(i: int, t: int) -> int:
    """``h^i(Omega_P4|Q3 (t))``."""
    _check_degree(i)
    return _omega_restricted(i, t)


def h_restricted_tangent_p4(i: int, t: int) -> int:
    """``h^i(T_P4|Q3 (t))``."""
    _check_degree(i)
    return _tangent_restricted(i, t)


@lru_cache(maxsize=None)
def _cotangent(key: str, i: int, t: int) -> int:
    if key == "P3":
        h1 = _delta(t, 0)
        if i == 0:
            return 4 * _h0_line(key, t - 1) - _h0_line(key, t) + h1
        if i == 1:
            return h1
        if i == 2:
            return 0
        return 4 * _h3_line(key, t - 1) - _h3_line(key, t)
    # Q3: 0 -> O_Q(t-2) -> Omega_P4|Q(t) -> Omega_Q(t) -> 0
    if i == 0:
        return _omega_restricted(0, t) - _h0_line(key, t - 2)
    if i == 1:
        return _omega_restricted(1, t)
    h2 = _delta(t, -1)
    if i == 2:
        return h2
    return _omega_restricted(3, t) - _h3_line(key, t - 2) + h2


def h_cotangent(X: ThreefoldModel, i: int, t: int) -> int:
    """``h^i(Omega^1_X(t))``."""
    key = _key(X)
    _check_degree(i)
    return _cotangent(key, i, t)


@lru_cache(maxsize=None)
def _tangent(key: str, i: int, t: int) -> int:
    if key == "Q3":
        return _cotangent(key, i, t + 2)
    # P3: 0 -> O(t) -> O(t+1)^4 -> T(t) -> 0
    h2 = _delta(t, -4)
    if i == 0:
        return 4 * _h0_line(key, t + 1) - _h0_line(key, t)
    if i == 1:
        return 0
    if i == 2:
        return h2
    return 4 * _h3_line(key, t + 1) - _h3_line(key, t) + h2


def h_tangent(X: ThreefoldModel, i: int, t: int) -> int:
    """``h^i(T_X(t))``."""
    key = _key(X)
    _check_degree(i)
    return _tangent(key, i, t)


SPINOR = SheafClass.from_coefficients(2, -1, 1, 0)


@lru_cache(maxsize=None)
def _spinor_h0(t: int) -> int:
    if t <= 0:
        return 0
    return euler_characteristic(twist(SPINOR, t, 2), Q3)


def h_spinor(i: int, t: int) -> int:
    """``h^i(S(t))`` for the spinor bundle on Q3 (ACM, ``S^v = S(1)``)."""
    _check_degree(i)
    if i == 0:
        return _spinor_h0(t)
    if i == 3:
        return _spinor_h0(-t - 2)
    return 0


_Q3_ONLY = {SheafId.OmegaP4restQ, SheafId.TP4restQ, SheafId.Spinor}

# F^v = G(shift)
_DUALS = {
    SheafId.O: (SheafId.O, 0),
    SheafId.Omega1X: (SheafId.TX, 0),
    SheafId.TX: (SheafId.Omega1X, 0),
    SheafId.OmegaP4restQ: (SheafId.TP4restQ, 0),
    SheafId.TP4restQ: (SheafId.OmegaP4restQ, 0),
    SheafId.Spinor: (SheafId.Spinor, 1),
}


def dual_sheaf(sheaf: SheafId) -> tuple[SheafId, int]:
    return _DUALS[SheafId(sheaf)]


def h(X: ThreefoldModel, sheaf: SheafId, i: int, t: int) -> int:
    """Dispatch ``h^i(F(t))`` by sheaf identifier."""
    sheaf = SheafId(sheaf)
    key = _key(X)
    if sheaf in _Q3_ONLY and key != "Q3":
        raise UnsupportedModel(f"{sheaf.value} is only defined on Q3")
    if sheaf is SheafId.O:
        return h_line(X, i, t)
    if sheaf is SheafId.Omega1X:
        return h_cotangent(X, i, t)
    if sheaf is SheafId.TX:
        return h_tangent(X, i, t)
    if sheaf is SheafId.OmegaP4restQ:
        return h_restricted_cotangent_p4(i, t)
    if sheaf is SheafId.TP4restQ:
        return h_restricted_tangent_p4(i, t)
    return h_spinor(i, t)


def sheaf_class(X: ThreefoldModel, sheaf: SheafId) -> SheafClass:
    """Chern data of the untwisted sheaf; rank 4 sheaves raise RankError."""
    sheaf = SheafId(sheaf)
    if sheaf is SheafId.O:
        return line_bundle(0)
    if sheaf is SheafId.Omega1X:
        return X.cotangent
    if sheaf is SheafId.TX:
        return X.tangent
    if sheaf is SheafId.Spinor:
        return SPINOR
    raise RankError(f"{sheaf.value} has rank 4; use sheaf_ch instead")


def sheaf_ch(X: ThreefoldModel, sheaf: SheafId, t: int = 0) -> CohClass:
    """Chern character of ``F(t)``; covers the rank 4 restricted bundles."""
    sheaf = SheafId(sheaf)
    nu = X.nu
    if sheaf is SheafId.OmegaP4restQ:
        return ch_line(t - 1, nu) * 5 - ch_line(t, nu)
    if sheaf is SheafId.TP4restQ:
        return ch_line(t + 1, nu) * 5 - ch_line(t, nu)
    return chern_character(twist(sheaf_class(X, sheaf), t, nu), nu)


def cohomology_table(X: ThreefoldModel, sheaf: SheafId, twists) -> list[CohTableEntry]:
    return [
        CohTableEntry(SheafId(sheaf), t, tuple(h(X, sheaf, i, t) for i in range(4)))
        for t in twists
    ]


def serre_dual_h(X: ThreefoldModel, sheaf: SheafId, i: int, t: int) -> int:
    """``h^(3-i)(F^v(-t-iota))``, the Serre dual partner of ``h^i(F(t))``."""
    other, shift = dual_sheaf(sheaf)
    return h(X, other, 3 - i, shift - t - X.iota)
