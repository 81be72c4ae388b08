"""Exact Chern-class and moduli calculus for foliations by curves on P3 and Q3."""

from .chern import SheafClass, euler_characteristic, ext_euler_characteristic, hrr
from .errors import (
    CriterionNotApplicable,
    FoliatlasError,
    InconsistentModelError,
    InvalidFoliation,
    NonIntegralError,
    RangeNotCovered,
    RankError,
    UnsupportedModel,
)
from .foliations import (
    SOLVE,
    CurveData,
    FoliationSpec,
    conormal_chern,
    mu_invariant,
    normal_chern,
    singular_points_count,
    verify_c3_identity,
)
from .moduli import FamilyRecord, Parity, families, family, verify_polynomial_formulas
from .report import ReportDocument
from .reproduce import run_golden
from .ring import CohClass
from .stability import Status, StabilityVerdict, check_conormal_stability, check_generic_normal_stability
from .varieties import P3, Q3, ThreefoldModel, resolve_variety

__version__ = "0.1.0"

__all__ = [
    "CohClass", "SheafClass", "euler_characteristic", "ext_euler_characteristic", "hrr",
    "FoliatlasError", "RankError", "NonIntegralError", "InconsistentModelError",
    "RangeNotCovered", "UnsupportedModel", "CriterionNotApplicable", "InvalidFoliation",
    "P3", "Q3", "ThreefoldModel", "resolve_variety",
    "SOLVE", "CurveData", "FoliationSpec", "conormal_chern", "normal_chern",
    "mu_invariant", "singular_points_count", "verify_c3_identity",
    "Status", "StabilityVerdict", "check_conormal_stability", "check_generic_normal_stability",
    "FamilyRecord", "Parity", "families", "family", "verify_polynomial_formulas",
    "ReportDocument", "run_golden",
]
