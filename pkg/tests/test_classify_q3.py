import json
from fractions import Fraction

import pytest

from foliatlas.classify_q3 import (
    OS_BUNDLE,
    TRIVIAL_RANK2,
    classify_degree0,
    classify_degree1,
    degree0_enumeration,
    degree1_enumeration,
    degree1_relation_holds,
    os_bundle_euler_characteristics,
    os_bundle_foliation,
    os_printed_degree,
    report_json,
    report_markdown,
    spinor_foliation,
    spinor_hom_count,
    zero_locus_curve,
)
from foliatlas.errors import InvalidFoliation
from foliatlas.chern import twist
from foliatlas.foliations import CurveData, verify_c3_identity
from foliatlas.varieties import Q3, SPINOR


@pytest.mark.parametrize("t", range(-1, 11))
def test_spinor_family(t):
    fol = spinor_foliation(t)
    assert fol.r == 2 * t + 2
    assert fol.curve.deg == 6 * t**2 + 18 * t + 15
    assert fol.curve.genus == 10 * t**3 + 36 * t**2 + 43 * t + 16


def test_spinor_edge_cases():
    low = spinor_foliation(-1)
    assert (low.r, low.curve.deg, low.curve.chi) == (0, 3, 2)
    with pytest.raises(InvalidFoliation):
        spinor_foliation(-2)
    assert spinor_hom_count() == 4


def test_os_bundle_family():
    one = os_bundle_foliation(1)
    assert (one.curve.deg, one.curve.genus) == (24, 41)
    assert one.discrepancy_flag and os_printed_degree(1) == -2
    assert os_bundle_foliation(2).curve.deg == 54
    for t in range(1, 8):
        fol = os_bundle_foliation(t)
        assert (fol.curve.deg, fol.curve.genus) == (6 * t**2 + 12 * t + 6, 10 * t**3 + 21 * t**2 + 10 * t)
    with pytest.raises(InvalidFoliation):
        os_bundle_foliation(0)


def test_os_bundle_euler_characteristics():
    checks = {c.name: (c.printed, c.derived) for c in os_bundle_euler_characteristics()}
    assert checks["chi(E)"] == (-1, -1)
    assert checks["chi(E(1))"] == (5, 5)
    assert checks["chi(E(2))"][1] == 21


def test_zero_loci():
    # c1 = 0, c2 = 2l: two skew lines or a double line, p_a = -2
    assert zero_locus_curve(Q3, OS_BUNDLE) == CurveData(2, 3)
    assert zero_locus_curve(Q3, twist(SPINOR, 1, 2)) == CurveData(1, 1)
    assert TRIVIAL_RANK2.chern_numbers == (0, 0, 0)


def test_degree0():
    case = classify_degree0()
    assert case.conormal_twisted.chern_numbers[:2] == (-3, 5)
    assert (case.curve.deg, case.curve.chi) == (3, 2)
    assert degree0_enumeration().bogomolov_bound == Fraction(7, 2)
    assert verify_c3_identity(case.spec()).holds


def test_degree1():
    cases = classify_degree1()
    summary = [(c.conormal_twisted.chern_numbers[1], c.curve.deg, c.curve.chi, c.component_chi) for c in cases]
    assert summary == [(2, 6, 1, ()), (2, 6, 1, (1, 0)), (0, 8, -2, ())]
    assert cases[2].curve.genus == 3
    assert all(degree1_relation_holds(c) for c in cases)
    assert all(verify_c3_identity(c.spec()).holds for c in cases)
    enum = degree1_enumeration()
    assert enum.bogomolov_bound == 8
    assert [s.deg for s in enum.steps if s.accepted] == [6, 8]
    two = next(s for s in enum.steps if s.deg == 2)
    assert two.chi == 7 and not two.accepted


def test_reports_are_deterministic():
    assert report_json() == report_json()
    doc = json.loads(report_json())
    assert doc["degree0"]["enumeration"]["bogomolov_bound"] == "7/2"
    assert "Degree 1" in report_markdown()
