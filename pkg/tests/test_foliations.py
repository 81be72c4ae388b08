import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from foliatlas.errors import CriterionNotApplicable, InvalidFoliation, NonIntegralError
from foliatlas.foliations import (
    SOLVE,
    CurveData,
    FoliationSpec,
    ci_foliation_degree,
    connected_components_count,
    conormal_c3_from_curves,
    conormal_chern,
    conormal_chern_whitney,
    conormal_vanishing,
    curve_from_conormal,
    mu_invariant,
    normal_chern,
    normal_sheaf_cohomology,
    singular_points_count,
    verify_c3_identity,
)
from foliatlas.ring import L
from foliatlas.varieties import P3, Q3, h_tangent

h, m = sympy.symbols("h m")


def _c3_polynomial(total):
    # c3 of TX(m) by the splitting principle, H^3 integrating to nu
    return sympy.expand(sympy.series(total, h, 0, 4).removeO().coeff(h, 3))


C3_OF_TWIST = {
    "P3": _c3_polynomial((1 + (1 + m) * h) ** 4 / (1 + m * h)),
    "Q3": 2 * _c3_polynomial((1 + (1 + m) * h) ** 5 / ((1 + (2 + m) * h) * (1 + m * h))),
}


def sympy_singular_length(X, r):
    return int(C3_OF_TWIST[X.builtin_key].subs(m, r + X.tau))


@pytest.mark.parametrize("r", range(0, 25))
def test_singular_length_matches_splitting_principle(r):
    assert singular_points_count(P3, r) == sympy_singular_length(P3, r)
    assert singular_points_count(Q3, r) == sympy_singular_length(Q3, r)


@pytest.mark.parametrize("k", range(0, 8))
def test_singular_length_closed_forms(k):
    assert singular_points_count(P3, 2 * k + 1) == 8 * k**3 + 16 * k**2 + 12 * k + 4
    r = k
    assert singular_points_count(Q3, r) == 2 * (r**3 + 3 * r**2 + 4 * r + 2)
    assert singular_points_count(P3, 1) == 4


def test_mu_invariant_examples():
    assert mu_invariant(Q3, 2, CurveData(15, -15)) == 60
    assert mu_invariant(P3, 1, CurveData(1, 1)) == 2
    assert mu_invariant(Q3, 1, CurveData(2, -3)) == 0


def test_curve_data():
    assert CurveData(15, -15).genus == 16
    assert CurveData(3, 2).cls == 3 * L
    with pytest.raises(InvalidFoliation):
        CurveData(0, 1)


def test_spinor_t0_identity():
    spec = FoliationSpec.build(Q3, 2, 0, [(15, -15)])
    report = verify_c3_identity(spec)
    assert (report.lhs, report.rhs, report.holds) == (60, 60, True)
    assert conormal_chern(spec).chern_numbers == (-5, 13, 0)


def test_generic_identity_and_perturbation():
    for X in (P3, Q3):
        for r in range(0, 12):
            spec = FoliationSpec.generic(X, r)
            assert verify_c3_identity(spec).holds
            bumped = FoliationSpec(X, r, spec.h0U + 1, ())
            assert not verify_c3_identity(bumped).holds


def test_build_solve_modes():
    assert FoliationSpec.build(Q3, 2, 0, [(15, SOLVE)]).curve_chi == -15
    assert FoliationSpec.build(P3, 1, SOLVE).h0U == 4
    assert FoliationSpec.build(Q3, 0, SOLVE, [(3, 2)]).h0U == 0
    with pytest.raises(InvalidFoliation):
        FoliationSpec.build(Q3, 2, SOLVE, [(15, SOLVE)])
    with pytest.raises(InvalidFoliation):
        FoliationSpec.build(Q3, 2, 1, [(15, -15)])
    with pytest.raises(NonIntegralError):
        FoliationSpec.build(Q3, 1, 0, [(1, SOLVE)])


def test_from_dict():
    spec = FoliationSpec.from_dict({"variety": "q3", "degree": 2, "curves": [{"deg": 15, "chi": -15}]})
    assert spec.is_lci and spec.curve_degree == 15


def test_conormal_examples():
    spec0 = FoliationSpec.build(Q3, 0, 0, [(3, 2)])
    assert conormal_chern(spec0).chern_numbers[:2] == (-3, 5)
    spec1 = FoliationSpec.build(Q3, 1, 0, [(6, 1)])
    assert conormal_chern(spec1).chern_numbers[:2] == (-4, 10)


def test_normal_chern_normalized_triples():
    from foliatlas.chern import twist
    for k in range(0, 6):
        odd = twist(normal_chern(P3, 2 * k + 1), -2 - k, 1)
        assert odd.chern_numbers == (0, 3 * k**2 + 4 * k + 2, 8 * k**3 + 16 * k**2 + 12 * k + 4)
        even = twist(normal_chern(P3, 2 * k), -2 - k, 1)
        assert even.chern_numbers == (-1, 3 * k**2 + k + 1, 8 * k**3 + 4 * k**2 + 2 * k + 1)
        q = twist(normal_chern(Q3, 2 * k + 1), -2 - k, 2)
        assert q.chern_numbers[:2] == (0, 2 * (3 * k**2 + 6 * k + 4))


def test_curve_from_conormal_examples():
    from foliatlas.chern import twist
    from foliatlas.varieties import SPINOR
    for t in range(-1, 6):
        c2 = twist(SPINOR, -2 - t, 2).c2
        curve = curve_from_conormal(Q3, 2 * t + 2, c2)
        assert curve.deg == 6 * t**2 + 18 * t + 15
        assert curve.chi == 1 - (10 * t**3 + 36 * t**2 + 43 * t + 16)
    assert curve_from_conormal(Q3, 1, 10 * L).chi == 1
    assert curve_from_conormal(Q3, 0, 5 * L).chi == 2
    with pytest.raises(NonIntegralError):
        curve_from_conormal(Q3, 1, 15 * L)


def test_connected_components():
    assert connected_components_count(P3, 3, 0, 0) == 1
    assert connected_components_count(P3, 3, 5, 5) == 1
    with pytest.raises(CriterionNotApplicable):
        connected_components_count(Q3, 1, 0, 0)
    with pytest.raises(InvalidFoliation):
        connected_components_count(P3, 3, 0, 2)


def test_complete_intersection_degree():
    assert ci_foliation_degree(P3, 0, 1) == 2


def test_normal_sheaf_cohomology_euler_characteristic():
    from foliatlas.chern import euler_characteristic, twist
    for X in (P3, Q3):
        for r in range(0, 5):
            for t in range(0, 5):
                if h_tangent(X, 3, t) != 0:
                    continue
                hs = [normal_sheaf_cohomology(X, r, i, t) for i in range(4)]
                assert hs[0] - hs[1] + hs[2] - hs[3] == euler_characteristic(twist(normal_chern(X, r), t, X.nu), X)


def test_conormal_vanishing_ranges():
    v = conormal_vanishing(P3, 3)
    assert (v.h0_zero_for_t_at_most, v.h1_zero_for_t_at_most) == (1, -2)
    assert (v.h2_zero_for_t_above, v.h3_zero_for_t_at_least) == (-7, 1)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([P3, Q3]), st.integers(0, 8),
       st.lists(st.tuples(st.integers(1, 20), st.integers(-30, 5)), min_size=1, max_size=3))
def test_solved_specs_balance_and_whitney_agree(X, r, curves):
    try:
        spec = FoliationSpec.build(X, r, SOLVE, curves)
    except InvalidFoliation:
        assume(False)
    assert verify_c3_identity(spec).holds
    assert conormal_c3_from_curves(spec) == conormal_chern(spec).c3
    assert conormal_chern_whitney(spec) == conormal_chern(spec)
