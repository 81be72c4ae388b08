import csv
import io
import json
from fractions import Fraction

import pytest
import sympy

from foliatlas.errors import RangeNotCovered
from foliatlas.moduli import (
    PUBLISHED,
    Parity,
    families,
    family,
    p3_family,
    q3_family,
    q3_h3_aux,
    to_csv,
    to_json,
    to_markdown,
    verify_polynomial_formulas,
)
from foliatlas.varieties import h_restricted_cotangent_p4

k = sympy.Symbol("k")
DOCUMENTED_KEYS = {"p3.even.ext2", "q3.odd.c3", "q3.odd.k0_c3", "q3.even.c2_main", "q3.even.c3"}


def fitted(values: dict):
    return sympy.expand(sympy.interpolate(list(values.items()), k))


def test_p3_examples():
    odd = p3_family(1, "odd")
    assert (odd.chern_h, odd.dim_family, odd.ext2, odd.ext1) == ((0, 9, 40), 69, 0, 69)
    even = p3_family(0, "even")
    assert (even.chern_h, even.dim_family, even.ext2, even.ext1) == ((-1, 1, 1), 3, 0, 3)
    assert p3_family(2, "odd").ext2 == 15
    with pytest.raises(RangeNotCovered):
        p3_family(0, "odd")


def test_q3_examples():
    rec = q3_family(1, "odd")
    assert (rec.dim_family, rec.dim_D, rec.ext2, rec.ext1) == (163, 153, 10, 163)
    assert (q3_family(1, "even").dim_D, q3_family(1, "even").dim_family) == (80, 90)
    assert q3_family(0, "even").dim_family == 18
    k0 = q3_family(0, "odd")
    assert (k0.dim_family, k0.ext2, k0.ext1) == (45, 0, 45)


def test_derived_values_are_the_interpolated_cubics():
    ks = range(1, 11)
    dims = {j: p3_family(j, "odd").dim_family for j in ks}
    assert fitted(dims) == 4 * k**3 + 20 * k**2 + 31 * k + 14
    ext2 = {j: p3_family(j, "even").ext2 for j in range(0, 11)}
    assert fitted(ext2) == 4 * k**3 - 10 * k**2 + 6 * k
    q_dims = {j: q3_family(j, "odd").dim_family for j in ks}
    assert fitted(q_dims) == 8 * k**3 + 42 * k**2 + 69 * k + 44
    q_c3 = {j: q3_family(j, "odd").chern_h[2] for j in ks}
    assert fitted(q_c3) == 8 * k**3 + 24 * k**2 + 26 * k + 10


@pytest.mark.parametrize("j", range(1, 11))
def test_h3_auxiliary_both_routes(j):
    value = Fraction((2 * j - 1) * (2 * j + 1) * (8 * j + 3), 3)
    assert q3_h3_aux(j) == value
    assert h_restricted_cotangent_p4(0, 2 * j) == value


def test_polynomial_sweep_only_documented_mismatches():
    report = verify_polynomial_formulas(10)
    failing = {c.formula.key for c in report.checks if c.mismatches}
    assert failing == DOCUMENTED_KEYS
    for key in DOCUMENTED_KEYS:
        assert next(f for f in PUBLISHED if f.key == key).discrepancy is not None
    assert report.check("p3.odd.dim").ok
    assert report.check("q3.odd.ext2").ok
    assert report.check("q3.odd.h3_aux").ok


def test_sweep_requires_range():
    with pytest.raises(ValueError):
        verify_polynomial_formulas(2)


def test_renderers():
    recs = families("P3", Parity.ODD, range(1, 6))
    rows = list(csv.DictReader(io.StringIO(to_csv(recs))))
    assert len(rows) == 5 and rows[0]["dim_family"] == "69"
    payload = json.loads(to_json(recs))
    assert payload[0]["c3"] == 40 and payload[0]["dim_family"] == 69
    md = to_markdown(families("Q3", Parity.ODD, range(1, 4)))
    assert "163" in md and "printed" in md
    assert to_csv(recs) == to_csv(families("P3", "odd", range(1, 6)))


def test_family_dispatch():
    assert family("Q3", 2, "even") == q3_family(2, Parity.EVEN)
    assert Parity.ODD.degree(3) == 7 and Parity.EVEN.degree(3) == 6
