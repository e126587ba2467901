from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from cochar.errors import EmptyList
from cochar.freealg import proper_hilbert, relfree_hilbert
from cochar.series import (HilbertSeries, IdealSpec, assemble_full, assemble_proper,
                           boumova_drensky_series, exponents_up_to, formanek_product,
                           formanek_product_many, geom_pow, hilbert_from_proper,
                           pr_polynomials, proper_product, unit_series)
from cochar.symfunc import SymPoly

from oracles import series_by_convolution


def s1(n, D):
    return SymPoly.elementary_one(n, D)


def test_ideal_spec_parsing():
    assert IdealSpec.parse("2,1").factors == (2, 1)
    assert IdealSpec.parse(3).factors == (3,)
    assert str(IdealSpec.parse("2,1")) == "I_3 I_2"
    assert IdealSpec.parse("2,1").min_degree == 5
    for bad in ("", "0", "a,1", "-1"):
        with pytest.raises(ValueError):
            IdealSpec.parse(bad)


def test_exponents_up_to_counts():
    for n in range(1, 5):
        for D in range(6):
            es = exponents_up_to(n, D)
            assert len(es) == len(set(es)) == comb(D + n, n)


def test_geom_pow_examples():
    assert geom_pow(1, 1, 3).poly.terms == {(0,): 1, (1,): 1, (2,): 1, (3,): 1}
    assert geom_pow(2, 1, 2).poly.terms == {e: 1 for e in exponents_up_to(2, 2)}
    assert geom_pow(2, 2, 1).poly.terms == {(0, 0): 1, (1, 0): 2, (0, 1): 2}


def test_geom_pow_matches_convolution():
    for n in range(1, 4):
        for r in range(1, 4):
            assert geom_pow(n, r, 5).poly.terms == series_by_convolution(n, r, 5)


def test_geom_pow_multiplies():
    assert geom_pow(3, 2, 5).poly * geom_pow(3, 1, 5).poly == geom_pow(3, 3, 5).poly


def test_hilbert_from_proper_examples():
    assert hilbert_from_proper(unit_series(2, 2), 2, 2).poly == geom_pow(2, 1, 2).poly
    hb = HilbertSeries(SymPoly(2, {(0, 0): 1, (1, 1): 1}, 2), "proper")
    assert hilbert_from_proper(hb, 2, 2).coefficient((1, 1)) == 2
    assert not hilbert_from_proper(0, 2, 2).poly


def test_formanek_product_examples():
    n, D = 3, 4
    assert formanek_product(1, 1, n, D).poly == 1 + s1(n, D)
    h1 = geom_pow(2, 1, 2)
    # h1 + 1 + (S1 - 1) h1 collapses to 1 + S1 h1
    expected = 1 + h1.poly * (SymPoly.var(0, 2, 2) + SymPoly.var(1, 2, 2))
    assert formanek_product(h1, 1, 2, 2).poly == expected
    assert formanek_product(geom_pow(2, 1, 3), geom_pow(2, 1, 3), 2, 3).poly == \
        boumova_drensky_series(2, 2, 3).poly


def test_formanek_product_many_small_cases():
    h = geom_pow(2, 1, 3)
    assert formanek_product_many([h], 2, 3).poly == h.poly
    assert formanek_product_many([h, h], 2, 3).poly == formanek_product(h, h, 2, 3).poly
    # three unit series: 3 + 3(S1 - 1) + (S1 - 1)^2
    s1m = s1(2, 2) - 1
    assert formanek_product_many([1, 1, 1], 2, 2).poly == 3 + 3 * s1m + s1m * s1m
    with pytest.raises(EmptyList):
        formanek_product_many([], 2, 3)


series_coeffs = st.dictionaries(st.sampled_from(exponents_up_to(2, 4)), st.integers(-3, 3),
                                max_size=6)


@settings(max_examples=30, deadline=None)
@given(series_coeffs, series_coeffs)
def test_formanek_product_is_symmetric(a, b):
    f, g = SymPoly(2, a, 4), SymPoly(2, b, 4)
    assert formanek_product(f, g, 2, 4).poly == formanek_product(g, f, 2, 4).poly


@settings(max_examples=20, deadline=None)
@given(st.lists(series_coeffs, min_size=1, max_size=4))
def test_many_factor_formula_equals_iterated_pairs(coeff_list):
    polys = [SymPoly(2, c, 4) for c in coeff_list]
    acc = polys[0]
    for p in polys[1:]:
        acc = formanek_product(acc, p, 2, 4).poly
    assert formanek_product_many(polys, 2, 4).poly == acc


@settings(max_examples=25, deadline=None)
@given(series_coeffs, series_coeffs)
def test_proper_and_full_products_are_compatible(a, b):
    hb1, hb2 = SymPoly(2, a, 4), SymPoly(2, b, 4)
    left = hilbert_from_proper(proper_product(hb1, hb2, 2, 4), 2, 4).poly
    right = formanek_product(hilbert_from_proper(hb1, 2, 4), hilbert_from_proper(hb2, 2, 4),
                             2, 4).poly
    assert left == right


def test_proper_product_examples():
    n, D = 2, 4
    expected = 2 + (s1(n, D) - 1) * geom_pow(n, 1, D).poly
    assert proper_product(1, 1, n, D).poly == expected
    hb = proper_hilbert((2,), n, D)
    assert proper_product(hb, 0, n, D).poly == hb.poly


def test_pr_polynomials_unit_inputs():
    n, D = 2, 4
    ps = pr_polynomials([1, 1, 1], n, D)
    for r, p in enumerate(ps, start=1):
        assert p == (s1(n, D) - 1) ** (r - 1) * comb(3, r)


def test_pr_polynomials_small_k():
    n, D = 2, 5
    hb2 = proper_hilbert((2,), n, D)
    assert pr_polynomials([hb2], n, D) == [hb2.poly]
    ps = pr_polynomials([1, hb2], n, D)
    assert ps[1] == (s1(n, D) - 1) * hb2.poly


def test_assembled_forms_match_product_formula():
    n, D = 2, 5
    for factors in [(1, 2), (2, 2), (1, 2, 3)]:
        proper = [proper_hilbert((p,), n, D) for p in factors]
        full = [hilbert_from_proper(hb, n, D) for hb in proper]
        ps = pr_polynomials(proper, n, D)
        assert assemble_full(ps, n, D).poly == formanek_product_many(full, n, D).poly
        assembled = hilbert_from_proper(assemble_proper(ps, n, D), n, D)
        assert assembled.poly == formanek_product_many(full, n, D).poly


def test_boumova_drensky_examples():
    assert boumova_drensky_series(1, 3, 4).poly == geom_pow(3, 1, 4).poly
    # t1 t2 in 2G + (t1 + t2 - 1) G^2, where G^2 has coefficient (a+1)(b+1)
    bd = boumova_drensky_series(2, 2, 2)
    assert bd.coefficient((1, 1)) == 2 * 1 + (2 + 2 - 4)


def test_boumova_drensky_matches_product_of_commutative_series():
    for k in range(1, 4):
        for n in range(1, 4):
            hs = [geom_pow(n, 1, 6)] * k
            assert boumova_drensky_series(k, n, 6).poly == formanek_product_many(hs, n, 6).poly


def test_relfree_series_have_dimension_coefficients():
    for spec in ["1", "2", "1,1", "2,1"]:
        assert relfree_hilbert(spec, 2, 5).has_dimension_coefficients()


def test_series_json_form():
    doc = geom_pow(1, 1, 1).to_json()
    assert doc["role"] == "full"
    assert {"exponents": [1], "coeff": "1"} in doc["terms"]
