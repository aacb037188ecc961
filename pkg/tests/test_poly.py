import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holodense.fields import make_extension, make_prime_field
from holodense.poly import (
    NEG_INF,
    Poly,
    count_monic_irreducibles,
    distinct_irreducible_factors,
    enumerate_monic_irreducibles,
    evaluate,
    gcd,
    is_irreducible,
    mobius,
    monic_polys,
    xgcd,
)
from oracles_util import trial_division_irreducible

F2, F3, F5 = (make_prime_field(p) for p in (2, 3, 5))


def P(F, *coeffs):
    return Poly.from_ints(F, coeffs)


def test_square_in_characteristic_two():
    assert P(F2, 1, 1) * P(F2, 1, 1) == P(F2, 1, 0, 1)


def test_divmod_by_linear_is_evaluation():
    f = P(F5, 1, 1, 0, 1)
    qt, r = divmod(f, P(F5, -2, 1))
    assert r == P(F5, 1)
    assert qt * P(F5, -2, 1) + r == f
    assert qt == P(F5, 0, 2, 1)


def test_add_zero_identity():
    f = P(F5, 3, 0, 2)
    assert f + Poly(F5, ()) == f


def test_zero_degree_marker():
    zero = Poly(F5, ())
    assert zero.degree is NEG_INF
    assert NEG_INF < 0 and not (NEG_INF > -10**9)
    with pytest.raises(TypeError):
        zero.degree + 1


def test_division_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        divmod(P(F5, 1, 1), Poly(F5, ()))


def test_gcd_examples():
    assert gcd(P(F2, 0, 1, 1), P(F2, 1, 0, 1)) == P(F2, 1, 1)
    assert gcd(P(F5, -2, 1), P(F5, -3, 1)) == P(F5, 1)
    assert gcd(Poly(F5, ()), Poly(F5, ())) == Poly(F5, ())
    assert gcd(P(F5, 2, 4), Poly(F5, ())) == P(F5, 3, 1)


@pytest.mark.parametrize("f", [P(F5, 1, 2, 3), P(F2, 1, 1, 0, 1), P(F3, 0, 0, 2)])
def test_gcd_with_one(f):
    assert gcd(f, P(f.field, 1)) == P(f.field, 1)


def test_irreducibility_examples():
    assert is_irreducible(P(F2, 1, 1, 1))
    assert not is_irreducible(P(F2, 1, 0, 1))
    assert is_irreducible(P(F5, -2, 1))
    with pytest.raises(ValueError):
        is_irreducible(P(F5, 3))


@pytest.mark.parametrize("F", [F2, F3], ids=repr)
def test_irreducibility_matches_trial_division(F):
    for d in range(1, 7):
        for f in monic_polys(F, d):
            assert is_irreducible(f) == trial_division_irreducible(f), f


def test_irreducibility_over_extension():
    F4 = make_extension(F2, 2)
    for f in monic_polys(F4, 3):
        assert is_irreducible(f) == trial_division_irreducible(f)


def test_small_irreducible_lists():
    assert list(enumerate_monic_irreducibles(F2, 1)) == [P(F2, 0, 1), P(F2, 1, 1)]
    assert list(enumerate_monic_irreducibles(F2, 2)) == [P(F2, 1, 1, 1)]
    assert len(list(enumerate_monic_irreducibles(F2, 3))) == 2


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_mobius_irreducible_counts(q, d):
    F = make_prime_field(q)
    found = list(enumerate_monic_irreducibles(F, d))
    assert len(found) == count_monic_irreducibles(q, d)
    assert all(f.is_monic() and f.degree == d for f in found)


def test_mobius_values():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_evaluate_examples():
    assert evaluate(P(F5, 1, 1, 0, 1), F5(2)) == 1
    assert evaluate(Poly(F5, ()), F5(3)) == 0
    F4 = make_extension(F2, 2)
    assert evaluate(P(F2, 1, 1, 1), F4((0, 1))) == 0


def test_evaluate_rejects_foreign_field():
    with pytest.raises(ValueError):
        evaluate(P(F5, 1, 1), make_prime_field(7)(1))


def test_distinct_irreducible_factors():
    pieces = [P(F5, -1, 1), P(F5, 3, 1), P(F5, 2, 0, 1), P(F5, 1, 1, 0, 1)]
    assert all(is_irreducible(g) for g in pieces)
    f = P(F5, 4) * pieces[0] ** 2 * pieces[1] * pieces[2] * pieces[3] ** 3
    assert distinct_irreducible_factors(f) == sorted(pieces, key=lambda g: (g.degree, g.coeffs))


def test_text_round_trip():
    f = Poly.parse(F5, "1,1,0,1")
    assert f == P(F5, 1, 1, 0, 1)
    assert Poly.parse(F5, f.to_text()) == f


def polys(F, max_degree=8):
    return st.lists(st.integers(0, F.order - 1), max_size=max_degree + 1).map(
        lambda cs: Poly(F, tuple(F.element_at(c) for c in cs)))


FIELD_CHOICES = [F2, F3, F5, make_extension(F2, 2), make_extension(F3, 2)]


@st.composite
def poly_pairs(draw):
    F = draw(st.sampled_from(FIELD_CHOICES))
    return draw(polys(F)), draw(polys(F))


@settings(max_examples=300, deadline=None)
@given(poly_pairs())
def test_divmod_round_trip(fg):
    f, g = fg
    if not g:
        return
    qt, r = divmod(f, g)
    assert qt * g + r == f
    assert r.degree < g.degree


@settings(max_examples=300, deadline=None)
@given(poly_pairs())
def test_gcd_divides_and_bezout(fg):
    f, g = fg
    d, s, t = xgcd(f, g)
    assert d == gcd(f, g)
    assert s * f + t * g == d
    if d:
        assert d.is_monic()
        assert not (f % d) and not (g % d)
