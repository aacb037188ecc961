import itertools
from fractions import Fraction

import numpy as np
import pytest

from holodense.curves import evaluate_at_place, validate_curve
from holodense.fields import make_field, make_prime_field
from holodense.oracles import (
    common_irreducible_divisor,
    common_zero_place,
    coprime,
    coprime_divisor_oracle,
    coprime_gcd_oracle,
    coprime_place_oracle,
)
from holodense.poly import Poly
from holodense.rrspace import enumerate_space, rr_basis, sample_uniform
from oracles_util import gf2_gcd, module_minor_oracle


def test_rational_examples(F2):
    S = rr_basis(F2, 2)
    f, g = S.parse("0,1,1"), S.parse("1,0,1")  # x^2 + x, x^2 + 1
    assert not coprime_gcd_oracle([f, g]) and not coprime_divisor_oracle([f, g])
    assert common_irreducible_divisor([f, g]) == Poly.parse(F2, "1,1")
    h, k = S.parse("0,1,0"), S.parse("1,1,0")  # x, x + 1
    assert coprime_gcd_oracle([h, k]) and coprime_divisor_oracle([h, k])


def test_zero_and_unit_tuples(F5, E5):
    for S in (rr_basis(F5, 2), rr_basis(E5, 4)):
        zero = S.element([0] * S.dimension)
        unit = S.element([3] + [0] * (S.dimension - 1))
        other = S.element([1] * S.dimension)
        assert not coprime([zero, zero])
        assert coprime([zero, unit])
        assert coprime([other, unit, zero])
    S = rr_basis(F5, 2)
    assert not coprime_divisor_oracle([S.element([0, 0, 0])] * 3)


def test_single_component(F5):
    S = rr_basis(F5, 2)
    assert not coprime([S.parse("1,1,0")])
    assert coprime([S.parse("2,0,0")])


def test_mixed_spaces_rejected(F5, E5):
    with pytest.raises(ValueError):
        coprime_gcd_oracle([rr_basis(F5, 2).parse("1,0,0"), rr_basis(F5, 3).parse("1,0,0,0")])
    with pytest.raises(ValueError):
        coprime_place_oracle([rr_basis(F5, 2).parse("1,0,0")])


def test_elliptic_examples(E5):
    S = rr_basis(E5, 3)  # {1, x, y}
    x, y = S.parse("0,1,0"), S.parse("0,0,1")
    assert coprime([x, y])
    f, g = S.parse("3,1,0"), S.parse("4,0,1")  # x - 2, y - 1
    assert not coprime([f, g])
    P = common_zero_place([f, g], E5)
    assert P.degree == 1
    assert (P.point.x, P.point.y) == (E5.field(2), E5.field(1))


def test_gcd_and_divisor_oracles_agree_exhaustively():
    for q, n in [(2, 3), (3, 2), (4, 1)]:
        S = rr_basis(make_field(q), n)
        elems = list(enumerate_space(S))
        for f, g in itertools.product(elems, repeat=2):
            assert coprime_gcd_oracle([f, g]) == coprime_divisor_oracle([f, g])


def test_divisor_witness_divides_everything():
    rng = np.random.default_rng(1)
    S = rr_basis(make_prime_field(3), 6)
    found = 0
    for _ in range(400):
        tup = [sample_uniform(S, rng) for _ in range(2)]
        P = common_irreducible_divisor(tup)
        if P is not None:
            found += 1
            for f in tup:
                assert not (f.as_poly() % P)
    assert found > 50


def _bits(f):
    return sum(int(c) << k for k, c in enumerate(f.coeffs))


def test_gf2_bitmask_count(F2):
    S = rr_basis(F2, 2)
    elems = list(enumerate_space(S))
    hits = sum(gf2_gcd(_bits(f), _bits(g)) == 1 for f, g in itertools.product(elems, repeat=2))
    assert Fraction(hits, 64) == Fraction(33, 64)
    assert hits == sum(coprime([f, g]) for f, g in itertools.product(elems, repeat=2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_elliptic_searches_agree_with_module_oracle(E5, n):
    S = rr_basis(E5, n)
    rng = np.random.default_rng(n)
    pairs = list(itertools.product(enumerate_space(S), repeat=2)) if n == 2 else [
        (sample_uniform(S, rng), sample_uniform(S, rng)) for _ in range(600)
    ]
    for f, g in pairs:
        expected = module_minor_oracle([f, g])
        assert coprime_place_oracle([f, g], search="norm") == expected
        assert coprime_place_oracle([f, g], search="scan") == expected


def test_elliptic_triples_other_curves():
    rng = np.random.default_rng(17)
    for q, a, b in [(7, 3, 2), (11, 0, 1), (13, 2, 5)]:
        E = validate_curve(make_prime_field(q), a, b)
        S = rr_basis(E, 4)
        for _ in range(150):
            tup = [sample_uniform(S, rng) for _ in range(3)]
            assert coprime_place_oracle(tup) == module_minor_oracle(tup)


def test_elliptic_over_extension_field():
    F = make_field(25)
    E = validate_curve(F, F.element_at(7), F.one)
    S = rr_basis(E, 3)
    rng = np.random.default_rng(4)
    for _ in range(200):
        tup = [sample_uniform(S, rng) for _ in range(2)]
        assert coprime_place_oracle(tup) == module_minor_oracle(tup)


def test_witness_is_a_common_zero(E5):
    S = rr_basis(E5, 6)
    rng = np.random.default_rng(23)
    witnesses = 0
    for _ in range(500):
        tup = [sample_uniform(S, rng) for _ in range(2)]
        if any(f.is_zero() or f.is_constant() for f in tup):
            continue
        P = common_zero_place(tup, E5)
        if P is None:
            assert module_minor_oracle(tup)
            continue
        witnesses += 1
        assert all(not evaluate_at_place(f, P) for f in tup)
    assert witnesses > 20


def test_unknown_search(E5):
    S = rr_basis(E5, 3)
    with pytest.raises(ValueError):
        common_zero_place([S.parse("0,1,0")], E5, search="bogus")
