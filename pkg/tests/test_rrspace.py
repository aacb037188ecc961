import numpy as np
import pytest
from scipy import stats

from holodense._guard import GuardExceeded
from holodense.curves import enumerate_affine_places
from holodense.fields import make_prime_field
from holodense.rrspace import RRSpace, enumerate_space, pole_degree, rr_basis, rr_dimension, sample_uniform


def test_elliptic_basis_n5(E5):
    S = rr_basis(E5, 5)
    assert S.basis == ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1))
    assert S.describe() == "{1, x, x^2, y, xy}"
    assert S.dimension == 5


def test_elliptic_basis_n1_is_constants(E5):
    assert rr_basis(E5, 1).basis == ((0, 0),)


def test_rational_basis(F5):
    S = rr_basis(F5, 3)
    assert S.describe() == "{1, x, x^2, x^3}" and S.dimension == 4


def test_dimensions():
    assert rr_dimension("elliptic", 4) == 4
    assert rr_dimension("elliptic", 0) == 1
    assert rr_dimension("rational", 0) == 1
    with pytest.raises(ValueError):
        rr_dimension("elliptic", -1)


def test_weierstrass_gap_structure(E5):
    for n in range(51):
        S = rr_basis(E5, n)
        orders = S.pole_orders
        assert len(set(orders)) == len(orders)
        assert max(orders) <= n
        assert 1 not in orders
        assert S.dimension == rr_dimension("elliptic", n) == max(1, n)


def test_enumeration_sizes(F2, E5):
    assert len(list(enumerate_space(rr_basis(F2, 2)))) == 8
    elems = list(enumerate_space(rr_basis(E5, 3)))
    assert len(elems) == 125 == len(set(elems))
    assert elems[0].is_zero()


def test_enumeration_restartable(F5):
    S = rr_basis(F5, 2)
    full = list(enumerate_space(S))
    assert list(enumerate_space(S, 40, 60)) == full[40:60]


def test_enumeration_guard(F5):
    with pytest.raises(GuardExceeded):
        enumerate_space(rr_basis(F5, 9), guard=1000)


def test_sampling_is_reproducible(E5):
    S = rr_basis(E5, 6)
    a = [sample_uniform(S, np.random.default_rng(11)) for _ in range(3)]
    rng1, rng2 = np.random.default_rng(5), np.random.default_rng(5)
    assert [sample_uniform(S, rng1) for _ in range(20)] == [sample_uniform(S, rng2) for _ in range(20)]
    assert a[0] == a[1] == a[2]


def test_sampling_chi_square_uniform(F2):
    S = rr_basis(F2, 2)
    rng = np.random.default_rng(2024)
    counts = np.zeros(S.size, dtype=int)
    index = {f: k for k, f in enumerate(enumerate_space(S))}
    for _ in range(10**5):
        counts[index[sample_uniform(S, rng)]] += 1
    stat = ((counts - 10**5 / 8) ** 2 / (10**5 / 8)).sum()
    assert stat < stats.chi2.ppf(0.999, S.size - 1)


def test_sampling_first_coefficient_marginal(E5):
    S = rr_basis(E5, 4)
    rng = np.random.default_rng(99)
    counts = np.bincount([sample_uniform(S, rng).coeffs[0] for _ in range(20000)], minlength=5)
    stat = ((counts - 4000) ** 2 / 4000).sum()
    assert stat < stats.chi2.ppf(0.999, 4)


def test_pole_degree(E5, F5):
    assert pole_degree(rr_basis(E5, 5).element([3, 0, 0, 0, 1])) == 5
    assert pole_degree(rr_basis(F5, 3).element([1, 0, 1, 0])) == 2
    assert pole_degree(rr_basis(E5, 5).element([1, 0, 0, 0, 0])) == 0
    with pytest.raises(ValueError):
        pole_degree(rr_basis(E5, 5).element([0] * 5))


def _product(f, g):
    """Coefficients of f*g in L(2n P_inf) with y^2 reduced to x^3 + a x + b."""
    S = f.space
    T = RRSpace.elliptic(S.curve, 2 * S.n)
    F = S.field
    index = {mono: k for k, mono in enumerate(T.basis)}
    out = [F.zero] * T.dimension

    def put(i, j, c):
        k = index[(i, j)]
        out[k] = F.add(out[k], c)

    h = S.curve.rhs_poly()
    for (i1, j1), c1 in zip(S.basis, f.coeffs):
        for (i2, j2), c2 in zip(S.basis, g.coeffs):
            c = F.mul(c1, c2)
            i, j = i1 + i2, j1 + j2
            if j == 2:
                for e, hc in enumerate(h):
                    put(i + e, 0, F.mul(c, hc))
            else:
                put(i, j, c)
    return T.element([F.index_of(c) for c in out])


def test_pole_degree_subadditive_and_evaluation_multiplicative(E5):
    S = rr_basis(E5, 5)
    rng = np.random.default_rng(3)
    places = list(enumerate_affine_places(E5, 1))
    for _ in range(200):
        f, g = sample_uniform(S, rng), sample_uniform(S, rng)
        if f.is_zero() or g.is_zero():
            continue
        fg = _product(f, g)
        assert pole_degree(fg) <= pole_degree(f) + pole_degree(g)
        for P in places:
            x, y = P.point.x, P.point.y
            assert fg.evaluate(x, y) == f.evaluate(x, y) * g.evaluate(x, y)


def test_evaluation_is_linear(E5):
    S = rr_basis(E5, 6)
    rng = np.random.default_rng(8)
    places = list(enumerate_affine_places(E5, 2))
    F = S.field
    for _ in range(50):
        f, g = sample_uniform(S, rng), sample_uniform(S, rng)
        c = int(rng.integers(0, 5))
        combo = S.element([(a + c * b) % 5 for a, b in zip(f.coeffs, g.coeffs)])
        P = places[int(rng.integers(len(places)))]
        x, y = P.point.x, P.point.y
        assert combo.evaluate(x, y) == f.evaluate(x, y) + c * g.evaluate(x, y)
        direct = sum((coef * x**i * y**j for coef, (i, j) in zip(f.coeffs, S.basis)), x.field(0))
        assert direct == f.evaluate(x, y)


def test_element_text_round_trip(E5):
    S = rr_basis(E5, 5)
    f = S.parse("1,2,3,4,0")
    assert S.parse(f.to_text()) == f
    with pytest.raises(ValueError):
        S.parse("1,2")
