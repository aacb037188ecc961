"""Elliptic curves y^2 = x^3 + a x + b over F_q and their affine places.

Places of the coordinate ring A(E) are the Frobenius orbits of affine points;
each :class:`Place` keeps one orbit representative over a degree-``d``
extension of the base field.  The point at infinity is the single removed
place.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from holodense import _dense, _guard
from holodense.fields import FieldElem, FiniteField, make_extension
from holodense.poly import Poly, divisors, mobius


@dataclass(frozen=True)
class EllipticCurve:
    field: FiniteField
    a: object
    b: object

    genus = 1

    @property
    def q(self) -> int:
        return self.field.order

    def rhs(self, x):
        """Raw ``x^3 + a x + b`` for a raw ``x`` in the base field."""
        F = self.field
        return F.add(F.mul(F.add(F.mul(x, x), self.a), x), self.b)

    def rhs_in(self, K: FiniteField, x):
        """Raw ``x^3 + a x + b`` for a raw ``x`` in an extension ``K``."""
        a = K.embed(self.a, self.field)
        b = K.embed(self.b, self.field)
        return K.add(K.mul(K.add(K.mul(x, x), a), x), b)

    def rhs_poly(self) -> tuple:
        F = self.field
        return _dense.trim(F, (self.b, self.a, F.zero, F.one))

    def contains(self, x: FieldElem, y: FieldElem) -> bool:
        K = x.field
        return K.mul(y.value, y.value) == self.rhs_in(K, x.value)

    def __repr__(self):
        F = self.field
        return f"y^2 = x^3 + {F.format_raw(self.a)}x + {F.format_raw(self.b)} over {F!r}"


def validate_curve(field: FiniteField, a, b) -> EllipticCurve:
    if field.p in (2, 3):
        raise ValueError(f"characteristic {field.p} is not supported (need p >= 5)")
    a, b = field(a).value, field(b).value
    F = field
    disc = F.add(F.mul(F.from_int(4), F.pow(a, 3)), F.mul(F.from_int(27), F.mul(b, b)))
    if disc == F.zero:
        raise ValueError("singular curve: 4a^3 + 27b^2 = 0")
    return EllipticCurve(field, a, b)


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElem
    y: FieldElem

    @property
    def field(self) -> FiniteField:
        return self.x.field


@dataclass(frozen=True)
class Place:
    curve: EllipticCurve
    degree: int
    point: AffinePoint

    def orbit(self) -> list:
        """The ``degree`` Frobenius conjugates of the representative."""
        q = self.curve.q
        K = self.point.field
        x, y = self.point.x.value, self.point.y.value
        out = []
        for _ in range(self.degree):
            out.append(AffinePoint(FieldElem(K, x), FieldElem(K, y)))
            x, y = K.pow(x, q), K.pow(y, q)
        return out


def extension_field(E: EllipticCurve, d: int) -> FiniteField:
    return E.field if d == 1 else make_extension(E.field, d)


def _square_counts(K: FiniteField) -> dict:
    counts = {}
    for y in K.raw_elements():
        s = K.mul(y, y)
        counts[s] = counts.get(s, 0) + 1
    return counts


def count_points_bruteforce(E: EllipticCurve, d: int = 1, guard: int | None = None) -> int:
    """Projective point count over F_{q^d} by a full scan of the x-line."""
    if d < 1:
        raise ValueError("d must be positive")
    _guard.check(E.q**d, guard, _guard.POINT_SCAN_DEFAULT, "point count scan")
    K = extension_field(E, d)
    squares = _square_counts(K)
    return 1 + sum(squares.get(E.rhs_in(K, x), 0) for x in K.raw_elements())


def frobenius_traces(E: EllipticCurve, dmax: int, n1: int | None = None) -> list:
    """``[a_1, ..., a_dmax]`` from ``a_{k+1} = a_1 a_k - q a_{k-1}``, ``a_0 = 2``."""
    q = E.q
    if n1 is None:
        n1 = count_points_bruteforce(E, 1)
    a1 = q + 1 - n1
    traces = [2, a1]
    for _ in range(2, dmax + 1):
        traces.append(a1 * traces[-1] - q * traces[-2])
    return traces[1:dmax + 1]


def traces_and_counts(E: EllipticCurve, dmax: int, n1: int | None = None) -> list:
    """``[N_1, ..., N_dmax]`` projective point counts over F_{q^k}."""
    q = E.q
    return [q**k + 1 - a for k, a in enumerate(frobenius_traces(E, dmax, n1), 1)]


@dataclass(frozen=True)
class LPoly:
    """L-polynomial ``L(T) = sum c_k T^k`` of a function field over F_q."""

    q: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs or coeffs[0] != 1:
            raise ValueError("an L-polynomial has constant term 1")
        if len(coeffs) % 2 != 1:
            raise ValueError("an L-polynomial has even degree 2g")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def genus(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def __call__(self, T):
        T = Fraction(T)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * T + c
        return acc

    def power_sums(self, dmax: int) -> list:
        """``s_k = sum alpha_i^k`` over the reciprocal roots, by Newton's identities."""
        g2 = len(self.coeffs) - 1
        e = [(-1) ** j * c for j, c in enumerate(self.coeffs)]
        s = [None]
        for k in range(1, dmax + 1):
            acc = sum((-1) ** (j - 1) * e[j] * s[k - j] for j in range(1, min(k - 1, g2) + 1))
            if k <= g2:
                acc += (-1) ** (k - 1) * k * e[k]
            s.append(acc)
        return s[1:]

    def point_counts(self, dmax: int) -> list:
        """``[N_1, ..., N_dmax]`` with ``N_k = q^k + 1 - s_k``."""
        return [self.q**k + 1 - s for k, s in enumerate(self.power_sums(dmax), 1)]


def l_polynomial(E: EllipticCurve, n1: int | None = None) -> LPoly:
    if n1 is None:
        n1 = count_points_bruteforce(E, 1)
    a_q = E.q + 1 - n1
    return LPoly(E.q, (1, -a_q, E.q))


def projective_place_counts(counts: list) -> list:
    """Invert ``sum_{e | d} e B_e = N_d`` for ``B_1, ..., B_dmax``."""
    out = []
    for d in range(1, len(counts) + 1):
        total = sum(mobius(d // e) * counts[e - 1] for e in divisors(d))
        if total % d or total < 0:
            raise ValueError(f"inconsistent point counts at degree {d}")
        out.append(total // d)
    return out


def place_counts(counts: list, removed: tuple = (1,)) -> list:
    """Place counts of S = all places minus ``removed`` (a multiset of degrees)."""
    out = projective_place_counts(counts)
    for d in removed:
        if d <= len(out):
            out[d - 1] -= 1
            if out[d - 1] < 0:
                raise ValueError(f"more removed places of degree {d} than exist")
    return out


def curve_place_counts(E: EllipticCurve, dmax: int, n1: int | None = None) -> list:
    """Affine place counts ``B_1, ..., B_dmax`` of A(E)."""
    return place_counts(traces_and_counts(E, dmax, n1), removed=(1,))


def _exact_orbit(K, q, d, x, y):
    """Frobenius orbit of ``(x, y)``, or None when it has fewer than ``d`` points."""
    orbit = [(x, y)]
    for _ in range(d - 1):
        x, y = K.pow(x, q), K.pow(y, q)
        if (x, y) == orbit[0]:
            return None
        orbit.append((x, y))
    return orbit


def enumerate_affine_places(E: EllipticCurve, dmax: int, guard: int | None = None):
    """One representative per Frobenius orbit, degree by degree up to ``dmax``."""
    for d in range(1, dmax + 1):
        yield from _places_of_degree(E, d, guard)


def _places_of_degree(E, d, guard):
    _guard.check(E.q**d, guard, _guard.PLACE_SCAN_DEFAULT, "place scan")
    return _cached_places_of_degree(E, d)


@functools.lru_cache(maxsize=32)
def _cached_places_of_degree(E, d):
    K = extension_field(E, d)
    q = E.q
    roots = {}
    for y in K.raw_elements():
        roots.setdefault(K.mul(y, y), []).append(y)
    seen = set()
    places = []
    for x in K.raw_elements():
        for y in roots.get(E.rhs_in(K, x), ()):
            if (x, y) in seen:
                continue
            orbit = _exact_orbit(K, q, d, x, y)
            if orbit is None:
                continue
            seen.update(orbit)
            places.append(Place(E, d, AffinePoint(FieldElem(K, x), FieldElem(K, y))))
    return tuple(places)


def evaluate_at_place(f, P: Place) -> FieldElem:
    """Residue of a Riemann-Roch element at ``P``; zero iff ``f`` lies in the place's ideal."""
    if f.space.curve != P.curve:
        raise ValueError("element and place belong to different curves")
    return f.evaluate(P.point.x, P.point.y)


def field_sqrt(K: FiniteField, c):
    """A raw square root of ``c`` in ``K`` (odd order), or None if ``c`` is a non-square."""
    if c == K.zero:
        return K.zero
    Q = K.order
    if K.pow(c, (Q - 1) // 2) != K.one:
        return None
    s, t = 0, Q - 1
    while t % 2 == 0:
        s, t = s + 1, t // 2
    z = next(r for r in (K.element_at(i) for i in range(1, Q)) if K.pow(r, (Q - 1) // 2) != K.one)
    m, cz, tt, root = s, K.pow(z, t), K.pow(c, t), K.pow(c, (t + 1) // 2)
    while tt != K.one:
        i, probe = 0, tt
        while probe != K.one:
            probe = K.mul(probe, probe)
            i += 1
        b = K.pow(cz, 1 << (m - i - 1))
        m, cz = i, K.mul(b, b)
        tt, root = K.mul(tt, cz), K.mul(root, b)
    return root


def places_over(E: EllipticCurve, pi: Poly) -> list:
    """Affine places of E lying over the x-line place of the monic irreducible ``pi``.

    The residue field of ``pi`` is built with ``pi`` as its modulus, so the
    class of ``x`` is itself a root; a non-square ``x^3 + a x + b`` there
    gives one place of twice the degree over a quadratic extension.
    """
    F = E.field
    k = len(pi.coeffs) - 1
    if k == 1:
        K, x0 = F, F.neg(pi.coeffs[0])
    else:
        K = make_extension(F, k, modulus=pi.coeffs, check=False)
        x0 = K._pad((F.zero, F.one))
    c = E.rhs_in(K, x0)
    s = field_sqrt(K, c)
    if s is not None:
        ys = [s] if s == K.zero else [s, K.neg(s)]
        return [Place(E, k, AffinePoint(FieldElem(K, x0), FieldElem(K, y))) for y in ys]
    L = make_extension(K, 2, modulus=(K.neg(c), K.zero, K.one), check=False)
    x1 = L.embed(x0, K)
    y1 = (K.zero, K.one)
    return [Place(E, 2 * k, AffinePoint(FieldElem(L, x1), FieldElem(L, y1)))]
