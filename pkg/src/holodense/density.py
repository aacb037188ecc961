"""Exact coprimality densities and rigorous Euler-product enclosures.

The density of coprime m-tuples (m >= 2) in a holomorphy ring H is
``1 / Z_H(q^-m)``.  Everything here is exact rational arithmetic; floats only
appear when a caller asks for a decimal rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, isqrt

from holodense.curves import (
    EllipticCurve,
    LPoly,
    count_points_bruteforce,
    curve_place_counts,
    l_polynomial,
    place_counts,
)
from holodense.fields import FiniteField
from holodense.poly import count_monic_irreducibles


def _check_m(m):
    if m < 2:
        raise ValueError(f"coprimality density needs m >= 2, got m={m}")


def density_rational(q: int, m: int) -> Fraction:
    """Density of coprime m-tuples in F_q[x]: ``1 - q^(1-m)``."""
    _check_m(m)
    return 1 - Fraction(1, q ** (m - 1))


def density_from_lpoly(L: LPoly, removed, m: int) -> Fraction:
    """``1 / Z_H(q^-m)`` when H omits finitely many places of the given degrees.

    ``Z_H(T) = L(T) / ((1 - T)(1 - qT)) * prod over removed (1 - T^deg)``.
    """
    _check_m(m)
    removed = tuple(removed)
    if not removed:
        raise ValueError("at least one place must be removed (H would be the constants)")
    if any(d < 1 for d in removed):
        raise ValueError("place degrees are positive")
    q = L.q
    T = Fraction(1, q**m)
    value = L(T)
    if value == 0:
        raise ZeroDivisionError("L(q^-m) vanishes")
    zeta_h = value / ((1 - T) * (1 - q * T))
    for d in removed:
        zeta_h *= 1 - T**d
    return 1 / zeta_h


def density_finite_complement(L: LPoly, removed, m: int) -> Fraction:
    return density_from_lpoly(L, removed, m)


def density_elliptic(E: EllipticCurve, m: int, n1: int | None = None) -> Fraction:
    """``(1 - q^(1-m)) / L(q^-m)`` with ``L(T) = 1 - a_q T + q T^2``."""
    _check_m(m)
    L = l_polynomial(E, n1)
    q = E.q
    return (1 - Fraction(1, q ** (m - 1))) / L(Fraction(1, q**m))


def truncated_density(counts, q: int, m: int) -> Fraction:
    """``prod_d (1 - q^(-m d))^(B_d)`` over the places of degree <= len(counts)."""
    _check_m(m)
    result = Fraction(1)
    for d, b in enumerate(counts, 1):
        result *= (1 - Fraction(1, q ** (m * d))) ** b
    return result


def _sqrt_upper(q: int) -> Fraction:
    r = isqrt(q)
    if r * r == q:
        return Fraction(r)
    scale = 1 << 30
    return Fraction(isqrt(q * scale * scale) + 1, scale)


def _geometric_tail(x: Fraction, t: int) -> Fraction:
    return x ** (t + 1) / (1 - x)


def tail_bound(q: int, g: int, m: int, t: int) -> Fraction:
    """Rational upper bound on ``q^(g m) * sum_{d > t} B_d q^(-m d)``.

    Uses ``B_d <= (q^d + 2g q^(d/2) + 1) / d <= (...) / (t + 1)`` and sums
    the three geometric series in closed form, with ``sqrt(q)`` replaced by
    a rational upper bound.
    """
    _check_m(m)
    if t < 0:
        raise ValueError("t must be nonnegative")
    Q = Fraction(q)
    total = _geometric_tail(Q ** (1 - m), t) + _geometric_tail(Q ** (-m), t)
    if g:
        total += 2 * g * _geometric_tail(_sqrt_upper(q) * Q ** (-m), t)
    return Q ** (g * m) * total / (t + 1)


@dataclass(frozen=True)
class DensityEnclosure:
    truncated: Fraction
    tail: Fraction
    t: int
    exact: Fraction | None = None

    @property
    def lower(self) -> Fraction:
        return max(Fraction(0), self.truncated - self.tail)

    @property
    def upper(self) -> Fraction:
        return self.truncated

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def __contains__(self, value) -> bool:
        return self.lower <= value <= self.upper

    def to_dict(self, digits: int = 12, grid: int = 10**30) -> dict:
        """JSON-ready form.

        Interval endpoints are rounded outward onto multiples of ``1/grid``:
        the exact truncated product has thousands of digits for larger t.
        """
        shown = self.exact if self.exact is not None else self.truncated
        lower = Fraction(floor(self.lower * grid), grid)
        upper = Fraction(ceil(self.upper * grid), grid)
        return {
            "exact": None if self.exact is None else _frac_text(self.exact),
            "decimal": _decimal(shown, digits),
            "truncated_t": self.t,
            "interval": [_frac_text(lower), _frac_text(upper)],
        }


def _frac_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _decimal(x: Fraction, digits: int) -> str:
    scaled = round(x * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def _enclose(counts, q, g, m, t, exact):
    enc = DensityEnclosure(truncated_density(counts, q, m), tail_bound(q, g, m, t), t, exact)
    if exact is not None and exact not in enc:
        raise AssertionError(f"exact density {exact} escapes its enclosure [{enc.lower}, {enc.upper}]")
    return enc


def rational_place_counts(q: int, t: int) -> list:
    """Number of places of F_q[x] (monic irreducibles) of each degree 1..t."""
    return [count_monic_irreducibles(q, d) for d in range(1, t + 1)]


def density_enclosure(target, m: int, t: int) -> DensityEnclosure:
    """Enclosure for F_q[x] (``target`` an int q or a FiniteField) or for A(E)."""
    if isinstance(target, EllipticCurve):
        n1 = count_points_bruteforce(target, 1)
        exact = density_elliptic(target, m, n1)
        counts = curve_place_counts(target, t, n1)
        return _enclose(counts, target.q, 1, m, t, exact)
    q = target.order if isinstance(target, FiniteField) else int(target)
    return _enclose(rational_place_counts(q, t), q, 0, m, t, density_rational(q, m))


def generic_enclosure(L: LPoly, removed, m: int, t: int) -> DensityEnclosure:
    """Enclosure for a holomorphy ring given by its L-polynomial and removed degrees."""
    exact = density_from_lpoly(L, removed, m)
    counts = place_counts(L.point_counts(t), removed=tuple(removed)) if t else []
    return _enclose(counts, L.q, L.genus, m, t, exact)
