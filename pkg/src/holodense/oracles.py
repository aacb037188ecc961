"""Coprimality oracles for tuples of Riemann-Roch elements.

A tuple is coprime when its components generate the unit ideal.  The zero
tuple never is; a tuple with a nonzero constant component always is.

Rational spaces (F_q[x], a PID) have two independent oracles: the gcd of the
components, and a search for a common monic irreducible divisor by trial
division.  Elliptic spaces use a common-zero search over the places of the
coordinate ring, bounded by the smallest pole degree among the components:
a common zero of degree d would put every component in L(D - P), which is
zero once d exceeds the component's pole degree.
"""

from __future__ import annotations

from holodense import _dense
from holodense.curves import (
    EllipticCurve,
    Place,
    enumerate_affine_places,
    evaluate_at_place,
    places_over,
)
from holodense.poly import Poly, _irreducibles
from holodense.rrspace import RRElement, pole_degree


def _nonzero(elements):
    return [f for f in elements if not f.is_zero()]


def _check_shared(elements, kind):
    if len(elements) < 1:
        raise ValueError("empty tuple")
    space = elements[0].space
    if any(f.space != space for f in elements):
        raise ValueError("tuple components come from different spaces")
    if space.kind != kind:
        raise ValueError(f"this oracle needs a {kind} space, got {space.kind}")
    return space


def coprime_gcd_oracle(elements) -> bool:
    """Coprime iff the gcd of the nonzero components is a nonzero constant."""
    space = _check_shared(elements, "rational")
    F = space.field
    g = ()
    for f in elements:
        c = _dense.trim(F, f.coeffs)
        if not c:
            continue
        g = _dense.gcd(F, g, c)
        if len(g) == 1:
            return True
    return False


def common_irreducible_divisor(elements) -> Poly | None:
    """A monic irreducible dividing every component, found by trial division.

    Only the lowest-degree component is factored: every common divisor
    divides it, and it has no irreducible factor above its own degree.
    """
    space = _check_shared(elements, "rational")
    F = space.field
    polys = sorted((_dense.trim(F, f.coeffs) for f in elements if not f.is_zero()), key=len)
    if not polys:
        return None
    smallest, others = polys[0], polys[1:]
    rest = _dense.monic(F, smallest)
    d = 1
    while len(rest) > 1:
        if 2 * d > len(rest) - 1:
            candidates = [rest]
            rest = (F.one,)
        else:
            candidates = []
            for P in _irreducibles(F, d):
                if len(rest) == 1:
                    break
                qt, r = _dense.divmod_(F, rest, P.coeffs)
                if r:
                    continue
                candidates.append(P.coeffs)
                rest = qt
                while True:
                    qt, r = _dense.divmod_(F, rest, P.coeffs)
                    if r:
                        break
                    rest = qt
            d += 1
        for P in candidates:
            if all(not _dense.mod(F, f, P) for f in others):
                return Poly(F, P)
    return None


def coprime_divisor_oracle(elements) -> bool:
    """Coprime iff no monic irreducible divides every component."""
    if not _nonzero(elements):
        _check_shared(elements, "rational")
        return False
    return common_irreducible_divisor(elements) is None


def _norm(E: EllipticCurve, f: RRElement):
    """``N(u + v y) = u^2 - v^2 (x^3 + a x + b)`` as a raw polynomial in x."""
    F = E.field
    u, v = f.parts()
    u, v = _dense.trim(F, u), _dense.trim(F, v)
    uu = _dense.mul(F, u, u)
    if not v:
        return uu
    return _dense.sub(F, uu, _dense.mul(F, _dense.mul(F, v, v), E.rhs_poly()))


def _vanishes_everywhere(elements, P: Place) -> bool:
    return all(not evaluate_at_place(f, P) for f in elements)


def common_zero_place(elements, curve: EllipticCurve, search: str = "norm", guard: int | None = None):
    """A place of A(E) at which every component vanishes, or None.

    ``search="scan"`` walks all affine places up to the pole-degree bound.
    ``search="norm"`` only visits places over the roots of the gcd of the
    components' norms to F_q[x], since a common zero's x-coordinate is a
    root of every norm.  Both return the first witness in their own order.
    """
    space = _check_shared(elements, "elliptic")
    if space.curve != curve:
        raise ValueError("tuple lives on a different curve")
    nonzero = sorted(_nonzero(elements), key=pole_degree)
    if not nonzero:
        raise ValueError("every place is a common zero of the zero tuple")
    bound = pole_degree(nonzero[0])
    if bound == 0:
        return None
    if search == "scan":
        for P in enumerate_affine_places(curve, bound, guard):
            if _vanishes_everywhere(nonzero, P):
                return P
        return None
    if search != "norm":
        raise ValueError(f"unknown search {search!r}")
    F = curve.field
    g = ()
    for f in nonzero:
        g = _dense.gcd(F, g, _norm(curve, f))
        if len(g) == 1:
            return None
    for pi in _dense.distinct_irreducible_factors(F, g):
        if len(pi) - 1 > bound:
            break
        for P in places_over(curve, Poly(F, pi)):
            if P.degree <= bound and _vanishes_everywhere(nonzero, P):
                return P
    return None


def coprime_place_oracle(elements, curve: EllipticCurve | None = None, search: str = "norm", guard: int | None = None) -> bool:
    space = _check_shared(elements, "elliptic")
    curve = curve or space.curve
    nonzero = _nonzero(elements)
    if not nonzero:
        return False
    if any(f.is_constant() for f in nonzero):
        return True
    return common_zero_place(elements, curve, search, guard) is None


def coprime(elements, **kwargs) -> bool:
    """Dispatch to the default oracle of the tuple's space kind."""
    if elements[0].space.kind == "rational":
        return coprime_gcd_oracle(elements)
    return coprime_place_oracle(elements, **kwargs)

