"""Riemann-Roch spaces L(n P_inf) with their monomial bases.

Rational case: polynomials of degree <= n.  Elliptic case: the monomials
``x^i y^j`` (j in {0, 1}) with pole order ``2i + 3j <= n`` at infinity.
The basis lists the ``y``-free monomials first, then the ``x^i y`` ones, so
an element splits as ``u(x) + v(x) y`` by slicing its coefficient vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from holodense import _guard
from holodense.curves import EllipticCurve
from holodense.fields import FieldElem, FiniteField
from holodense.poly import Poly


@dataclass(frozen=True)
class RRSpace:
    kind: str
    field: FiniteField
    n: int
    curve: EllipticCurve | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("the bound n must be nonnegative")
        if self.kind not in ("rational", "elliptic"):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if (self.kind == "elliptic") != (self.curve is not None):
            raise ValueError("elliptic spaces need a curve, rational ones must not have one")

    @classmethod
    def rational(cls, field: FiniteField, n: int) -> RRSpace:
        return cls("rational", field, n)

    @classmethod
    def elliptic(cls, curve: EllipticCurve, n: int) -> RRSpace:
        return cls("elliptic", curve.field, n, curve)

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def basis(self) -> tuple:
        """Monomials as ``(i, j)`` exponent pairs of ``x^i y^j``."""
        if self.kind == "rational":
            return tuple((i, 0) for i in range(self.n + 1))
        plain = [(i, 0) for i in range(self.n // 2 + 1)]
        with_y = [(i, 1) for i in range((self.n - 3) // 2 + 1)] if self.n >= 3 else []
        return tuple(plain + with_y)

    @property
    def pole_orders(self) -> tuple:
        weight = (1, 0) if self.kind == "rational" else (2, 3)
        return tuple(weight[0] * i + weight[1] * j for i, j in self.basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def split(self) -> int:
        """Number of ``y``-free basis monomials."""
        return self.n + 1 if self.kind == "rational" else self.n // 2 + 1

    @property
    def size(self) -> int:
        return self.q**self.dimension

    def element(self, coeffs) -> RRElement:
        raw = tuple(self.field(c).value for c in coeffs)
        if len(raw) != self.dimension:
            raise ValueError(f"expected {self.dimension} coefficients, got {len(raw)}")
        return RRElement(self, raw)

    def element_at(self, index: int) -> RRElement:
        """Element number ``index``: coefficient k is base-q digit k of the index."""
        if not 0 <= index < self.size:
            raise IndexError(index)
        F, q = self.field, self.q
        out = []
        for _ in range(self.dimension):
            index, digit = divmod(index, q)
            out.append(F.element_at(digit))
        return RRElement(self, tuple(out))

    def from_digits(self, digits) -> RRElement:
        F = self.field
        if F.is_prime:
            return RRElement(self, tuple(int(d) for d in digits))
        return RRElement(self, tuple(F.element_at(int(d)) for d in digits))

    def parse(self, text: str) -> RRElement:
        """Comma-separated integer coefficients in basis order."""
        return self.element([int(tok) for tok in text.split(",")])

    def describe(self) -> str:
        names = []
        for i, j in self.basis:
            x = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            y = "y" if j else ""
            names.append(x + y or "1")
        return "{" + ", ".join(names) + "}"


@dataclass(frozen=True)
class RRElement:
    space: RRSpace
    coeffs: tuple

    def is_zero(self) -> bool:
        zero = self.space.field.zero
        return all(c == zero for c in self.coeffs)

    def is_constant(self) -> bool:
        zero = self.space.field.zero
        return all(c == zero for c in self.coeffs[1:])

    def parts(self):
        """``(u, v)`` raw coefficient tuples with ``f = u(x) + v(x) y``."""
        k = self.space.split
        return self.coeffs[:k], self.coeffs[k:]

    def as_poly(self) -> Poly:
        if self.space.kind != "rational":
            raise ValueError("only rational-space elements are polynomials in x")
        return Poly(self.space.field, self.coeffs)

    def evaluate(self, x: FieldElem, y: FieldElem | None = None) -> FieldElem:
        """``sum c * x^i * y^j`` computed in the field of ``x``."""
        K = x.field
        F = self.space.field
        if not K.is_extension_of(F):
            raise ValueError(f"{K!r} does not contain {F!r}")
        u, v = self.parts()
        acc = _horner(K, F, u, x.value)
        if any(c != F.zero for c in v):
            if y is None:
                raise ValueError("a y-coordinate is needed to evaluate this element")
            acc = K.add(acc, K.mul(_horner(K, F, v, x.value), y.value))
        return FieldElem(K, acc)

    def to_text(self) -> str:
        return ",".join(self.space.field.format_raw(c) for c in self.coeffs)


def _horner(K, F, coeffs, x):
    acc = K.zero
    for c in reversed(coeffs):
        acc = K.add(K.mul(acc, x), K.embed(c, F))
    return acc


def rr_basis(target, n: int) -> RRSpace:
    """Space L(n P_inf) over a field (rational case) or on an elliptic curve."""
    if isinstance(target, EllipticCurve):
        return RRSpace.elliptic(target, n)
    if isinstance(target, FiniteField):
        return RRSpace.rational(target, n)
    raise TypeError(f"expected a FiniteField or EllipticCurve, got {target!r}")


def rr_dimension(kind: str, n: int) -> int:
    if n < 0:
        raise ValueError("the bound n must be nonnegative")
    if kind == "rational":
        return n + 1
    if kind == "elliptic":
        return max(1, n)
    raise ValueError(f"unknown space kind {kind!r}")


def enumerate_space(S: RRSpace, start: int = 0, stop: int | None = None, guard: int | None = None):
    """Elements of ``S`` in index order, restartable at ``start``."""
    _guard.check(S.size, guard, _guard.SPACE_DEFAULT, "space enumeration")
    stop = S.size if stop is None else min(stop, S.size)
    return (S.element_at(k) for k in range(start, stop))


def sample_uniform(S: RRSpace, rng: np.random.Generator) -> RRElement:
    """Uniform element: independent uniform coefficients drawn from ``rng``."""
    return S.from_digits(rng.integers(0, S.q, size=S.dimension))


def pole_degree(f: RRElement) -> int:
    """Pole order at infinity.  Basis pole orders are distinct, so no cancellation."""
    zero = f.space.field.zero
    orders = [w for c, w in zip(f.coeffs, f.space.pole_orders) if c != zero]
    if not orders:
        raise ValueError("the zero element has no pole degree")
    return max(orders)
