"""Dense univariate polynomials over a :class:`~holodense.fields.FiniteField`."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from holodense import _dense
from holodense.fields import FieldElem, FiniteField


class _NegInf:
    """Degree of the zero polynomial.

    Compares below every integer but refuses arithmetic, so a stray
    ``deg(0) + 1`` fails loudly instead of yielding a bogus number.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "-inf"

    def __reduce__(self):
        return (_NegInf, ())


NEG_INF = _NegInf()


@dataclass(frozen=True)
class Poly:
    field: FiniteField
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _dense.trim(self.field, tuple(self.coeffs)))

    @classmethod
    def from_ints(cls, field: FiniteField, values) -> Poly:
        return cls(field, tuple(field.from_int(v) for v in values))

    @classmethod
    def from_elems(cls, field: FiniteField, values) -> Poly:
        return cls(field, tuple(field(v).value for v in values))

    @classmethod
    def x(cls, field: FiniteField) -> Poly:
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field: FiniteField, c) -> Poly:
        return cls(field, (field(c).value,))

    @classmethod
    def parse(cls, field: FiniteField, text: str) -> Poly:
        """Parse ``"1,1,0,1"`` (low degree first, integers mod p)."""
        text = text.strip()
        if not text:
            return cls(field, ())
        return cls.from_ints(field, [int(tok) for tok in text.split(",")])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k) -> FieldElem:
        if k < len(self.coeffs):
            return FieldElem(self.field, self.coeffs[k])
        return FieldElem(self.field, self.field.zero)

    @property
    def leading(self) -> FieldElem:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return FieldElem(self.field, self.coeffs[-1])

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def monic(self) -> Poly:
        return Poly(self.field, _dense.monic(self.field, self.coeffs))

    def _other(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError(f"mixed fields: {self.field!r} and {other.field!r}")
            return other.coeffs
        if isinstance(other, (int, FieldElem)):
            return _dense.trim(self.field, (self.field(other).value,))
        return NotImplemented

    def __add__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return g
        return Poly(self.field, _dense.add(self.field, self.coeffs, g))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, _dense.neg(self.field, self.coeffs))

    def __sub__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return g
        return Poly(self.field, _dense.sub(self.field, self.coeffs, g))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return g
        return Poly(self.field, _dense.mul(self.field, self.coeffs, g))

    __rmul__ = __mul__

    def __divmod__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return g
        qt, r = _dense.divmod_(self.field, self.coeffs, g)
        return Poly(self.field, qt), Poly(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        result = Poly(self.field, (self.field.one,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, a):
        return evaluate(self, a)

    def __repr__(self):
        F = self.field
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == F.zero:
                continue
            cs = F.format_raw(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                terms.append(cs)
            elif c == F.one:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(reversed(terms)) or "0"

    def to_text(self) -> str:
        """Inverse of :meth:`parse` over a prime field."""
        return ",".join(self.field.format_raw(c) for c in self.coeffs)


def poly_divmod(f: Poly, g: Poly):
    return divmod(f, g)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    if f.field != g.field:
        raise ValueError("mixed fields")
    return Poly(f.field, _dense.gcd(f.field, f.coeffs, g.coeffs))


def xgcd(f: Poly, g: Poly):
    """``(d, s, t)`` with ``d = s*f + t*g = gcd(f, g)``."""
    if f.field != g.field:
        raise ValueError("mixed fields")
    d, s, t = _dense.xgcd(f.field, f.coeffs, g.coeffs)
    return Poly(f.field, d), Poly(f.field, s), Poly(f.field, t)


def is_irreducible(f: Poly) -> bool:
    if not f or f.degree < 1:
        raise ValueError("irreducibility test needs a non-constant polynomial")
    return _dense.is_irreducible(f.field, f.coeffs)


def distinct_irreducible_factors(f: Poly) -> list:
    """Monic irreducible divisors of ``f`` (each listed once). Odd characteristic only."""
    return [Poly(f.field, c) for c in _dense.distinct_irreducible_factors(f.field, f.coeffs)]


def monic_polys(F: FiniteField, d: int):
    """All monic polynomials of degree ``d`` in canonical order."""
    elements = list(F.raw_elements())
    for low in itertools.product(elements, repeat=d):
        yield Poly(F, tuple(reversed(low)) + (F.one,))


def enumerate_monic_irreducibles(F: FiniteField, d: int):
    if d < 1:
        raise ValueError("degree must be positive")
    return iter(_irreducibles(F, d))


@functools.lru_cache(maxsize=64)
def _irreducibles(F, d):
    if d == 1:
        return tuple(Poly(F, (F.neg(a), F.one)) for a in F.raw_elements())
    return tuple(f for f in monic_polys(F, d) if _dense.is_irreducible(F, f.coeffs))


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    k = 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


def divisors(n: int) -> list:
    return [e for e in range(1, n + 1) if n % e == 0]


def count_monic_irreducibles(q: int, d: int) -> int:
    total = sum(mobius(d // e) * q**e for e in divisors(d))
    return total // d


def evaluate(f: Poly, a) -> FieldElem:
    """Horner evaluation of ``f`` at ``a``; ``a`` may live in any extension of f's field."""
    if not isinstance(a, FieldElem):
        a = f.field(a)
    K = a.field
    if not K.is_extension_of(f.field):
        raise ValueError(f"{K!r} does not contain {f.field!r}")
    acc = K.zero
    for c in reversed(f.coeffs):
        acc = K.add(K.mul(acc, a.value), K.embed(c, f.field))
    return FieldElem(K, acc)
