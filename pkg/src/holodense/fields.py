"""Prime fields and relative extensions F_{q^d} = F_q[t]/(modulus).

A :class:`FiniteField` works on *raw* values: an ``int`` in ``[0, p)`` for a
prime field, and a length-``d`` tuple of base-field raw values for an
extension.  :class:`FieldElem` wraps a raw value with its field and gives the
usual operators.  Extensions are always built over the field they extend, so
base elements embed as constant polynomials and no embedding maps are ever
computed.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from holodense import _dense


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


class FiniteField:
    """A finite field, either F_p or ``base[t]/(modulus)``.

    Use :func:`make_prime_field` and :func:`make_extension` rather than the
    constructor; they cache instances so equal fields are usually identical.
    """

    def __init__(self, p, base=None, modulus=None):
        self.p = p
        self.base = base
        if base is None:
            self.degree = 1
            self.order = p
            self.modulus = None
            self.zero, self.one = 0, 1
        else:
            self.modulus = tuple(modulus)
            self.degree = len(self.modulus) - 1
            self.order = base.order ** self.degree
            self.zero = (base.zero,) * self.degree
            self.one = (base.one,) + (base.zero,) * (self.degree - 1)
        self.is_prime = base is None
        self._key = ("prime", p) if base is None else ("ext", base._key, self.modulus)

    def __eq__(self, other):
        return self is other or (isinstance(other, FiniteField) and self._key == other._key)

    def __hash__(self):
        return hash(self._key)

    def __reduce__(self):
        if self.is_prime:
            return (make_prime_field, (self.p,))
        return (_rebuild_extension, (self.base, self.modulus))

    def __repr__(self):
        if self.is_prime:
            return f"GF({self.p})"
        return f"{self.base!r}[t]/({_format_raw_poly(self.base, self.modulus)})"

    def __call__(self, value) -> FieldElem:
        if isinstance(value, FieldElem):
            return FieldElem(self, self.embed(value.value, value.field))
        if isinstance(value, int):
            return FieldElem(self, self.from_int(value))
        if isinstance(value, (list, tuple)) and not self.is_prime:
            coeffs = [self.base(c).value for c in value]
            if len(coeffs) > self.degree:
                raise ValueError(f"expected at most {self.degree} coefficients")
            coeffs += [self.base.zero] * (self.degree - len(coeffs))
            return FieldElem(self, tuple(coeffs))
        raise TypeError(f"cannot build an element of {self!r} from {value!r}")

    # -- tower structure ---------------------------------------------------

    @property
    def prime_field(self) -> FiniteField:
        F = self
        while F.base is not None:
            F = F.base
        return F

    def tower(self):
        """Fields from ``self`` down to the prime field."""
        F = self
        while F is not None:
            yield F
            F = F.base

    def degree_over(self, sub: FiniteField) -> int:
        d = 1
        for F in self.tower():
            if F == sub:
                return d
            d *= F.degree
        raise ValueError(f"{sub!r} is not a subfield in the tower of {self!r}")

    def is_extension_of(self, sub: FiniteField) -> bool:
        return any(F == sub for F in self.tower())

    def embed(self, raw, source: FiniteField):
        """Lift a raw value of ``source`` (a field in our tower) into ``self``."""
        if source is self or source == self:
            return raw
        if self.is_prime:
            raise ValueError(f"{source!r} does not embed in {self!r}")
        return (self.base.embed(raw, source),) + (self.base.zero,) * (self.degree - 1)

    def from_int(self, n: int):
        if self.is_prime:
            return n % self.p
        return (self.base.from_int(n),) + (self.base.zero,) * (self.degree - 1)

    # -- raw arithmetic ----------------------------------------------------

    def add(self, a, b):
        if self.is_prime:
            return (a + b) % self.p
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        if self.is_prime:
            return -a % self.p
        return tuple(self.base.neg(x) for x in a)

    def sub(self, a, b):
        if self.is_prime:
            return (a - b) % self.p
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        if self.is_prime:
            return a * b % self.p
        B = self.base
        prod = _dense.mul(B, _dense.trim(B, a), _dense.trim(B, b))
        return self._pad(_dense.mod(B, prod, self.modulus))

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError(f"zero has no inverse in {self!r}")
        if self.is_prime:
            return pow(a, self.p - 2, self.p)
        B = self.base
        d, s, _ = _dense.xgcd(B, _dense.trim(B, a), self.modulus)
        return self._pad(s)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        if self.is_prime:
            return pow(a, e, self.p)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def _pad(self, coeffs):
        return tuple(coeffs) + (self.base.zero,) * (self.degree - len(coeffs))

    # -- enumeration -------------------------------------------------------

    def element_at(self, index: int):
        """Raw element number ``index`` in the canonical order (zero first)."""
        if not 0 <= index < self.order:
            raise IndexError(index)
        if self.is_prime:
            return index
        B = self.base
        out = []
        for _ in range(self.degree):
            index, digit = divmod(index, B.order)
            out.append(B.element_at(digit))
        return tuple(out)

    def index_of(self, raw) -> int:
        if self.is_prime:
            return raw
        B = self.base
        idx = 0
        for c in reversed(raw):
            idx = idx * B.order + B.index_of(c)
        return idx

    def raw_elements(self):
        if self.is_prime:
            return iter(range(self.p))
        # itertools.product varies its last slot fastest; reverse to keep
        # the constant coefficient as the least significant digit.
        return (tuple(reversed(c)) for c in itertools.product(list(self.base.raw_elements()), repeat=self.degree))

    def elements(self):
        return (FieldElem(self, r) for r in self.raw_elements())

    def elem(self, raw) -> FieldElem:
        return FieldElem(self, raw)

    def format_raw(self, raw) -> str:
        """Integer for prime fields, ``[c0;c1;...]`` coefficient vector otherwise."""
        if self.is_prime:
            return str(raw)
        return "[" + ";".join(self.base.format_raw(c) for c in raw) + "]"


@dataclass(frozen=True)
class FieldElem:
    field: FiniteField
    value: object

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError(f"mixed fields: {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElem:
        return FieldElem(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != self.field.zero

    def __repr__(self):
        return self.field.format_raw(self.value)


@functools.lru_cache(maxsize=None)
def make_prime_field(p: int) -> FiniteField:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    return FiniteField(p)


@functools.lru_cache(maxsize=None)
def _rebuild_extension(base, modulus):
    return FiniteField(base.p, base, modulus)


def make_extension(base: FiniteField, d: int | None = None, modulus=None, *, check: bool = True) -> FiniteField:
    """Degree-``d`` extension of ``base``.

    Without ``modulus`` the field is ``base[t]/(m)`` with ``m`` the
    lexicographically smallest monic irreducible of degree ``d``, comparing
    coefficients from the constant term up in canonical element order.  An
    explicit ``modulus`` (monic irreducible raw coefficient tuple, or a
    ``Poly``) builds the residue field of that polynomial instead; pass
    ``check=False`` when irreducibility is already known.
    """
    if modulus is None:
        if d is None or d < 2:
            raise ValueError("extension degree must be at least 2")
        return _canonical_extension(base, d)
    coeffs = tuple(getattr(modulus, "coeffs", modulus))
    if len(coeffs) - 1 < 2 or (d is not None and len(coeffs) - 1 != d):
        raise ValueError("modulus must have the requested degree, at least 2")
    if coeffs[-1] != base.one:
        raise ValueError("modulus must be monic")
    if check and not _dense.is_irreducible(base, coeffs):
        raise ValueError("modulus is reducible")
    return _rebuild_extension(base, coeffs)


@functools.lru_cache(maxsize=None)
def _canonical_extension(base, d):
    elements = list(base.raw_elements())
    for low in itertools.product(elements, repeat=d):
        if low[0] == base.zero:
            continue
        modulus = tuple(low) + (base.one,)
        if _dense.is_irreducible(base, modulus):
            return _rebuild_extension(base, modulus)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def make_field(q: int) -> FiniteField:
    """F_q for a prime power ``q``, as a canonical extension of F_p when needed."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(k for k in range(2, q + 1) if q % k == 0)
    d = 0
    n = q
    while n % p == 0:
        n //= p
        d += 1
    if n != 1:
        raise ValueError(f"{q} is not a prime power")
    F = make_prime_field(p)
    return F if d == 1 else make_extension(F, d)


def frobenius(a: FieldElem, over: FiniteField) -> FieldElem:
    """``a ** |over|``: the generator of Gal(a.field / over)."""
    if not a.field.is_extension_of(over):
        raise ValueError(f"{a.field!r} is not an extension of {over!r}")
    return a ** over.order


def enumerate_elements(F: FiniteField):
    return F.elements()


def _format_raw_poly(F, coeffs):
    terms = []
    for k, c in enumerate(coeffs):
        if c == F.zero:
            continue
        cs = F.format_raw(c)
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not mono:
            terms.append(cs)
        elif c == F.one:
            terms.append(mono)
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(reversed(terms)) or "0"
