"""Dense polynomial kernels over a finite field.

Polynomials are tuples of raw field values, lowest degree first, with no
trailing zeros; ``()`` is the zero polynomial.  Every function takes the
coefficient field ``F`` first and only touches it through its raw-value
methods, so the same kernels serve prime fields and relative extensions.
Prime fields get integer fast paths in the hot loops.
"""

import random


def trim(F, f):
    zero = F.zero
    n = len(f)
    while n and f[n - 1] == zero:
        n -= 1
    return tuple(f[:n])


def add(F, f, g):
    if len(f) < len(g):
        f, g = g, f
    if F.is_prime:
        p = F.p
        out = [(a + b) % p for a, b in zip(f, g)]
    else:
        out = [F.add(a, b) for a, b in zip(f, g)]
    out.extend(f[len(g):])
    return trim(F, out)


def neg(F, f):
    return tuple(F.neg(a) for a in f)


def sub(F, f, g):
    return add(F, f, neg(F, g))


def scale(F, f, c):
    if c == F.zero:
        return ()
    if F.is_prime:
        p = F.p
        return tuple(a * c % p for a in f)
    return tuple(F.mul(a, c) for a in f)


def mul(F, f, g):
    if not f or not g:
        return ()
    if F.is_prime:
        p = F.p
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    out[i + j] += a * b
        return trim(F, [c % p for c in out])
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == F.zero:
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(F, out)


def divmod_(F, f, g):
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    dg = len(g) - 1
    if len(f) <= dg:
        return (), tuple(f)
    r = list(f)
    qt = [F.zero] * (len(f) - dg)
    if F.is_prime:
        p = F.p
        lead_inv = pow(g[-1], p - 2, p)
        for k in range(len(f) - 1, dg - 1, -1):
            c = r[k] * lead_inv % p
            if c:
                qt[k - dg] = c
                base = k - dg
                for j in range(dg + 1):
                    r[base + j] = (r[base + j] - c * g[j]) % p
        return trim(F, qt), trim(F, r[:dg])
    lead_inv = F.inv(g[-1])
    for k in range(len(f) - 1, dg - 1, -1):
        c = F.mul(r[k], lead_inv)
        if c != F.zero:
            qt[k - dg] = c
            base = k - dg
            for j in range(dg + 1):
                r[base + j] = F.sub(r[base + j], F.mul(c, g[j]))
    return trim(F, qt), trim(F, r[:dg])


def mod(F, f, g):
    return divmod_(F, f, g)[1]


def monic(F, f):
    if not f or f[-1] == F.one:
        return tuple(f)
    return scale(F, f, F.inv(f[-1]))


def gcd(F, f, g):
    """Monic gcd; the gcd of two zero polynomials is zero."""
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def xgcd(F, f, g):
    """Return ``(d, s, t)`` with ``d = s*f + t*g`` and ``d`` monic (or zero)."""
    r0, r1 = tuple(f), tuple(g)
    s0, s1 = (F.one,), ()
    t0, t1 = (), (F.one,)
    while r1:
        qt, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, qt, s1))
        t0, t1 = t1, sub(F, t0, mul(F, qt, t1))
    if not r0:
        return (), s0, t0
    c = F.inv(r0[-1])
    return scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)


def powmod(F, f, e, m):
    result = (F.one,)
    base = mod(F, f, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = mod(F, mul(F, base, base), m)
    return mod(F, result, m)


def derivative(F, f):
    return trim(F, [F.mul(F.from_int(k), f[k]) for k in range(1, len(f))])


def prime_factors(n):
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(F, f):
    """Rabin's test: ``x^(q^n) = x mod f`` and no shortcut at ``n/r``."""
    n = len(f) - 1
    if n < 1:
        raise ValueError("irreducibility is undefined for constants")
    if n == 1:
        return True
    f = monic(F, f)
    x = (F.zero, F.one)
    q = F.order

    def frob_power(k):
        h = x
        for _ in range(k):
            h = powmod(F, h, q, f)
        return h

    for r in prime_factors(n):
        h = frob_power(n // r)
        if len(gcd(F, sub(F, h, x), f)) != 1:
            return False
    return mod(F, sub(F, frob_power(n), x), f) == ()


def distinct_irreducible_factors(F, f, rng=None):
    """Monic irreducible factors of ``f`` without multiplicity, sorted by degree.

    Distinct-degree split followed by Cantor-Zassenhaus equal-degree
    splitting.  The randomness only affects running time, never the result.
    """
    f = monic(F, f)
    if len(f) <= 1:
        return []
    if F.p == 2:
        raise NotImplementedError("equal-degree splitting needs odd characteristic")
    rng = rng or random.Random(0)
    x = (F.zero, F.one)
    q = F.order
    factors = []
    h = x
    found = (F.one,)
    for d in range(1, len(f)):
        h = powmod(F, h, q, f)
        g = gcd(F, sub(F, h, x), f)
        g = divmod_(F, g, gcd(F, g, found))[0]
        if len(g) > 1:
            g = monic(F, g)
            factors.extend(_equal_degree_split(F, g, d, rng))
            found = mul(F, found, g)
    return sorted(factors, key=lambda c: (len(c), [F.index_of(a) for a in c]))


def _equal_degree_split(F, g, d, rng):
    if len(g) - 1 == d:
        return [g]
    e = (F.order ** d - 1) // 2
    n = len(g) - 1
    while True:
        a = trim(F, [F.element_at(rng.randrange(F.order)) for _ in range(n)])
        if len(a) <= 1:
            continue
        b = sub(F, powmod(F, a, e, g), (F.one,))
        h = gcd(F, b, g)
        if 1 < len(h) < len(g):
            rest = monic(F, divmod_(F, g, h)[0])
            return _equal_degree_split(F, h, d, rng) + _equal_degree_split(F, rest, d, rng)
