"""Exact arithmetic in the finite field GF(p^k).

Elements are encoded as plain integers in [0, q) with q = p^k.  The
base-p digits of an encoding, read low digit first, are the coefficients
of a residue polynomial of degree < k over Z/p.  Encoding 0 is the
additive identity and encoding 1 the multiplicative identity.  For k = 1
this is just arithmetic mod p.

Every field for a given (p, k) uses the same modulus: the
lexicographically least monic irreducible polynomial of degree k over
Z/p, least meaning smallest integer encoding of the coefficient vector.
That makes field construction deterministic, so two fields built for
equal (p, k) are interchangeable (indeed the same cached object).

Powers use the convention 0^0 = 1.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import DegreeOutOfRange, DivisionByZero, FieldTooLarge, NotPrime

FIELD_BOUND = 1 << 16

# q x q operation tables are materialized lazily up to this size; they feed
# the scan kernels and speed up scalar arithmetic on small fields.
_TABLE_LIMIT = 1024


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over Z/p; coefficient lists, low degree first, trimmed


def _digits(code, p, width):
    out = []
    for _ in range(width):
        out.append(code % p)
        code //= p
    return out


def _undigits(coeffs, p):
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_rem(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    r = list(a)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - dm
            for i, ci in enumerate(m):
                r[shift + i] = (r[shift + i] - lead * ci) % p
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            divisor = _digits(code, p, d) + [1]
            if not _poly_rem(poly, divisor, p):
                return False
    return True


def _least_irreducible(p, k):
    for code in range(p**k):
        candidate = _digits(code, p, k) + [1]
        if _is_irreducible(candidate, p):
            return candidate
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------


class FieldSpec:
    """The field GF(p^k); arithmetic on integer-encoded elements."""

    __slots__ = ("p", "k", "q", "modulus", "_tables")

    def __init__(self, p, k, modulus):
        self.p = p
        self.k = k
        self.q = p**k
        # monic modulus as a coefficient list of length k + 1, low degree
        # first; for k = 1 it is x itself and never consulted
        self.modulus = tuple(modulus)
        self._tables = None

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec) and self.p == other.p and self.k == other.k
        )

    def __hash__(self):
        return hash((FieldSpec, self.p, self.k))

    # -- scalar arithmetic --------------------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.k):
            out += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.k):
            out += ((-a) % p) * shift
            a //= p
            shift *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        prod = _poly_mul(_digits(a, self.p, self.k), _digits(b, self.p, self.k), self.p)
        return _undigits(_poly_rem(prod, self.modulus, self.p), self.p)

    def pow(self, a, e):
        """a^e by square and multiply, with 0^0 = 1."""
        if e < 0:
            raise ValueError("negative exponent")
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.q - 2)

    def elements(self):
        """All elements in encoding order."""
        return range(self.q)

    # -- bulk operation tables (consumed by the scan kernels) ---------------

    def tables(self):
        """(add, mul, neg) as numpy int64 arrays; add/mul are q x q."""
        if self._tables is None:
            if self.q > _TABLE_LIMIT:
                raise FieldTooLarge(self.q, _TABLE_LIMIT)
            q = self.q
            add = np.empty((q, q), dtype=np.int64)
            mul = np.empty((q, q), dtype=np.int64)
            neg = np.empty(q, dtype=np.int64)
            for a in range(q):
                neg[a] = self.neg(a)
                for b in range(a, q):
                    s = self.add(a, b)
                    m = self.mul(a, b)
                    add[a, b] = add[b, a] = s
                    mul[a, b] = mul[b, a] = m
            self._tables = (add, mul, neg)
        return self._tables


@functools.lru_cache(maxsize=None)
def _build_field(p, k):
    return FieldSpec(p, k, _least_irreducible(p, k))


def make_field(p, k=1, bound=FIELD_BOUND):
    """Construct GF(p^k) with the canonical (least) irreducible modulus."""
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(p)
    if not isinstance(k, int) or k < 1:
        raise DegreeOutOfRange(k)
    q = p**k
    if q > bound:
        raise FieldTooLarge(q, bound)
    return _build_field(p, k)


def enumerate_field(field):
    """Elements of the field in encoding order."""
    return field.elements()


def power_sum(field, r):
    """Sum of x^r over every field element (with 0^0 = 1).

    For r >= 1 this is -1 when (q - 1) divides r and 0 otherwise; the
    computation here is the direct exhaustive sum, not that formula.
    """
    if r < 0:
        raise ValueError("negative exponent")
    total = 0
    for a in field.elements():
        total = field.add(total, field.pow(a, r))
    return total
