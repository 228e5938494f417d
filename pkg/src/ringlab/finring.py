"""General finite rings presented by additive structure plus integer
structure constants.

A FiniteRing has additive group Z/m_1 + ... + Z/m_n (each m_i >= 2); an
element is a tuple of coordinates with coordinate i in [0, m_i).
``table[i][j]`` gives the coordinates of the product of the i-th and
j-th additive generators, and multiplication extends bilinearly.  For
that extension to be well defined the table must satisfy the
compatibility condition m_i * table[i][j][k] = 0 (mod m_k) and its
mirror in j; this is validated, as are associativity and the two-sided
unity, so invalid rings cannot be constructed.

Element encodings are mixed-radix integers: coordinate i has weight
m_1 * ... * m_{i-1}.  The conversion `as_finite_ring` sends an algebra
over GF(p^k) to its underlying ring on pn*k generators of order p, and
the integer encodings agree on the nose, so element sets computed in
either representation are directly comparable.
"""

from __future__ import annotations

import functools
import math

from . import gf
from .algebra import Algebra, make_algebra
from .errors import (
    AlgebraMismatch,
    BilinearityViolation,
    NotAssociative,
    NotUnital,
    ShapeMismatch,
)


class FiniteRing:
    """A finite unital ring; build through :func:`make_finite_ring`."""

    __slots__ = ("moduli", "table", "unity", "_memo")

    def __init__(self, moduli, table, unity):
        self.moduli = moduli
        self.table = table
        self.unity = unity
        self._memo = {}

    def __repr__(self):
        return f"FiniteRing(moduli={list(self.moduli)})"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteRing)
            and self.moduli == other.moduli
            and self.table == other.table
            and self.unity == other.unity
        )

    def __hash__(self):
        return hash((self.moduli, self.table, self.unity))

    @property
    def dim(self):
        return len(self.moduli)

    @property
    def size(self):
        out = 1
        for m in self.moduli:
            out *= m
        return out

    @property
    def zero(self):
        return (0,) * self.dim

    def basis(self, i):
        return tuple(1 if j == i else 0 for j in range(self.dim))

    # -- element arithmetic --------------------------------------------------

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x):
        return tuple((-a) % m for a, m in zip(x, self.moduli))

    def sub(self, x, y):
        return tuple((a - b) % m for a, b, m in zip(x, y, self.moduli))

    def mul(self, x, y):
        out = [0] * self.dim
        moduli = self.moduli
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                row = self.table[i][j]
                c = xi * yj
                for k, t in enumerate(row):
                    if t:
                        out[k] = (out[k] + c * t) % moduli[k]
        return tuple(out)

    def pow(self, x, e):
        if e < 0:
            raise ValueError("negative exponent")
        acc = self.unity
        for _ in range(e):
            acc = self.mul(acc, x)
        return acc

    # -- integer encodings ----------------------------------------------------

    def encode(self, x):
        code = 0
        for c, m in zip(reversed(x), reversed(self.moduli)):
            code = code * m + c
        return code

    def decode(self, code):
        out = []
        for m in self.moduli:
            out.append(code % m)
            code //= m
        return tuple(out)

    def elements(self):
        return (self.decode(c) for c in range(self.size))


def make_finite_ring(moduli, table, unity):
    """Validate and build a FiniteRing.

    Entries of ``table`` and ``unity`` are reduced modulo the modulus of
    their coordinate on load.  Raises ShapeMismatch, then
    BilinearityViolation(i, j, k), NotUnital(i), NotAssociative(i, j, k)
    in that order of checking.
    """
    moduli = tuple(moduli)
    n = len(moduli)
    if n < 1:
        raise ShapeMismatch("need at least one additive generator")
    for m in moduli:
        if not isinstance(m, int) or m < 2:
            raise ShapeMismatch("every additive order must be an integer >= 2")
    if len(table) != n:
        raise ShapeMismatch("table must have one row block per generator")
    norm = []
    for i, block in enumerate(table):
        if len(block) != n:
            raise ShapeMismatch(f"table row {i} has wrong length")
        rows = []
        for j, row in enumerate(block):
            if len(row) != n:
                raise ShapeMismatch(f"table entry ({i}, {j}) has wrong length")
            rows.append(tuple(int(c) % m for c, m in zip(row, moduli)))
        norm.append(tuple(rows))
    table = tuple(norm)
    if len(unity) != n:
        raise ShapeMismatch("unity vector has wrong length")
    unity = tuple(int(c) % m for c, m in zip(unity, moduli))

    # bilinear extension well defined: m_i annihilates row (i, j) and
    # m_j annihilates it too, coordinate by coordinate
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t = table[i][j][k]
                if (moduli[i] * t) % moduli[k] or (moduli[j] * t) % moduli[k]:
                    raise BilinearityViolation(i, j, k)

    ring = FiniteRing(moduli, table, unity)
    for i in range(n):
        e = ring.basis(i)
        if ring.mul(unity, e) != e or ring.mul(e, unity) != e:
            raise NotUnital(i)
    for i in range(n):
        ei = ring.basis(i)
        for j in range(n):
            left = table[i][j]
            for k in range(n):
                ek = ring.basis(k)
                if ring.mul(left, ek) != ring.mul(ei, table[j][k]):
                    raise NotAssociative(i, j, k)
    return ring


def characteristic(ring):
    """Additive order of the unity."""
    if isinstance(ring, Algebra):
        return ring.field.p
    c = 1
    for u, m in zip(ring.unity, ring.moduli):
        if u:
            c = math.lcm(c, m // math.gcd(u, m))
    return c


@functools.lru_cache(maxsize=None)
def _as_finite_ring_cached(alg):
    p, k, n = alg.field.p, alg.field.k, alg.dim
    f = alg.field
    moduli = [p] * (n * k)
    # additive generator (i, d) is beta^d * e_i where beta is the residue
    # of x; its integer encoding is p**(i*k + d), matching the algebra's
    beta_pows = [f.pow(p if k > 1 else 1, d) for d in range(2 * k - 1)]

    def digits(c):
        out = []
        for _ in range(k):
            out.append(c % p)
            c //= p
        return out

    table = []
    for i in range(n):
        for d in range(k):
            row_block = []
            for j in range(n):
                for e in range(k):
                    row = [0] * (n * k)
                    scale = beta_pows[d + e]
                    for m in range(n):
                        c = f.mul(alg.table[i][j][m], scale)
                        if c:
                            for g, dig in enumerate(digits(c)):
                                row[m * k + g] = dig
                    row_block.append(row)
            table.append(row_block)
    unity = []
    for c in alg.unity:
        unity.extend(digits(c))
    return make_finite_ring(moduli, table, unity)


def as_finite_ring(alg):
    """The underlying finite ring of an algebra, on n*k generators of
    additive order p.  Integer element encodings agree with the
    algebra's, so sets of encodings transfer unchanged."""
    if isinstance(alg, FiniteRing):
        return alg
    return _as_finite_ring_cached(alg)


def as_algebra(ring, field=None):
    """View a ring of prime characteristic p whose additive group is
    elementary abelian as an algebra over GF(p)."""
    if isinstance(ring, Algebra):
        return ring
    p = ring.moduli[0]
    if any(m != p for m in ring.moduli) or not gf.is_prime(p):
        raise AlgebraMismatch("additive group is not elementary abelian")
    if field is None:
        field = gf.make_field(p)
    if field.q != p:
        raise AlgebraMismatch("scalar field must be the prime field")
    return make_algebra(field, ring.dim, ring.table, ring.unity)


def make_zm(*moduli):
    """Componentwise product of the rings Z/m_i (a single modulus gives
    Z/m itself)."""
    moduli = tuple(int(m) for m in moduli)
    n = len(moduli)
    if n < 1:
        raise ShapeMismatch("need at least one modulus")
    zero = (0,) * n
    table = []
    for i in range(n):
        row_block = []
        for j in range(n):
            if i == j:
                row_block.append(tuple(1 if k == i else 0 for k in range(n)))
            else:
                row_block.append(zero)
        table.append(row_block)
    return make_finite_ring(moduli, table, (1,) * n)


def product_ring(a, b):
    """Direct product of two finite rings."""
    moduli = a.moduli + b.moduli
    na, nb = a.dim, b.dim
    n = na + nb
    zero = (0,) * n
    table = []
    for i in range(n):
        row_block = []
        for j in range(n):
            if i < na and j < na:
                row_block.append(tuple(a.table[i][j]) + (0,) * nb)
            elif i >= na and j >= na:
                row_block.append((0,) * na + tuple(b.table[i - na][j - na]))
            else:
                row_block.append(zero)
        table.append(row_block)
    unity = a.unity + b.unity
    return make_finite_ring(moduli, table, unity)
