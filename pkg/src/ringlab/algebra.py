"""Finite-dimensional unital associative algebras given by structure
constants over GF(p^k).

An Algebra of dimension n stores the full dense multiplication table:
``table[i][j]`` is the coordinate vector (n field encodings) of the
product of basis elements i and j.  Elements of the algebra are plain
length-n tuples of field encodings; the algebra object carries the
arithmetic.  Each element also has a single-integer encoding, the
mixed-radix value of its coordinates (coordinate i contributes
``coords[i] * q**i``), used for element sets and enumeration order.

Associativity and two-sidedness of the designated unity are validated at
construction; there is no way to hold an invalid Algebra.
"""

from __future__ import annotations

import functools
import itertools

from . import gf
from .config import enumeration_budget
from .errors import (
    AlgebraMismatch,
    BudgetExceeded,
    DimensionTooLarge,
    NotAssociative,
    NotUnital,
    ShapeMismatch,
)


class Algebra:
    """A unital associative algebra over a finite field.

    Build instances through :func:`make_algebra` or the ``make_*``
    builtins, which validate the table.
    """

    __slots__ = ("field", "dim", "table", "unity", "_memo")

    def __init__(self, field, dim, table, unity):
        self.field = field
        self.dim = dim
        self.table = table
        self.unity = unity
        self._memo = {}

    def __repr__(self):
        return f"Algebra(dim={self.dim} over {self.field!r})"

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.table == other.table
            and self.unity == other.unity
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.table, self.unity))

    # -- element arithmetic (coordinate tuples) -----------------------------

    @property
    def size(self):
        return self.field.q**self.dim

    @property
    def zero(self):
        return (0,) * self.dim

    def basis(self, i):
        return tuple(1 if j == i else 0 for j in range(self.dim))

    def add(self, x, y):
        f = self.field
        return tuple(f.add(a, b) for a, b in zip(x, y))

    def neg(self, x):
        f = self.field
        return tuple(f.neg(a) for a in x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scalar(self, c, x):
        f = self.field
        return tuple(f.mul(c, a) for a in x)

    def mul(self, x, y):
        f = self.field
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                coeff = f.mul(xi, yj)
                row = self.table[i][j]
                for m, t in enumerate(row):
                    if t:
                        out[m] = f.add(out[m], f.mul(coeff, t))
        return tuple(out)

    def pow(self, x, e):
        """x^e by iterated multiplication; x^0 is the unity."""
        if e < 0:
            raise ValueError("negative exponent")
        acc = self.unity
        for _ in range(e):
            acc = self.mul(acc, x)
        return acc

    # -- integer encodings ---------------------------------------------------

    def encode(self, x):
        q = self.field.q
        code = 0
        for c in reversed(x):
            code = code * q + c
        return code

    def decode(self, code):
        q = self.field.q
        out = []
        for _ in range(self.dim):
            out.append(code % q)
            code //= q
        return tuple(out)

    def elements(self):
        """All elements as coordinate tuples, in encoding order."""
        return (self.decode(c) for c in range(self.size))


def _check_shape(field, dim, table, unity):
    if dim < 1:
        raise ShapeMismatch("dimension must be at least 1")
    q = field.q
    if len(table) != dim:
        raise ShapeMismatch("table must have one row block per basis element")
    norm_table = []
    for i, block in enumerate(table):
        if len(block) != dim:
            raise ShapeMismatch(f"table row {i} has wrong length")
        rows = []
        for j, row in enumerate(block):
            if len(row) != dim:
                raise ShapeMismatch(f"table entry ({i}, {j}) has wrong length")
            for c in row:
                if not isinstance(c, int) or not 0 <= c < q:
                    raise ShapeMismatch(
                        f"table entry ({i}, {j}) has coordinate outside [0, {q})"
                    )
            rows.append(tuple(row))
        norm_table.append(tuple(rows))
    if len(unity) != dim:
        raise ShapeMismatch("unity vector has wrong length")
    for c in unity:
        if not isinstance(c, int) or not 0 <= c < q:
            raise ShapeMismatch(f"unity coordinate outside [0, {q})")
    return tuple(norm_table), tuple(unity)


def make_algebra(field, dim, table, unity):
    """Validate structure constants and return an Algebra.

    Raises ShapeMismatch for malformed data, NotUnital(i) when the
    designated unity fails against basis element i, and
    NotAssociative(i, j, k) for the first failing basis triple.
    """
    table, unity = _check_shape(field, dim, table, unity)
    alg = Algebra(field, dim, table, unity)
    for i in range(dim):
        e = alg.basis(i)
        if alg.mul(unity, e) != e or alg.mul(e, unity) != e:
            raise NotUnital(i)
    # bilinearity makes basis triples sufficient
    for i in range(dim):
        ei = alg.basis(i)
        for j in range(dim):
            left = alg.table[i][j]
            for k in range(dim):
                ek = alg.basis(k)
                if alg.mul(left, ek) != alg.mul(ei, alg.table[j][k]):
                    raise NotAssociative(i, j, k)
    return alg


def eval_poly(alg, coeffs, x):
    """Evaluate sum coeffs[i] * x^i; coefficients low degree first."""
    acc = alg.zero
    power = alg.unity
    for c in coeffs:
        if c:
            acc = alg.add(acc, alg.scalar(c, power))
        power = alg.mul(power, x)
    return acc


def frobenius_defect(alg, x):
    """x^q - x, the defect of x under the q-power map."""
    return alg.sub(alg.pow(x, alg.field.q), x)


def enumerate_ring(alg, budget=None):
    """All elements in encoding order, subject to the enumeration budget."""
    limit = enumeration_budget(budget)
    if alg.size > limit:
        raise BudgetExceeded(alg.size, limit)
    return alg.elements()


# ---------------------------------------------------------------------------
# builtins


def _budget_guard(field, dim):
    if field.q**dim > enumeration_budget():
        raise DimensionTooLarge(dim, f"q^dim exceeds the enumeration budget")


def make_S(field):
    """The three-dimensional algebra with basis 1, e1, e2 and relations
    ei * ej = ei for i, j in {1, 2}.

    This is the minimal noncommutative example: both x^q = x and
    x^q - x central have exactly q(q^2 - q + 1) solutions here.
    """
    _budget_guard(field, 3)
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    table = [
        [e[0], e[1], e[2]],
        [e[1], e[1], e[1]],
        [e[2], e[2], e[2]],
    ]
    return make_algebra(field, 3, table, (1, 0, 0))


def make_matrix(field, n):
    """Full matrix algebra of n x n matrices; basis element r*n + s is the
    matrix unit with a 1 in row r, column s."""
    if n < 1:
        raise ShapeMismatch("matrix size must be at least 1")
    dim = n * n
    _budget_guard(field, dim)
    zero = (0,) * dim

    def unit(r, s):
        v = [0] * dim
        v[r * n + s] = 1
        return tuple(v)

    table = []
    for i in range(dim):
        r, s = divmod(i, n)
        row_block = []
        for j in range(dim):
            t, u = divmod(j, n)
            row_block.append(unit(r, u) if s == t else zero)
        table.append(row_block)
    unity = [0] * dim
    for r in range(n):
        unity[r * n + r] = 1
    return make_algebra(field, dim, table, tuple(unity))


def make_triangular(field, n):
    """Upper triangular n x n matrices; basis indexed by pairs (r, s) with
    r <= s in lexicographic order."""
    if n < 1:
        raise ShapeMismatch("matrix size must be at least 1")
    pairs = [(r, s) for r in range(n) for s in range(r, n)]
    index = {rs: i for i, rs in enumerate(pairs)}
    dim = len(pairs)
    _budget_guard(field, dim)
    zero = (0,) * dim

    def unit(r, s):
        v = [0] * dim
        v[index[(r, s)]] = 1
        return tuple(v)

    table = []
    for r, s in pairs:
        row_block = []
        for t, u in pairs:
            row_block.append(unit(r, u) if s == t else zero)
        table.append(row_block)
    unity = [0] * dim
    for r in range(n):
        unity[index[(r, r)]] = 1
    return make_algebra(field, dim, table, tuple(unity))


def make_qring(field, n):
    """The split commutative algebra F_q^n with componentwise operations."""
    if n < 1:
        raise ShapeMismatch("number of components must be at least 1")
    _budget_guard(field, n)
    zero = (0,) * n

    def unit(i):
        v = [0] * n
        v[i] = 1
        return tuple(v)

    table = [
        [unit(i) if i == j else zero for j in range(n)] for i in range(n)
    ]
    return make_algebra(field, n, table, (1,) * n)


def make_product(a, b):
    """Direct product of two algebras over the same field."""
    if a.field != b.field:
        raise AlgebraMismatch("product factors must share the field")
    field = a.field
    dim = a.dim + b.dim
    _budget_guard(field, dim)
    zero = (0,) * dim

    def emb_a(x):
        return tuple(x) + (0,) * b.dim

    def emb_b(x):
        return (0,) * a.dim + tuple(x)

    table = []
    for i in range(dim):
        row_block = []
        for j in range(dim):
            if i < a.dim and j < a.dim:
                row_block.append(emb_a(a.table[i][j]))
            elif i >= a.dim and j >= a.dim:
                row_block.append(emb_b(b.table[i - a.dim][j - a.dim]))
            else:
                row_block.append(zero)
        table.append(row_block)
    unity = tuple(a.unity) + tuple(b.unity)
    return make_algebra(field, dim, table, unity)
