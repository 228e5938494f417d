"""Structural queries on finite rings and algebras.

Everything here works on either representation (Algebra or FiniteRing)
through the shared integer element encoding.  Results come back as
:class:`ElementSet` values carrying exact cardinalities; densities are
`fractions.Fraction`, never floats.

The implementations lean on the scan kernels for the element sweeps but
the definitions are the mathematical ones: the center is the commutant
of the additive generators (which suffices by bilinearity, with an
exhaustive cross-check mode), the Jacobson radical is the set of x for
which 1 - a*x is invertible for every a, and isomorphism testing
searches unity-preserving additive isomorphisms that intertwine the
multiplications, returning an explicit witness.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from . import kernels
from .algebra import Algebra, make_algebra
from .config import enumeration_budget
from .errors import (
    AlgebraMismatch,
    BudgetExceeded,
    NotAnIdeal,
    ValidationError,
)
from .finring import as_finite_ring, make_finite_ring


# -- element sets -------------------------------------------------------------


@dataclass(frozen=True)
class ElementSet:
    """A subset of a ring, stored as sorted integer encodings."""

    parent: object
    members: tuple

    @property
    def cardinality(self):
        return len(self.members)

    @property
    def density(self):
        return Fraction(len(self.members), self.parent.size)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, enc):
        enc = int(enc)
        i = bisect_left(self.members, enc)
        return i < len(self.members) and self.members[i] == enc

    def decoded(self):
        """The members as coordinate tuples."""
        return [self.parent.decode(m) for m in self.members]

    def issubset(self, other):
        return all(m in other for m in self.members)


def _eset(parent, encodings):
    return ElementSet(parent, tuple(sorted(int(e) for e in set(encodings))))


def _enc(ring, x):
    if isinstance(x, (int, np.integer)):
        return int(x)
    return ring.encode(x)


def _budget_check(size, budget=None):
    limit = enumeration_budget(budget)
    if size > limit:
        raise BudgetExceeded(size, limit)


# -- centers, centralizers, solution sets -------------------------------------


def center(ring, exhaustive=False, budget=None):
    """Elements commuting with everything.

    Commuting with each additive generator suffices (multiplication is
    bilinear in the coordinates), which keeps the scan linear in |R|;
    pass exhaustive=True to cross-check against all pairs.
    """
    key = ("center", bool(exhaustive))
    hit = ring._memo.get(key)
    if hit is not None:
        return hit
    rd = kernels.ring_data(ring)
    _budget_check(rd.size, budget)
    if exhaustive:
        targets = np.arange(rd.size, dtype=np.int64)
    else:
        targets = rd.weights.copy()
    out = _eset(ring, kernels.scan_commutant(rd, targets))
    ring._memo[key] = out
    return out


def centralizer(ring, b):
    """Elements commuting with the fixed element b."""
    rd = kernels.ring_data(ring)
    targets = np.array([_enc(ring, b)], dtype=np.int64)
    return _eset(ring, kernels.scan_commutant(rd, targets))


def power_solutions(ring, m):
    """The solutions of x^m = x."""
    m = int(m)
    if m < 2:
        raise ValidationError(f"exponent must be at least 2, got {m}")
    key = ("power_solutions", m)
    hit = ring._memo.get(key)
    if hit is not None:
        return hit
    rd = kernels.ring_data(ring)
    out = _eset(ring, kernels.fixpoints(rd, m))
    ring._memo[key] = out
    return out


def idempotents(ring):
    """The solutions of x^2 = x."""
    return power_solutions(ring, 2)


def central_defect_solutions(alg):
    """Elements whose q-th-power defect x^q - x lands in the center.

    Needs the algebra representation (the exponent is the field size).
    """
    if not isinstance(alg, Algebra):
        raise AlgebraMismatch("central defect set needs an algebra over GF(q)")
    key = ("central_defect_solutions",)
    hit = alg._memo.get(key)
    if hit is not None:
        return hit
    rd = kernels.ring_data(alg)
    defects = kernels.power_defects(rd, alg.field.q)
    mask = np.zeros(rd.size, dtype=bool)
    mask[list(center(alg).members)] = True
    out = _eset(alg, np.flatnonzero(mask[defects]))
    alg._memo[key] = out
    return out


def central_idempotents(ring):
    """Idempotents lying in the center."""
    cen = center(ring)
    return _eset(ring, (e for e in idempotents(ring) if e in cen))


def units(ring):
    """Elements with a two-sided multiplicative inverse."""
    key = ("units",)
    hit = ring._memo.get(key)
    if hit is not None:
        return hit
    rd = kernels.ring_data(ring)
    out = _eset(ring, np.flatnonzero(kernels.scan_units(rd)))
    ring._memo[key] = out
    return out


def jacobson_radical(ring, budget=None):
    """The x such that 1 - a*x is invertible for every a.

    In a finite ring this quasi-regularity test characterizes the
    Jacobson radical exactly; invertibility is two-sided by exhaustive
    search.
    """
    key = ("jacobson_radical",)
    hit = ring._memo.get(key)
    if hit is not None:
        return hit
    rd = kernels.ring_data(ring)
    _budget_check(rd.size, budget)
    unit_mask = np.zeros(rd.size, dtype=np.uint8)
    unit_mask[list(units(ring).members)] = 1
    out = _eset(ring, kernels.scan_radical(rd, unit_mask))
    ring._memo[key] = out
    return out


def generated_subring(ring, gens, budget=None):
    """Smallest subset containing gens and the unity that is closed
    under addition, negation, and multiplication; for algebras the
    scalar line is adjoined so the result is also scalar-closed."""
    rd = kernels.ring_data(ring)
    _budget_check(rd.size, budget)
    seeds = [_enc(ring, g) for g in gens]
    if isinstance(ring, Algebra):
        seeds.extend(
            ring.encode(ring.scalar(f, ring.unity)) for f in ring.field.elements()
        )
    arr = np.array(sorted(set(seeds)), dtype=np.int64)
    return _eset(ring, kernels.closure_scan(rd, arr))


# -- predicates ---------------------------------------------------------------


def is_commutative(ring):
    """True when the multiplication table is symmetric (which by
    bilinearity settles all pairs)."""
    table = ring.table
    n = len(table)
    return all(table[i][j] == table[j][i] for i in range(n) for j in range(i))


def is_boolean(ring):
    """True when every element is an idempotent."""
    return len(idempotents(ring)) == ring.size


def is_q_ring(alg):
    """True when the algebra is a finite product of copies of its scalar
    field: commutative, x^q = x throughout, and every indecomposable
    factor is a field with exactly q elements."""
    if not isinstance(alg, Algebra):
        raise AlgebraMismatch("q-ring test needs an algebra over GF(q)")
    q = alg.field.q
    if not is_commutative(alg):
        return False
    if len(power_solutions(alg, q)) != alg.size:
        return False
    for factor in decompose(alg):
        if factor.size != q:
            return False
        if len(units(factor)) != q - 1:  # a field: every nonzero element a unit
            return False
    return True


# -- ideals, quotients, decomposition -----------------------------------------


def is_ideal(ring, subset):
    """Whether the subset is a two-sided ideal: an additive subgroup
    absorbing multiplication by every ring element (tested against the
    scaled additive generators, which suffices by bilinearity)."""
    rd = kernels.ring_data(ring)
    members = set(int(m) for m in subset)
    if 0 not in members:
        return False
    for x in members:
        if kernels.neg_enc(rd, x) not in members:
            return False
        for y in members:
            if kernels.add_enc(rd, x, y) not in members:
                return False
    gens = [int(w) for w in rd.weights]
    if isinstance(ring, Algebra):
        scaled = []
        for g in rd.weights:
            for f in ring.field.elements():
                if f:
                    coords = ring.scalar(f, ring.decode(int(g)))
                    scaled.append(ring.encode(coords))
        gens = sorted(set(scaled))
    for x in members:
        for g in gens:
            if kernels.mul_enc(rd, g, x) not in members:
                return False
            if kernels.mul_enc(rd, x, g) not in members:
                return False
    return True


def _additive_order(rd, enc):
    t = 1
    acc = enc
    while acc != 0:
        acc = kernels.add_enc(rd, acc, enc)
        t += 1
    return t


def _abelian_basis(labels, add, neg, zero):
    """A mixed-radix basis of a finite abelian group given by a label
    set and its operations: returns (gens, orders, digits) with digits
    mapping every label to its unique coefficient tuple.

    Greedy largest-order-first choice with a direct-sum extension test,
    falling back to depth-first search across choices (always succeeds:
    the group is finite abelian and all bases are explored).
    """
    total = len(labels)
    if total == 1:
        return [], [], {zero: ()}

    def order_of(g):
        t, acc = 1, g
        while acc != zero:
            acc = add(acc, g)
            t += 1
        return t

    orders = {g: order_of(g) for g in labels}
    candidates = sorted(labels, key=lambda g: (-orders[g], g))

    def extend(span, g):
        o = orders[g]
        if len(span) * o > total or total % (len(span) * o):
            return None
        new = dict(span)
        step = zero
        for c in range(1, o):
            step = add(step, g)
            for lab, digs in span.items():
                mixed = add(lab, step)
                if mixed in new:
                    return None
                new[mixed] = digs + (c,)
        for lab in span:
            new[lab] = new[lab] + (0,)
        return new

    def dfs(span, gens):
        if len(span) == total:
            return gens, span
        for g in candidates:
            if g in span:
                continue
            grown = extend(span, g)
            if grown is None:
                continue
            hit = dfs(grown, gens + [g])
            if hit is not None:
                return hit
        return None

    hit = dfs({zero: ()}, [])
    if hit is None:  # unreachable for an actual abelian group
        raise ValidationError("additive structure is not a finite abelian group")
    gens, span = hit
    return gens, [orders[g] for g in gens], span


def _materialize(labels, add, neg, mul, zero, unity):
    """Present an abstract finite ring (labels plus operations) as a
    FiniteRing in coordinates adapted to its additive group."""
    gens, orders, digits = _abelian_basis(labels, add, neg, zero)
    if not gens:
        raise ValidationError("the zero ring has no unital presentation")
    table = [
        [digits[mul(gi, gj)] for gj in gens]
        for gi in gens
    ]
    return make_finite_ring(orders, table, digits[unity])


def quotient_ring(ring, ideal):
    """The ring of additive cosets of a two-sided ideal.

    The zero ideal returns the ring unchanged; quotienting by the whole
    ring (the zero quotient) is rejected since unital rings here have
    1 != 0.
    """
    members = sorted(int(m) for m in ideal)
    if not is_ideal(ring, members):
        raise NotAnIdeal(f"{len(members)} elements do not form a two-sided ideal")
    if members == [0]:
        return ring
    if len(members) == ring.size:
        raise ValidationError("quotient by the whole ring is the zero ring")
    rd = kernels.ring_data(ring)
    mem = set(members)

    rep = {}
    for x in range(rd.size):
        if x in rep:
            continue
        coset = sorted(kernels.add_enc(rd, x, j) for j in mem)
        lead = coset[0]
        for y in coset:
            rep[y] = lead

    labels = sorted(set(rep.values()))
    return _materialize(
        labels,
        lambda x, y: rep[kernels.add_enc(rd, x, y)],
        lambda x: rep[kernels.neg_enc(rd, x)],
        lambda x, y: rep[kernels.mul_enc(rd, x, y)],
        rep[0],
        rep[rd.unity],
    )


def _subring_as_ring(ring, members, unity_enc):
    rd = kernels.ring_data(ring)
    return _materialize(
        sorted(int(m) for m in members),
        lambda x, y: kernels.add_enc(rd, x, y),
        lambda x: kernels.neg_enc(rd, x),
        lambda x, y: kernels.mul_enc(rd, x, y),
        0,
        int(unity_enc),
    )


def decompose(ring):
    """Indecomposable factors whose direct product is the ring.

    Splits at the first nontrivial central idempotent e into the Peirce
    pieces e*R and (1-e)*R, recursing; a ring without nontrivial
    central idempotents comes back as the one-element list [ring].
    """
    rd = kernels.ring_data(ring)
    for e in central_idempotents(ring):
        if e == 0 or e == rd.unity:
            continue
        comp = kernels.sub_enc(rd, rd.unity, e)
        part_e = {kernels.mul_enc(rd, e, x) for x in range(rd.size)}
        part_c = {kernels.mul_enc(rd, comp, x) for x in range(rd.size)}
        left = _subring_as_ring(ring, part_e, e)
        right = _subring_as_ring(ring, part_c, comp)
        return decompose(left) + decompose(right)
    return [ring]


# -- matrices over GF(q) ------------------------------------------------------


def mat_mul(field, a, b):
    n = len(a)
    return tuple(
        tuple(
            _dot(field, a[i], [b[k][j] for k in range(n)])
            for j in range(n)
        )
        for i in range(n)
    )


def _dot(field, row, col):
    acc = 0
    for x, y in zip(row, col):
        acc = field.add(acc, field.mul(x, y))
    return acc


def mat_inv(field, m):
    """Inverse over GF(q) by Gauss-Jordan elimination; None when the
    matrix is singular."""
    n = len(m)
    work = [list(row) for row in m]
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = field.inv(work[col][col])
        work[col] = [field.mul(scale, v) for v in work[col]]
        inv[col] = [field.mul(scale, v) for v in inv[col]]
        for r in range(n):
            if r == col or not work[r][col]:
                continue
            factor = work[r][col]
            work[r] = [
                field.sub(v, field.mul(factor, w))
                for v, w in zip(work[r], work[col])
            ]
            inv[r] = [
                field.sub(v, field.mul(factor, w))
                for v, w in zip(inv[r], inv[col])
            ]
    return tuple(tuple(row) for row in inv)


def mat_is_invertible(field, m):
    return mat_inv(field, m) is not None


@lru_cache(maxsize=None)
def unity_pinned_matrices(field, dim, budget=None):
    """All invertible dim x dim matrices over the field whose first
    column is the first standard basis vector, as an int64 batch for the
    isomorphism kernel.  These are exactly the coordinate changes
    between presentations that pin the unity to basis element 0."""
    q = field.q
    count = q ** (dim * (dim - 1))
    _budget_check(count, budget)
    mats = []
    vectors = list(itertools.product(field.elements(), repeat=dim))
    e0 = tuple(1 if i == 0 else 0 for i in range(dim))
    for cols in itertools.product(vectors, repeat=dim - 1):
        m = tuple(
            tuple(col[r] for col in (e0,) + cols) for r in range(dim)
        )
        if mat_is_invertible(field, m):
            mats.append(m)
    return np.ascontiguousarray(np.array(mats, dtype=np.int64))


# -- isomorphism --------------------------------------------------------------


def _additive_order_profile(ring):
    rd = kernels.ring_data(ring)
    counts = {}
    if isinstance(ring, Algebra):
        p = ring.field.p
        counts = {1: 1, p: rd.size - 1}
    else:
        for x in range(rd.size):
            coords = ring.decode(x)
            o = 1
            for c, m in zip(coords, ring.moduli):
                o = o * (m // gcd(c, m)) // gcd(o, m // gcd(c, m))
            counts[o] = counts.get(o, 0) + 1
    return tuple(sorted(counts.items()))


def iso_profile(ring):
    """Isomorphism-invariant fingerprint used for pruning and census
    bucketing: cardinality, additive order histogram, commutativity,
    and the sizes of center, idempotent set, unit group, and radical."""
    key = ("iso_profile",)
    hit = ring._memo.get(key)
    if hit is not None:
        return hit
    prof = (
        ring.size,
        _additive_order_profile(ring),
        is_commutative(ring),
        len(center(ring)),
        len(idempotents(ring)),
        len(units(ring)),
        len(jacobson_radical(ring)),
    )
    ring._memo[key] = prof
    return prof


def _normalize_unity(alg):
    """An isomorphic copy of the algebra whose unity is basis element 0,
    together with the change-of-basis matrix P (columns = old
    coordinates of the new basis vectors)."""
    e0 = tuple(1 if i == 0 else 0 for i in range(alg.dim))
    if alg.unity == e0:
        ident = tuple(tuple(1 if i == j else 0 for j in range(alg.dim)) for i in range(alg.dim))
        return alg, ident
    hit = alg._memo.get(("unity_normal",))
    if hit is not None:
        return hit
    field, n = alg.field, alg.dim
    cols = [alg.unity]
    for i in range(n):
        probe = tuple(1 if j == i else 0 for j in range(n))
        trial = cols + [probe]
        m = tuple(tuple(c[r] for c in trial) for r in range(n))  # n x len(trial)
        if _rank(field, m) == len(trial):
            cols.append(probe)
        if len(cols) == n:
            break
    p = tuple(tuple(c[r] for c in cols) for r in range(n))
    p_inv = mat_inv(field, p)
    basis_vectors = cols
    table = []
    for vi in basis_vectors:
        row = []
        for vj in basis_vectors:
            prod = alg.mul(vi, vj)
            row.append(_apply_mat(field, p_inv, prod))
        table.append(row)
    normal = make_algebra(field, n, table, e0)
    out = (normal, p)
    alg._memo[("unity_normal",)] = out
    return out


def _apply_mat(field, m, vec):
    n = len(vec)
    return tuple(_dot(field, m[i], vec) for i in range(n))


def _rank(field, m):
    rows = len(m)
    if rows == 0:
        return 0
    cols = len(m[0])
    work = [list(r) for r in m]
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if work[r][c]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        scale = field.inv(work[rank][c])
        work[rank] = [field.mul(scale, v) for v in work[rank]]
        for r in range(rows):
            if r != rank and work[r][c]:
                f = work[r][c]
                work[r] = [field.sub(v, field.mul(f, w)) for v, w in zip(work[r], work[rank])]
        rank += 1
    return rank


def _algebra_iso(a, b, budget=None):
    """Witness matrix mapping a to b (columns = images of a's basis in
    b's coordinates), or None."""
    field, n = a.field, a.dim
    na, pa = _normalize_unity(a)
    nb, pb = _normalize_unity(b)
    mats = unity_pinned_matrices(field, n, budget)
    ta = kernels.ring_data(na).table
    tb = kernels.ring_data(nb).table
    fadd, fmul, _ = field.tables()
    idx = kernels.table_iso_scan(n, fadd, fmul, ta, tb, mats)
    if idx < 0:
        return None
    m = tuple(tuple(int(v) for v in row) for row in mats[int(idx)])
    pa_inv = mat_inv(field, pa)
    return mat_mul(field, pb, mat_mul(field, m, pa_inv))


def _element_invariants(ring, rd):
    """Per-element fingerprints preserved by any isomorphism: additive
    order, centrality, idempotency, unit flag, and (for units) the
    multiplicative order."""
    cen = center(ring)
    idem = idempotents(ring)
    unit_mask = np.zeros(rd.size, dtype=bool)
    unit_mask[list(units(ring).members)] = True
    out = []
    for x in range(rd.size):
        if unit_mask[x]:
            t, acc = 1, x
            while acc != rd.unity:
                acc = kernels.mul_enc(rd, acc, x)
                t += 1
            mul_order = t
        else:
            mul_order = -1
        out.append(
            (
                _additive_order(rd, x),
                x in cen,
                x in idem,
                bool(unit_mask[x]),
                mul_order,
            )
        )
    return out


def _generating_set(rd):
    gens = []
    covered = set(int(v) for v in kernels.closure_scan(rd, np.array([], dtype=np.int64)))
    while len(covered) < rd.size:
        nxt = next(x for x in range(rd.size) if x not in covered)
        gens.append(nxt)
        covered = set(
            int(v)
            for v in kernels.closure_scan(rd, np.array(gens, dtype=np.int64))
        )
    return gens


def _extend_map(rda, rdb, pairs):
    """Grow a partial unity-preserving homomorphism along the subring
    closure of the assigned generators; None on any inconsistency."""
    mapping = {}
    order = []

    def push(x, y):
        got = mapping.get(x)
        if got is not None:
            return got == y
        mapping[x] = y
        order.append(x)
        return True

    if not push(rda.unity, rdb.unity):
        return None
    for x, y in pairs:
        if not push(int(x), int(y)):
            return None
    head = 0
    while head < len(order):
        x = order[head]
        y = mapping[x]
        head += 1
        if not push(kernels.neg_enc(rda, x), kernels.neg_enc(rdb, y)):
            return None
        snapshot = len(order)
        for idx in range(snapshot):
            u = order[idx]
            v = mapping[u]
            if not push(kernels.add_enc(rda, u, x), kernels.add_enc(rdb, v, y)):
                return None
            if not push(kernels.mul_enc(rda, u, x), kernels.mul_enc(rdb, v, y)):
                return None
            if not push(kernels.mul_enc(rda, x, u), kernels.mul_enc(rdb, y, v)):
                return None
    if len(set(mapping.values())) != len(mapping):
        return None
    return mapping


def _ring_iso(a, b, budget=None):
    """Witness mapping (list: image encoding per element encoding) for
    finite rings, or None; backtracking over generator images pruned by
    per-element invariants."""
    rda = kernels.ring_data(a)
    rdb = kernels.ring_data(b)
    inv_a = _element_invariants(a, rda)
    inv_b = _element_invariants(b, rdb)
    if sorted(inv_a) != sorted(inv_b):
        return None
    gens = _generating_set(rda)
    by_inv = {}
    for y, iv in enumerate(inv_b):
        by_inv.setdefault(iv, []).append(y)
    limit = enumeration_budget(budget)
    attempts = 0

    def backtrack(k, pairs):
        nonlocal attempts
        if k == len(gens):
            final = _extend_map(rda, rdb, pairs)
            if final is not None and len(final) == rda.size:
                return final
            return None
        g = gens[k]
        for y in by_inv.get(inv_a[g], ()):
            attempts += 1
            if attempts > limit:
                raise BudgetExceeded(attempts, limit)
            partial = _extend_map(rda, rdb, pairs + [(g, y)])
            if partial is None:
                continue
            hit = backtrack(k + 1, pairs + [(g, y)])
            if hit is not None:
                return hit
        return None

    mapping = backtrack(0, [])
    if mapping is None:
        return None
    return [mapping[x] for x in range(rda.size)]


def is_isomorphic(a, b, budget=None):
    """An explicit isomorphism witness from a to b, or None.

    Same-field algebras get a coordinate-change matrix (columns are the
    images of a's basis vectors); anything else is compared in additive
    form and gets the full element mapping.  The search is exhaustive
    within the budget, so None means the rings are not isomorphic.
    """
    if a is b:
        if isinstance(a, Algebra):
            return tuple(
                tuple(1 if i == j else 0 for j in range(a.dim))
                for i in range(a.dim)
            )
        return list(range(a.size))
    if a.size != b.size:
        return None
    if iso_profile(a) != iso_profile(b):
        return None
    if isinstance(a, Algebra) and isinstance(b, Algebra) and a.field == b.field:
        return _algebra_iso(a, b, budget)
    return _ring_iso(as_finite_ring(a), as_finite_ring(b), budget)


def check_isomorphism(a, b, witness):
    """Re-verify a witness produced by is_isomorphic in isolation."""
    if witness is None:
        return False
    if isinstance(a, Algebra) and isinstance(b, Algebra) and not isinstance(witness, list):
        field = a.field
        if not mat_is_invertible(field, witness):
            return False
        if _apply_mat(field, witness, a.unity) != b.unity:
            return False
        for i in range(a.dim):
            ei = a.basis(i)
            for j in range(a.dim):
                ej = a.basis(j)
                lhs = _apply_mat(field, witness, a.mul(ei, ej))
                rhs = b.mul(
                    _apply_mat(field, witness, ei),
                    _apply_mat(field, witness, ej),
                )
                if lhs != rhs:
                    return False
        return True
    ra, rb = as_finite_ring(a), as_finite_ring(b)
    rda, rdb = kernels.ring_data(ra), kernels.ring_data(rb)
    if sorted(witness) != list(range(ra.size)):
        return False
    if witness[rda.unity] != rdb.unity:
        return False
    for x in range(ra.size):
        for y in range(ra.size):
            if witness[kernels.add_enc(rda, x, y)] != kernels.add_enc(
                rdb, witness[x], witness[y]
            ):
                return False
            if witness[kernels.mul_enc(rda, x, y)] != kernels.mul_enc(
                rdb, witness[x], witness[y]
            ):
                return False
    return True
