"""Pure-Python scan kernels.

Mirror of the compiled module `_ckern`: same function names, same
argument conventions, same results.  Everything here works on integer
element encodings; rings are described by a context built with
`make_ctx`.  Two coordinate modes exist:

* modular mode: coordinate i lives in Z/radices[i], products reduce
  modulo the target coordinate's radix;
* field mode: coordinates are GF(q) encodings and all coefficient
  arithmetic goes through the q x q add/mul tables.

The compiled backend is selected automatically when present; this module
keeps the package fully functional without it.
"""

from types import SimpleNamespace

import numpy as np


def make_ctx(n, size, radices, weights, table, unity, field_mode, fadd, fmul, fneg):
    """Bundle ring description arrays into a context for the kernels."""
    return SimpleNamespace(
        n=n,
        size=size,
        radices=[int(v) for v in radices],
        weights=[int(v) for v in weights],
        table=[[list(map(int, row)) for row in block] for block in table],
        unity=int(unity),
        field_mode=bool(field_mode),
        fadd=[list(map(int, row)) for row in fadd] if field_mode else None,
        fmul=[list(map(int, row)) for row in fmul] if field_mode else None,
        fneg=[int(v) for v in fneg] if field_mode else None,
    )


def _decode(c, x):
    return [(x // w) % r for w, r in zip(c.weights, c.radices)]


def _encode(c, coords):
    return sum(v * w for v, w in zip(coords, c.weights))


def enc_mul(c, x, y):
    xc = _decode(c, x)
    yc = _decode(c, y)
    n = c.n
    out = [0] * n
    if c.field_mode:
        fadd, fmul = c.fadd, c.fmul
        for i in range(n):
            xi = xc[i]
            if not xi:
                continue
            ti = c.table[i]
            for j in range(n):
                yj = yc[j]
                if not yj:
                    continue
                coeff = fmul[xi][yj]
                row = ti[j]
                for m in range(n):
                    t = row[m]
                    if t:
                        out[m] = fadd[out[m]][fmul[coeff][t]]
    else:
        radices = c.radices
        for i in range(n):
            xi = xc[i]
            if not xi:
                continue
            ti = c.table[i]
            for j in range(n):
                yj = yc[j]
                if not yj:
                    continue
                coeff = xi * yj
                row = ti[j]
                for m in range(n):
                    t = row[m]
                    if t:
                        out[m] = (out[m] + coeff * t) % radices[m]
    return _encode(c, out)


def enc_add(c, x, y):
    xc = _decode(c, x)
    yc = _decode(c, y)
    if c.field_mode:
        fadd = c.fadd
        out = [fadd[a][b] for a, b in zip(xc, yc)]
    else:
        out = [(a + b) % r for a, b, r in zip(xc, yc, c.radices)]
    return _encode(c, out)


def enc_neg(c, x):
    xc = _decode(c, x)
    if c.field_mode:
        out = [c.fneg[a] for a in xc]
    else:
        out = [(-a) % r for a, r in zip(xc, c.radices)]
    return _encode(c, out)


def enc_sub(c, x, y):
    return enc_add(c, x, enc_neg(c, y))


def enc_pow(c, x, e):
    acc = c.unity
    for _ in range(e):
        acc = enc_mul(c, acc, x)
    return acc


def power_defects(c, e):
    """Array d with d[x] = encoding of x^e - x, for every element x."""
    out = np.empty(c.size, dtype=np.int64)
    for x in range(c.size):
        out[x] = enc_sub(c, enc_pow(c, x, e), x)
    return out


def scan_commutant(c, targets):
    """Sorted encodings of elements commuting with every target."""
    targets = [int(t) for t in targets]
    hits = []
    for x in range(c.size):
        ok = True
        for t in targets:
            if enc_mul(c, x, t) != enc_mul(c, t, x):
                ok = False
                break
        if ok:
            hits.append(x)
    return np.array(hits, dtype=np.int64)


def scan_units(c):
    """Byte mask over all elements: 1 where a two-sided inverse exists."""
    out = np.zeros(c.size, dtype=np.uint8)
    unity = c.unity
    for x in range(c.size):
        for y in range(c.size):
            if enc_mul(c, x, y) == unity and enc_mul(c, y, x) == unity:
                out[x] = 1
                break
    return out


def scan_radical(c, unit_mask):
    """Sorted encodings of x such that 1 - a*x is invertible for all a."""
    unit_mask = np.asarray(unit_mask, dtype=np.uint8)
    hits = []
    unity = c.unity
    for x in range(c.size):
        ok = True
        for a in range(c.size):
            if not unit_mask[enc_sub(c, unity, enc_mul(c, a, x))]:
                ok = False
                break
        if ok:
            hits.append(x)
    return np.array(hits, dtype=np.int64)


def closure_scan(c, seeds):
    """Smallest subset containing the seeds and the unity, closed under
    addition, negation, and multiplication.  Sorted encodings."""
    member = bytearray(c.size)
    order = []

    def push(z):
        if not member[z]:
            member[z] = 1
            order.append(z)

    push(c.unity)
    for s in seeds:
        push(int(s))
    head = 0
    while head < len(order):
        y = order[head]
        head += 1
        push(enc_neg(c, y))
        # pair y against everything discovered so far (including itself);
        # later members pick up their pairs with y when they are popped
        snapshot = len(order)
        for idx in range(snapshot):
            x = order[idx]
            push(enc_add(c, x, y))
            push(enc_mul(c, x, y))
            push(enc_mul(c, y, x))
    return np.array(sorted(order), dtype=np.int64)


def lemma_sweep(c, scalars, defects, center_mask):
    """For every pair (a, b) with b's power defect central and ab != ba,
    search a scalar f with the defect of a + f*b outside the centralizer
    of b.  Returns packed failures a * size + b; empty means every such
    pair has a witness."""
    scalars = [int(s) for s in scalars]
    defects = np.asarray(defects, dtype=np.int64)
    center_mask = np.asarray(center_mask, dtype=np.uint8)
    size = c.size
    failures = []
    cb = bytearray(size)
    for b in range(size):
        if not center_mask[defects[b]]:
            continue
        for x in range(size):
            cb[x] = 1 if enc_mul(c, x, b) == enc_mul(c, b, x) else 0
        shifts = [enc_mul(c, s, b) for s in scalars]
        for a in range(size):
            if cb[a]:
                continue
            ok = False
            for sb in shifts:
                z = enc_add(c, a, sb)
                if not cb[defects[z]]:
                    ok = True
                    break
            if not ok:
                failures.append(a * size + b)
    return np.array(failures, dtype=np.int64)


def census_scan(q, dim, fadd, fmul, start, stop):
    """Scan candidate multiplication tables for dimension `dim` algebras
    over GF(q) with unity pinned to basis element 0.

    A candidate integer encodes the free structure constants: the
    coordinates of e_i * e_j for i, j >= 1, most significant digit
    first in row-major reading order.  Returns the candidates defining
    associative tables, ascending.
    """
    fadd = [list(map(int, row)) for row in np.asarray(fadd)]
    fmul = [list(map(int, row)) for row in np.asarray(fmul)]
    q = int(q)
    dim = int(dim)
    free = (dim - 1) * (dim - 1) * dim
    # tab[i][j] = coordinate list of e_i e_j; unity rows are fixed
    tab = [[None] * dim for _ in range(dim)]
    for j in range(dim):
        tab[0][j] = [1 if m == j else 0 for m in range(dim)]
    for i in range(1, dim):
        tab[i][0] = [1 if m == i else 0 for m in range(dim)]

    inner = range(1, dim)
    pows = [q ** (free - 1 - pos) for pos in range(free)]
    hits = []
    for cand in range(int(start), int(stop)):
        code = cand
        # most significant digit first: peel from the top position
        for pos in range(free):
            digit = (code // pows[pos]) % q
            pair, m = divmod(pos, dim)
            i, j = divmod(pair, dim - 1)
            if m == 0:
                tab[i + 1][j + 1] = [0] * dim
            tab[i + 1][j + 1][m] = digit
        ok = True
        for i in inner:
            for j in inner:
                tij = tab[i][j]
                for k in inner:
                    tjk = tab[j][k]
                    for m in range(dim):
                        lhs = 0
                        rhs = 0
                        for t in range(dim):
                            ct = tij[t]
                            if ct:
                                lhs = fadd[lhs][fmul[ct][tab[t][k][m]]]
                            cr = tjk[t]
                            if cr:
                                rhs = fadd[rhs][fmul[cr][tab[i][t][m]]]
                        if lhs != rhs:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            hits.append(cand)
    return np.array(hits, dtype=np.int64)


def table_iso_scan(n, fadd, fmul, table_a, table_b, mats):
    """First index into `mats` of a change of coordinates M with
    M(x) M(y) = M(xy) between two structure tables over the same field,
    or -1.  Column k of M holds the image coordinates of basis k; the
    matrices are expected to already map unity to unity and be
    invertible."""
    fadd = [list(map(int, row)) for row in np.asarray(fadd)]
    fmul = [list(map(int, row)) for row in np.asarray(fmul)]
    ta = np.asarray(table_a, dtype=np.int64)
    tb = np.asarray(table_b, dtype=np.int64)
    mats = np.asarray(mats, dtype=np.int64)
    num = mats.shape[0]
    n = int(n)
    for idx in range(num):
        M = mats[idx]
        ok = True
        for i in range(n):
            for j in range(n):
                for m in range(n):
                    lhs = 0
                    for k in range(n):
                        c = ta[i, j, k]
                        if c:
                            lhs = fadd[lhs][fmul[c][M[m, k]]]
                    rhs = 0
                    for r in range(n):
                        mri = M[r, i]
                        if not mri:
                            continue
                        for s in range(n):
                            msj = M[s, j]
                            if not msj:
                                continue
                            c2 = tb[r, s, m]
                            if c2:
                                rhs = fadd[rhs][fmul[fmul[mri][msj]][c2]]
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return idx
    return -1
