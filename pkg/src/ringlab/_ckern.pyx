# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels.

Same functions, arguments, and results as `_kernels_py`; that module is
the readable reference, this one is the fast path.  All remainders are
computed on nonnegative operands so C division semantics never bite.
"""

import numpy as np


ctypedef long long i64



cdef class KernelCtx:
    cdef public int n
    cdef public i64 size
    cdef public i64 unity
    cdef public bint field_mode
    cdef i64[::1] radices
    cdef i64[::1] weights
    cdef i64[:, :, ::1] table
    cdef i64[:, ::1] fadd
    cdef i64[:, ::1] fmul
    cdef i64[::1] fneg

    def __init__(self, n, size, radices, weights, table, unity, field_mode,
                 fadd, fmul, fneg):
        if n > 32:
            raise ValueError("too many coordinate slots for the kernels")
        self.n = n
        self.size = size
        self.unity = unity
        self.field_mode = bool(field_mode)
        self.radices = np.ascontiguousarray(radices, dtype=np.int64)
        self.weights = np.ascontiguousarray(weights, dtype=np.int64)
        self.table = np.ascontiguousarray(table, dtype=np.int64)
        self.fadd = np.ascontiguousarray(fadd, dtype=np.int64)
        self.fmul = np.ascontiguousarray(fmul, dtype=np.int64)
        self.fneg = np.ascontiguousarray(fneg, dtype=np.int64)


def make_ctx(n, size, radices, weights, table, unity, field_mode, fadd, fmul, fneg):
    return KernelCtx(int(n), int(size), radices, weights, table, int(unity),
                     field_mode, fadd, fmul, fneg)


cdef inline void _decode(KernelCtx c, i64 x, i64* out):
    cdef int i
    for i in range(c.n):
        out[i] = (x // c.weights[i]) % c.radices[i]


cdef inline i64 _encode(KernelCtx c, i64* coords):
    cdef i64 s = 0
    cdef int i
    for i in range(c.n):
        s += coords[i] * c.weights[i]
    return s


cdef i64 cmul(KernelCtx c, i64 x, i64 y):
    cdef i64 xc[32]
    cdef i64 yc[32]
    cdef i64 zc[32]
    cdef int i, j, m
    cdef int n = c.n
    cdef i64 xi, yj, coeff, t
    _decode(c, x, xc)
    _decode(c, y, yc)
    for m in range(n):
        zc[m] = 0
    if c.field_mode:
        for i in range(n):
            xi = xc[i]
            if xi == 0:
                continue
            for j in range(n):
                yj = yc[j]
                if yj == 0:
                    continue
                coeff = c.fmul[xi, yj]
                for m in range(n):
                    t = c.table[i, j, m]
                    if t != 0:
                        zc[m] = c.fadd[zc[m], c.fmul[coeff, t]]
    else:
        for i in range(n):
            xi = xc[i]
            if xi == 0:
                continue
            for j in range(n):
                yj = yc[j]
                if yj == 0:
                    continue
                coeff = xi * yj
                for m in range(n):
                    t = c.table[i, j, m]
                    if t != 0:
                        zc[m] = (zc[m] + (coeff % c.radices[m]) * t) % c.radices[m]
    return _encode(c, zc)


cdef i64 cadd(KernelCtx c, i64 x, i64 y):
    cdef i64 xc[32]
    cdef i64 yc[32]
    cdef i64 zc[32]
    cdef int i
    _decode(c, x, xc)
    _decode(c, y, yc)
    if c.field_mode:
        for i in range(c.n):
            zc[i] = c.fadd[xc[i], yc[i]]
    else:
        for i in range(c.n):
            zc[i] = (xc[i] + yc[i]) % c.radices[i]
    return _encode(c, zc)


cdef i64 cneg(KernelCtx c, i64 x):
    cdef i64 xc[32]
    cdef i64 zc[32]
    cdef int i
    cdef i64 r
    _decode(c, x, xc)
    if c.field_mode:
        for i in range(c.n):
            zc[i] = c.fneg[xc[i]]
    else:
        for i in range(c.n):
            r = c.radices[i]
            zc[i] = (r - xc[i]) % r
    return _encode(c, zc)


cdef i64 csub(KernelCtx c, i64 x, i64 y):
    cdef i64 xc[32]
    cdef i64 yc[32]
    cdef i64 zc[32]
    cdef int i
    cdef i64 r
    _decode(c, x, xc)
    _decode(c, y, yc)
    if c.field_mode:
        for i in range(c.n):
            zc[i] = c.fadd[xc[i], c.fneg[yc[i]]]
    else:
        for i in range(c.n):
            r = c.radices[i]
            zc[i] = (xc[i] + r - yc[i]) % r
    return _encode(c, zc)


cdef i64 cpow(KernelCtx c, i64 x, i64 e):
    cdef i64 acc = c.unity
    cdef i64 t
    for t in range(e):
        acc = cmul(c, acc, x)
    return acc


def enc_mul(KernelCtx c, x, y):
    return cmul(c, x, y)


def enc_add(KernelCtx c, x, y):
    return cadd(c, x, y)


def enc_sub(KernelCtx c, x, y):
    return csub(c, x, y)


def enc_neg(KernelCtx c, x):
    return cneg(c, x)


def enc_pow(KernelCtx c, x, e):
    return cpow(c, x, e)


def power_defects(KernelCtx c, e):
    cdef i64 ee = e
    out = np.empty(c.size, dtype=np.int64)
    cdef i64[::1] ov = out
    cdef i64 x
    for x in range(c.size):
        ov[x] = csub(c, cpow(c, x, ee), x)
    return out


def scan_commutant(KernelCtx c, targets):
    cdef i64[::1] tv = np.ascontiguousarray(targets, dtype=np.int64)
    cdef int nt = tv.shape[0]
    cdef list hits = []
    cdef i64 x
    cdef int ti
    cdef bint ok
    for x in range(c.size):
        ok = True
        for ti in range(nt):
            if cmul(c, x, tv[ti]) != cmul(c, tv[ti], x):
                ok = False
                break
        if ok:
            hits.append(x)
    return np.array(hits, dtype=np.int64)


def scan_units(KernelCtx c):
    out = np.zeros(c.size, dtype=np.uint8)
    cdef unsigned char[::1] ov = out
    cdef i64 x, y
    cdef i64 unity = c.unity
    for x in range(c.size):
        for y in range(c.size):
            if cmul(c, x, y) == unity and cmul(c, y, x) == unity:
                ov[x] = 1
                break
    return out


def scan_radical(KernelCtx c, unit_mask):
    cdef const unsigned char[::1] um = np.ascontiguousarray(unit_mask, dtype=np.uint8)
    cdef list hits = []
    cdef i64 x, a
    cdef i64 unity = c.unity
    cdef bint ok
    for x in range(c.size):
        ok = True
        for a in range(c.size):
            if not um[csub(c, unity, cmul(c, a, x))]:
                ok = False
                break
        if ok:
            hits.append(x)
    return np.array(hits, dtype=np.int64)


def closure_scan(KernelCtx c, seeds):
    cdef i64[::1] sv = np.ascontiguousarray(seeds, dtype=np.int64)
    member = np.zeros(c.size, dtype=np.uint8)
    order = np.empty(c.size, dtype=np.int64)
    cdef unsigned char[::1] mv = member
    cdef i64[::1] ov = order
    cdef i64 count = 0
    cdef i64 head = 0
    cdef i64 y, z, snapshot, idx, x
    cdef int si

    z = c.unity
    if not mv[z]:
        mv[z] = 1
        ov[count] = z
        count += 1
    for si in range(sv.shape[0]):
        z = sv[si]
        if not mv[z]:
            mv[z] = 1
            ov[count] = z
            count += 1
    while head < count:
        y = ov[head]
        head += 1
        z = cneg(c, y)
        if not mv[z]:
            mv[z] = 1
            ov[count] = z
            count += 1
        snapshot = count
        for idx in range(snapshot):
            x = ov[idx]
            z = cadd(c, x, y)
            if not mv[z]:
                mv[z] = 1
                ov[count] = z
                count += 1
            z = cmul(c, x, y)
            if not mv[z]:
                mv[z] = 1
                ov[count] = z
                count += 1
            z = cmul(c, y, x)
            if not mv[z]:
                mv[z] = 1
                ov[count] = z
                count += 1
    result = np.array(order[:count])
    result.sort()
    return result


def lemma_sweep(KernelCtx c, scalars, defects, center_mask):
    cdef i64[::1] sc = np.ascontiguousarray(scalars, dtype=np.int64)
    cdef const i64[::1] df = np.ascontiguousarray(defects, dtype=np.int64)
    cdef const unsigned char[::1] cm = np.ascontiguousarray(center_mask, dtype=np.uint8)
    cdef i64 size = c.size
    cdef int nsc = sc.shape[0]
    cb_arr = np.zeros(size, dtype=np.uint8)
    cdef unsigned char[::1] cb = cb_arr
    shifts_arr = np.zeros(nsc, dtype=np.int64)
    cdef i64[::1] shifts = shifts_arr
    cdef list failures = []
    cdef i64 b, x, a, z
    cdef int si
    cdef bint ok
    for b in range(size):
        if not cm[df[b]]:
            continue
        for x in range(size):
            cb[x] = 1 if cmul(c, x, b) == cmul(c, b, x) else 0
        for si in range(nsc):
            shifts[si] = cmul(c, sc[si], b)
        for a in range(size):
            if cb[a]:
                continue
            ok = False
            for si in range(nsc):
                z = cadd(c, a, shifts[si])
                if not cm[df[z]]:
                    ok = True
                    break
            if not ok:
                failures.append(a * size + b)
    return np.array(failures, dtype=np.int64)


def census_scan(q, dim, fadd, fmul, start, stop):
    cdef i64 qq = q
    cdef int d = dim
    if d > 4:
        raise ValueError("census kernel supports dimension <= 4")
    cdef const i64[:, ::1] fa = np.ascontiguousarray(fadd, dtype=np.int64)
    cdef const i64[:, ::1] fm = np.ascontiguousarray(fmul, dtype=np.int64)
    cdef int free = (d - 1) * (d - 1) * d
    cdef i64 pows[64]
    cdef int pos
    cdef i64 w = 1
    for pos in range(free - 1, -1, -1):
        pows[pos] = w
        w *= qq
    cdef i64 tab[4][4][4]
    cdef int i, j, k, m, t, pair
    for j in range(d):
        for m in range(d):
            tab[0][j][m] = 1 if m == j else 0
    for i in range(1, d):
        for m in range(d):
            tab[i][0][m] = 1 if m == i else 0
    cdef list hits = []
    cdef i64 cand, digit, lhs, rhs, ct, cr
    cdef i64 lo = start
    cdef i64 hi = stop
    cdef bint ok
    for cand in range(lo, hi):
        for pos in range(free):
            digit = (cand // pows[pos]) % qq
            pair = pos // d
            m = pos % d
            i = pair // (d - 1) + 1
            j = pair % (d - 1) + 1
            tab[i][j][m] = digit
        ok = True
        for i in range(1, d):
            for j in range(1, d):
                for k in range(1, d):
                    for m in range(d):
                        lhs = 0
                        rhs = 0
                        for t in range(d):
                            ct = tab[i][j][t]
                            if ct != 0:
                                lhs = fa[lhs, fm[ct, tab[t][k][m]]]
                            cr = tab[j][k][t]
                            if cr != 0:
                                rhs = fa[rhs, fm[cr, tab[i][t][m]]]
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
    cdef int nn = n
    cdef const i64[:, ::1] fa = np.ascontiguousarray(fadd, dtype=np.int64)
    cdef const i64[:, ::1] fm = np.ascontiguousarray(fmul, dtype=np.int64)
    cdef const i64[:, :, ::1] ta = np.ascontiguousarray(table_a, dtype=np.int64)
    cdef const i64[:, :, ::1] tb = np.ascontiguousarray(table_b, dtype=np.int64)
    cdef const i64[:, :, ::1] mv = np.ascontiguousarray(mats, dtype=np.int64)
    cdef Py_ssize_t num = mv.shape[0]
    cdef Py_ssize_t idx
    cdef int i, j, m, k, r, s
    cdef i64 lhs, rhs, cc, mri, msj
    cdef bint ok
    for idx in range(num):
        ok = True
        for i in range(nn):
            for j in range(nn):
                for m in range(nn):
                    lhs = 0
                    for k in range(nn):
                        cc = ta[i, j, k]
                        if cc != 0:
                            lhs = fa[lhs, fm[cc, mv[idx, m, k]]]
                    rhs = 0
                    for r in range(nn):
                        mri = mv[idx, r, i]
                        if mri == 0:
                            continue
                        for s in range(nn):
                            msj = mv[idx, s, j]
                            if msj == 0:
                                continue
                            cc = tb[r, s, m]
                            if cc != 0:
                                rhs = fa[rhs, fm[fm[mri, msj], cc]]
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
