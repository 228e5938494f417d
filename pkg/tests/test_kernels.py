"""Backend parity: every kernel must give identical answers from the
pure-Python implementation and the compiled one (when present)."""

import numpy as np
import pytest

from ringlab import algebra, finring, gf, kernels

BACKENDS = kernels.available_backends()

F2 = gf.make_field(2)
F3 = gf.make_field(3)
F4 = gf.make_field(2, 2)
F5 = gf.make_field(5)


def ring_grid():
    yield "S(F2)", algebra.make_S(F2)
    yield "S(F3)", algebra.make_S(F3)
    yield "S(F4)", algebra.make_S(F4)
    yield "M2(F2)", algebra.make_matrix(F2, 2)
    yield "T2(F3)", algebra.make_triangular(F3, 2)
    yield "Z4xZ3", finring.make_zm(4, 3)
    yield "Z8", finring.make_zm(8)
    yield "S(F3) ring form", finring.as_finite_ring(algebra.make_S(F3))


GRID = list(ring_grid())


@pytest.fixture(params=[name for name, _ in GRID])
def ring(request):
    return dict(GRID)[request.param]


def with_backend(name, fn, *args):
    prev = kernels.set_backend(name)
    try:
        return fn(*args)
    finally:
        kernels.set_backend(prev)


def collect(fn, rd, *args):
    return {b: with_backend(b, fn, rd, *args) for b in BACKENDS}


def assert_same(results):
    vals = list(results.values())
    first = vals[0]
    for other in vals[1:]:
        if isinstance(first, np.ndarray):
            assert np.array_equal(first, other), results
        else:
            assert first == other, results


def test_scalar_ops_parity(ring):
    rd = kernels.ring_data(ring)
    n = rd.size
    step = max(1, n // 12)
    codes = list(range(0, n, step))
    for x in codes:
        assert_same(collect(kernels.neg_enc, rd, x))
        assert_same(collect(kernels.pow_enc, rd, x, 5))
        for y in codes:
            assert_same(collect(kernels.mul_enc, rd, x, y))
            assert_same(collect(kernels.add_enc, rd, x, y))
            assert_same(collect(kernels.sub_enc, rd, x, y))


def test_scalar_ops_match_class_arithmetic(ring):
    """Kernels and the class-level arithmetic are independent routes;
    they must agree element by element."""
    rd = kernels.ring_data(ring)
    n = rd.size
    step = max(1, n // 10)
    codes = list(range(0, n, step))
    for cx in codes:
        x = ring.decode(cx)
        assert kernels.pow_enc(rd, cx, 3) == ring.encode(ring.pow(x, 3))
        for cy in codes:
            y = ring.decode(cy)
            assert kernels.mul_enc(rd, cx, cy) == ring.encode(ring.mul(x, y))
            assert kernels.add_enc(rd, cx, cy) == ring.encode(ring.add(x, y))


def test_power_defects_parity(ring):
    rd = kernels.ring_data(ring)
    for e in (2, 3, 4):
        assert_same(collect(kernels.power_defects, rd, e))


def test_fixpoints_match_bruteforce():
    s = algebra.make_S(F3)
    rd = kernels.ring_data(s)
    got = set(int(c) for c in kernels.fixpoints(rd, 3))
    want = {
        s.encode(x) for x in s.elements() if s.pow(x, 3) == x
    }
    assert got == want
    assert len(got) == 21


def test_scan_commutant_parity(ring):
    rd = kernels.ring_data(ring)
    targets = np.arange(0, rd.size, max(1, rd.size // 6), dtype=np.int64)
    assert_same(collect(kernels.scan_commutant, rd, targets))


def test_scan_units_and_radical_parity(ring):
    rd = kernels.ring_data(ring)
    units = collect(kernels.scan_units, rd)
    assert_same(units)
    unit_mask = list(units.values())[0]
    assert_same(collect(kernels.scan_radical, rd, unit_mask))


def test_scan_units_bruteforce_m2():
    m2 = algebra.make_matrix(F2, 2)
    rd = kernels.ring_data(m2)
    # GL(2, F2) has order 6
    assert int(kernels.scan_units(rd).sum()) == 6


def test_closure_scan_parity(ring):
    rd = kernels.ring_data(ring)
    seeds = np.array([rd.unity, rd.size - 1], dtype=np.int64)
    assert_same(collect(kernels.closure_scan, rd, seeds))


def test_closure_scan_single_generator():
    # the subring of S(F2) generated by e1 (unity adjoined) is the span
    # of {1, e1}: four elements
    s = algebra.make_S(F2)
    rd = kernels.ring_data(s)
    e1 = s.encode(s.basis(1))
    sub = kernels.closure_scan(rd, np.array([e1], dtype=np.int64))
    want = sorted(
        s.encode(x)
        for x in [s.zero, s.unity, s.basis(1), s.add(s.unity, s.basis(1))]
    )
    assert list(sub) == want


def test_closure_scan_unity_only_in_z8():
    # 1 generates everything additively
    z8 = finring.make_zm(8)
    rd = kernels.ring_data(z8)
    sub = kernels.closure_scan(rd, np.array([1], dtype=np.int64))
    assert len(sub) == 8


def test_lemma_sweep_parity(ring):
    rd = kernels.ring_data(ring)
    n = rd.size
    defects = kernels.power_defects(rd, 3)
    center_mask = np.zeros(n, dtype=np.uint8)
    center_mask[kernels.scan_commutant(rd, np.arange(n, dtype=np.int64))] = 1
    scalars = np.array(
        sorted(
            {kernels.mul_enc(rd, rd.unity, rd.unity)}
            | {rd.unity, 0}
        ),
        dtype=np.int64,
    )
    assert_same(collect(kernels.lemma_sweep, rd, scalars, defects, center_mask))


def test_census_scan_parity():
    fadd, fmul, _ = F2.tables()
    chunks = {}
    for b in BACKENDS:
        prev = kernels.set_backend(b)
        try:
            chunks[b] = kernels.census_scan(2, 2, fadd, fmul, 0, 16)
        finally:
            kernels.set_backend(prev)
    assert_same(chunks)
    assert len(list(chunks.values())[0]) > 0


def test_table_iso_scan_parity():
    s = algebra.make_S(F2)
    t = algebra.make_triangular(F2, 2)
    ta = np.ascontiguousarray(
        np.array(
            [[s.table[i][j] for j in range(3)] for i in range(3)],
            dtype=np.int64,
        )
    )
    tb = np.ascontiguousarray(
        np.array(
            [[t.table[i][j] for j in range(3)] for i in range(3)],
            dtype=np.int64,
        )
    )
    fadd, fmul, _ = F2.tables()
    ident = np.eye(3, dtype=np.int64).reshape(1, 3, 3)
    results = {}
    for b in BACKENDS:
        prev = kernels.set_backend(b)
        try:
            same = kernels.table_iso_scan(3, fadd, fmul, ta, ta, ident)
            diff = kernels.table_iso_scan(3, fadd, fmul, ta, tb, ident)
        finally:
            kernels.set_backend(prev)
        results[b] = (same, diff)
    assert_same(results)
    assert list(results.values())[0] == (0, -1)


def test_backend_selection_roundtrip():
    prev = kernels.set_backend("py")
    assert kernels.backend_name() == "py"
    kernels.set_backend(prev)
    assert kernels.backend_name() == prev
    with pytest.raises(Exception):
        kernels.set_backend("nope")
