"""Backend selection and the array-level ring description for the scan
kernels.

The hot inner loops (power scans, unit and radical scans, the census
table scan, isomorphism search) exist twice: compiled Cython in
`_ckern` and plain Python in `_kernels_py`, with identical signatures
and results.  The compiled module is preferred when importable; set the
environment variable RINGLAB_BACKEND to "py" or "c" to force one, or
call :func:`set_backend` at runtime.  `benchmarks/bench_backends.py`
compares the two.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py
from .errors import BudgetExceeded

_BACKENDS = {"py": _kernels_py}
try:
    from . import _ckern  # compiled extension, built by setup.py

    _BACKENDS["c"] = _ckern
except ImportError:  # pragma: no cover - depends on the build
    _ckern = None

_MAX_SLOTS = 32  # kernel scratch buffers cap the coordinate count


def _initial_backend():
    forced = os.environ.get("RINGLAB_BACKEND", "").strip().lower()
    if forced in _BACKENDS:
        return forced
    if forced and forced not in ("", "auto"):
        raise ValueError(f"unknown backend {forced!r}")
    return "c" if "c" in _BACKENDS else "py"


_active = _initial_backend()


def available_backends():
    return tuple(sorted(_BACKENDS))


def backend_name():
    return _active


def set_backend(name):
    """Select the kernel backend ("py" or "c"); returns the previous name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} not available (have {available_backends()})")
    previous = _active
    _active = name
    return previous


def _mod():
    return _BACKENDS[_active]


class RingData:
    """Array-level description of a finite ring for the kernels.

    Modular mode: coordinate i ranges over Z/radices[i].  Field mode:
    coordinates are GF(q) encodings and fadd/fmul/fneg carry the field
    operation tables.  `table[i, j, k]` is coordinate k of the product
    of additive generators i and j.
    """

    __slots__ = (
        "n",
        "size",
        "radices",
        "weights",
        "table",
        "unity",
        "field_mode",
        "fadd",
        "fmul",
        "fneg",
        "_ctx",
    )

    def __init__(self, radices, table, unity_coords, field=None):
        radices = [int(r) for r in radices]
        n = len(radices)
        if n > _MAX_SLOTS:
            raise BudgetExceeded(n, _MAX_SLOTS)
        self.n = n
        size = 1
        weights = []
        for r in radices:
            weights.append(size)
            size *= r
        self.size = size
        self.radices = np.array(radices, dtype=np.int64)
        self.weights = np.array(weights, dtype=np.int64)
        self.table = np.ascontiguousarray(
            np.asarray(table, dtype=np.int64).reshape(n, n, n)
        )
        self.unity = int(sum(int(c) * w for c, w in zip(unity_coords, weights)))
        if field is not None:
            fadd, fmul, fneg = field.tables()
            self.field_mode = True
            self.fadd = np.ascontiguousarray(fadd, dtype=np.int64)
            self.fmul = np.ascontiguousarray(fmul, dtype=np.int64)
            self.fneg = np.ascontiguousarray(fneg, dtype=np.int64)
        else:
            self.field_mode = False
            empty2 = np.zeros((1, 1), dtype=np.int64)
            self.fadd = empty2
            self.fmul = empty2
            self.fneg = np.zeros(1, dtype=np.int64)
        self._ctx = {}

    def ctx(self):
        """Backend-specific context for the active backend (cached)."""
        key = _active
        c = self._ctx.get(key)
        if c is None:
            c = _mod().make_ctx(
                self.n,
                self.size,
                self.radices,
                self.weights,
                self.table,
                self.unity,
                self.field_mode,
                self.fadd,
                self.fmul,
                self.fneg,
            )
            self._ctx[key] = c
        return c


def ring_data(ring):
    """The RingData for an Algebra or FiniteRing, cached on the object."""
    rd = ring._memo.get("ring_data")
    if rd is None:
        if hasattr(ring, "field"):
            rd = RingData(
                [ring.field.q] * ring.dim, ring.table, ring.unity, ring.field
            )
        else:
            rd = RingData(ring.moduli, ring.table, ring.unity)
        ring._memo["ring_data"] = rd
    return rd


# -- thin dispatch wrappers ---------------------------------------------------


def mul_enc(rd, x, y):
    return int(_mod().enc_mul(rd.ctx(), int(x), int(y)))


def add_enc(rd, x, y):
    return int(_mod().enc_add(rd.ctx(), int(x), int(y)))


def sub_enc(rd, x, y):
    return int(_mod().enc_sub(rd.ctx(), int(x), int(y)))


def neg_enc(rd, x):
    return int(_mod().enc_neg(rd.ctx(), int(x)))


def pow_enc(rd, x, e):
    return int(_mod().enc_pow(rd.ctx(), int(x), int(e)))


def power_defects(rd, e):
    return _mod().power_defects(rd.ctx(), int(e))


def fixpoints(rd, m):
    """Sorted encodings of x with x^m = x."""
    defects = power_defects(rd, m)
    return np.flatnonzero(defects == 0).astype(np.int64)


def scan_commutant(rd, targets):
    return _mod().scan_commutant(rd.ctx(), np.asarray(targets, dtype=np.int64))


def scan_units(rd):
    return _mod().scan_units(rd.ctx())


def scan_radical(rd, unit_mask):
    return _mod().scan_radical(rd.ctx(), np.asarray(unit_mask, dtype=np.uint8))


def closure_scan(rd, seeds):
    return _mod().closure_scan(rd.ctx(), np.asarray(list(seeds), dtype=np.int64))


def lemma_sweep(rd, scalars, defects, center_mask):
    return _mod().lemma_sweep(
        rd.ctx(),
        np.asarray(scalars, dtype=np.int64),
        np.asarray(defects, dtype=np.int64),
        np.asarray(center_mask, dtype=np.uint8),
    )


def census_scan(q, dim, fadd, fmul, start, stop):
    return _mod().census_scan(
        int(q),
        int(dim),
        np.ascontiguousarray(fadd, dtype=np.int64),
        np.ascontiguousarray(fmul, dtype=np.int64),
        int(start),
        int(stop),
    )


def table_iso_scan(n, fadd, fmul, table_a, table_b, mats):
    return int(
        _mod().table_iso_scan(
            int(n),
            np.ascontiguousarray(fadd, dtype=np.int64),
            np.ascontiguousarray(fmul, dtype=np.int64),
            np.ascontiguousarray(table_a, dtype=np.int64),
            np.ascontiguousarray(table_b, dtype=np.int64),
            np.ascontiguousarray(mats, dtype=np.int64),
        )
    )
