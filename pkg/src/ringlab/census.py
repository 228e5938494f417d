"""Exhaustive enumeration of small unital algebras up to isomorphism.

Candidates are multiplication tables with the unity pinned to basis
element 0, encoded as a single integer: the free structure constants
(coordinates of e_i * e_j for i, j >= 1) read most significant digit
first.  The scan keeps the associative tables, and classification
groups them into isomorphism classes by explicit orbit computation
under the unity-fixing basis changes, so orbit sizes come out exact and
must partition the valid count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import kernels
from .algebra import Algebra, make_algebra
from .config import enumeration_budget
from .errors import BudgetExceeded, ValidationError
from .gf import make_field
from .structure import mat_inv, unity_pinned_matrices


def free_positions(dim):
    """Number of free structure-constant digits once unity is pinned."""
    return (dim - 1) * (dim - 1) * dim


def candidate_count(q, dim):
    return q ** free_positions(dim)


def candidate_table(field, dim, cand):
    """Full dim x dim x dim structure table for a candidate code."""
    q = field.q
    free = free_positions(dim)
    digits = []
    code = cand
    for _ in range(free):
        digits.append(code % q)
        code //= q
    if code:
        raise ValidationError(f"candidate {cand} out of range for q={q}, dim={dim}")
    digits.reverse()
    table = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for j in range(dim):
        table[0][j][j] = 1
    for i in range(1, dim):
        table[i][0][i] = 1
    for pos, digit in enumerate(digits):
        pair, m = divmod(pos, dim)
        i, j = divmod(pair, dim - 1)
        table[i + 1][j + 1][m] = digit
    return table


def table_candidate(field, dim, table):
    """Inverse of candidate_table: the code of a unity-pinned table."""
    q = field.q
    code = 0
    for i in range(1, dim):
        for j in range(1, dim):
            for m in range(dim):
                code = code * q + int(table[i][j][m]) % q
    return code


def _scan_chunk(args):
    p, k, dim, start, stop = args
    field = make_field(p, k)
    fadd, fmul, _ = field.tables()
    hits = kernels.census_scan(field.q, dim, fadd, fmul, start, stop)
    return [int(h) for h in hits]


def enumerate_algebras(field, dim, budget=None, jobs=None):
    """Ascending candidate codes of all associative unity-pinned tables."""
    total = candidate_count(field.q, dim)
    limit = enumeration_budget(budget)
    if total > limit:
        raise BudgetExceeded(total, limit)
    if jobs and jobs > 1:
        chunks = []
        step = -(-total // (jobs * 4))
        lo = 0
        while lo < total:
            hi = min(lo + step, total)
            chunks.append((field.p, field.k, dim, lo, hi))
            lo = hi
        out = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_chunk, chunks):
                out.extend(part)
        return np.array(out, dtype=np.int64)
    fadd, fmul, _ = field.tables()
    hits = kernels.census_scan(field.q, dim, fadd, fmul, 0, total)
    return np.asarray(hits, dtype=np.int64)


def _candidate_ring_data(field, dim, table):
    unity = tuple(1 if i == 0 else 0 for i in range(dim))
    return kernels.RingData([field.q] * dim, table, unity, field)


def candidate_profile(field, dim, table):
    """Cheap isomorphism invariants of one candidate table."""
    rd = _candidate_ring_data(field, dim, table)
    commutative = all(
        table[i][j] == table[j][i] for i in range(dim) for j in range(dim)
    )
    basis = np.array([field.q ** i for i in range(dim)], dtype=np.int64)
    center_size = len(kernels.scan_commutant(rd, basis))
    idem = len(kernels.fixpoints(rd, 2))
    solq = len(kernels.fixpoints(rd, field.q))
    units = kernels.scan_units(rd)
    radical = len(kernels.scan_radical(rd, units))
    return (
        center_size,
        idem,
        solq,
        radical,
        int(units.sum()),
        commutative,
    )


PROFILE_KEYS = (
    "center",
    "idempotents",
    "power_solutions",
    "radical",
    "units",
    "commutative",
)


def _transform_table(field, dim, table, mat, inv):
    """The table whose iso image under `mat` is `table`.

    Column k of `mat` holds the image coordinates of basis k; the
    returned table T satisfies: mapping by `mat` carries T to `table`.
    """
    out = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            image = [0] * dim
            for r in range(dim):
                mri = mat[r][i]
                if not mri:
                    continue
                for s in range(dim):
                    msj = mat[s][j]
                    if not msj:
                        continue
                    coeff = field.mul(mri, msj)
                    row = table[r][s]
                    for m in range(dim):
                        if row[m]:
                            image[m] = field.add(image[m], field.mul(coeff, row[m]))
            for m in range(dim):
                acc = 0
                for t in range(dim):
                    if inv[m][t] and image[t]:
                        acc = field.add(acc, field.mul(inv[m][t], image[t]))
                out[i][j][m] = acc
    return out


def orbit_codes(field, dim, table):
    """Every candidate code isomorphic to `table` via a unity-pinned
    basis change, as a set."""
    mats = unity_pinned_matrices(field, dim)
    codes = set()
    for raw in mats:
        mat = [[int(raw[r][c]) for c in range(dim)] for r in range(dim)]
        inv = mat_inv(field, mat)
        moved = _transform_table(field, dim, table, mat, inv)
        codes.add(table_candidate(field, dim, moved))
    return codes


@dataclass
class AlgebraClass:
    """One isomorphism class found by the census."""

    representative: int
    orbit: int
    profile: dict
    noncommutative: bool
    table: list

    def to_dict(self):
        return {
            "representative": self.representative,
            "orbit": self.orbit,
            "profile": self.profile,
            "noncommutative": self.noncommutative,
            "table": self.table,
        }


@dataclass
class CensusResult:
    p: int
    k: int
    dim: int
    candidates_scanned: int
    valid_count: int
    classes: list = dc_field(default_factory=list)

    @property
    def noncommutative_classes(self):
        return [c for c in self.classes if c.noncommutative]

    def to_dict(self):
        return {
            "field": {"p": self.p, "k": self.k},
            "dim": self.dim,
            "candidates_scanned": self.candidates_scanned,
            "valid_count": self.valid_count,
            "classes": [c.to_dict() for c in self.classes],
        }


def classify(field, dim, candidates):
    """Partition valid candidate codes into isomorphism classes.

    Each new code opens a class, whose full orbit is computed up front;
    later codes are matched by set membership.  The orbits must tile the
    candidate list exactly, which is asserted."""
    classes = []
    orbits = []
    code_to_class = {}
    for cand in candidates:
        cand = int(cand)
        if cand in code_to_class:
            idx = code_to_class[cand]
            classes[idx].orbit += 1
            continue
        table = candidate_table(field, dim, cand)
        profile = candidate_profile(field, dim, table)
        orbit = orbit_codes(field, dim, table)
        idx = len(classes)
        for code in orbit:
            if code in code_to_class:
                raise ValidationError(
                    f"orbit of {cand} collides with class {code_to_class[code]}"
                )
            code_to_class[code] = idx
        classes.append(
            AlgebraClass(
                representative=cand,
                orbit=1,
                profile=dict(zip(PROFILE_KEYS, profile)),
                noncommutative=not profile[-1],
                table=table,
            )
        )
        orbits.append(orbit)
    for cls, orbit in zip(classes, orbits):
        if cls.orbit != len(orbit):
            raise ValidationError(
                f"class {cls.representative}: saw {cls.orbit} members, orbit has {len(orbit)}"
            )
    return classes


def run_census(field, dim, budget=None, jobs=None):
    """Enumerate and classify every unital algebra of the given
    dimension over the field."""
    candidates = enumerate_algebras(field, dim, budget=budget, jobs=jobs)
    classes = classify(field, dim, candidates)
    total = sum(c.orbit for c in classes)
    if total != len(candidates):
        raise ValidationError(f"orbits cover {total} of {len(candidates)} tables")
    return CensusResult(
        p=field.p,
        k=field.k,
        dim=dim,
        candidates_scanned=candidate_count(field.q, dim),
        valid_count=len(candidates),
        classes=classes,
    )


def class_algebra(field, cls):
    """Validated Algebra built from a census class representative."""
    dim = len(cls.table)
    unity = [1 if i == 0 else 0 for i in range(dim)]
    return make_algebra(field, dim, cls.table, unity)


def census_from_dict(data):
    """Rebuild a CensusResult from its serialized form."""
    classes = [
        AlgebraClass(
            representative=c["representative"],
            orbit=c["orbit"],
            profile=dict(c["profile"]),
            noncommutative=bool(c["noncommutative"]),
            table=c["table"],
        )
        for c in data["classes"]
    ]
    return CensusResult(
        p=data["field"]["p"],
        k=data["field"]["k"],
        dim=data["dim"],
        candidates_scanned=data["candidates_scanned"],
        valid_count=data["valid_count"],
        classes=classes,
    )
