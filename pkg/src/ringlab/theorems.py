"""Machine-checkable verdicts for the counting facts this package is
built around: bounds on the solutions of x^q = x in noncommutative
algebras, the characterization of the rings attaining them, and
idempotent-density theorems for general finite rings.

Every check returns a :class:`TheoremReport` with verdict "holds",
"fails", or "not_applicable", explicit witnesses, and exact rational
densities.  Universally quantified claims are swept exhaustively at
these sizes, never sampled; a "fails" verdict always carries a
counterexample that can be re-checked in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from . import kernels
from .algebra import (
    Algebra,
    frobenius_defect,
    make_S,
    make_matrix,
    make_product,
    make_qring,
    make_triangular,
)
from .errors import DegreeMismatch, NotDividing, NotPrimePower
from .finring import as_algebra, as_finite_ring, characteristic, make_zm
from .gf import is_prime, make_field, power_sum
from .structure import (
    center,
    central_defect_solutions,
    central_idempotents,
    centralizer,
    decompose,
    generated_subring,
    idempotents,
    is_boolean,
    is_commutative,
    is_isomorphic,
    is_q_ring,
    jacobson_radical,
    power_solutions,
    quotient_ring,
)

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not_applicable"


@dataclass
class TheoremReport:
    """Verdict for one statement on one input."""

    statement: str
    verdict: str
    witnesses: list = dc_field(default_factory=list)
    densities: dict = dc_field(default_factory=dict)
    notes: dict = dc_field(default_factory=dict)

    @property
    def ok(self):
        return self.verdict != FAILS

    def to_dict(self):
        return {
            "statement": self.statement,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "densities": {k: f"{v.numerator}/{v.denominator}" for k, v in self.densities.items()},
            "notes": self.notes,
        }


def _report(statement, verdict, witnesses=None, densities=None, notes=None):
    return TheoremReport(
        statement,
        verdict,
        list(witnesses or []),
        dict(densities or {}),
        dict(notes or {}),
    )


def solution_bound(q):
    """The maximal density of solutions of x^q = x in a noncommutative
    algebra over a field with q elements."""
    return Fraction(q * q - q + 1, q * q)


# -- field-level observation ---------------------------------------------------


def check_power_sum_dichotomy(field):
    """Sums of r-th powers over the whole field collapse to -1 when
    q - 1 divides r (r >= 1) and to 0 otherwise."""
    q = field.q
    minus_one = field.neg(1)
    bad = []
    for r in range(1, 3 * (q - 1) + 1):
        got = power_sum(field, r)
        want = minus_one if r % (q - 1) == 0 else 0
        if got != want:
            bad.append([r, got])
    verdict = FAILS if bad else HOLDS
    return _report(
        "power_sum_dichotomy",
        verdict,
        witnesses=bad,
        notes={"q": q, "exponents_checked": 3 * (q - 1)},
    )


# -- commutation criterion and its consequences --------------------------------


def check_power_sum_commutation(alg, a, b, coeffs):
    """For a polynomial P of degree exactly q and an element b whose
    power defect b^q - b is central: if the sum of P(a + f*b) over all
    field elements f commutes with b, then a and b commute.

    The report also carries the degree-(q-1) coefficient of the shifted
    expansion and verifies its commutator identity
    b*c - c*b = b^q*a - a*b^q, the engine behind the implication.
    """
    field = alg.field
    q = field.q
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) != q + 1:
        raise DegreeMismatch(len(coeffs) - 1, q)
    lead_inv = field.inv(coeffs[-1])
    monic = [field.mul(lead_inv, c) for c in coeffs]

    defect_b = frobenius_defect(alg, b)
    cen = center(alg)
    if alg.encode(defect_b) not in cen:
        return _report(
            "power_sum_commutation",
            NOT_APPLICABLE,
            notes={"reason": "power defect of b is not central"},
        )

    total = alg.zero
    for f in field.elements():
        shifted = alg.add(a, alg.scalar(f, b))
        total = alg.add(total, _eval_monic(alg, monic, shifted))
    cb = centralizer(alg, b)
    sum_commutes = alg.encode(total) in cb
    commute = alg.mul(a, b) == alg.mul(b, a)

    c_top = alg.scalar(monic[q - 1], alg.pow(b, q - 1))
    for t in range(q):
        word = alg.mul(alg.pow(b, q - 1 - t), alg.mul(a, alg.pow(b, t)))
        c_top = alg.add(c_top, word)
    lhs = alg.sub(alg.mul(b, c_top), alg.mul(c_top, b))
    rhs = alg.sub(
        alg.mul(alg.pow(b, q), a), alg.mul(a, alg.pow(b, q))
    )
    identity_ok = lhs == rhs

    implication_ok = (not sum_commutes) or commute
    verdict = HOLDS if (implication_ok and identity_ok) else FAILS
    witnesses = []
    if not implication_ok or not identity_ok:
        witnesses = [alg.encode(a), alg.encode(b)]
    return _report(
        "power_sum_commutation",
        verdict,
        witnesses=witnesses,
        notes={
            "sum_in_centralizer": sum_commutes,
            "pair_commutes": commute,
            "commutator_identity": identity_ok,
            "shift_sum": alg.encode(total),
            "top_coefficient": alg.encode(c_top),
        },
    )


def _eval_monic(alg, coeffs, x):
    acc = alg.zero
    power = alg.unity
    for c in coeffs:
        if c:
            acc = alg.add(acc, alg.scalar(c, power))
        power = alg.mul(power, x)
    return acc


def check_shift_witness(alg, a, b):
    """When b has central power defect and a does not commute with b,
    some field multiple f gives (a + f*b)^q - (a + f*b) outside the
    centralizer of b."""
    field = alg.field
    q = field.q
    defect_b = frobenius_defect(alg, b)
    if alg.encode(defect_b) not in center(alg):
        return _report(
            "noncommuting_shift_witness",
            NOT_APPLICABLE,
            notes={"reason": "power defect of b is not central"},
        )
    if alg.mul(a, b) == alg.mul(b, a):
        return _report(
            "noncommuting_shift_witness",
            NOT_APPLICABLE,
            notes={"reason": "a and b commute"},
        )
    cb = centralizer(alg, b)
    for f in field.elements():
        shifted = alg.add(a, alg.scalar(f, b))
        if alg.encode(frobenius_defect(alg, shifted)) not in cb:
            return _report(
                "noncommuting_shift_witness",
                HOLDS,
                witnesses=[f],
                notes={"a": alg.encode(a), "b": alg.encode(b)},
            )
    return _report(
        "noncommuting_shift_witness",
        FAILS,
        witnesses=[alg.encode(a), alg.encode(b)],
    )


def sweep_shift_witness(alg):
    """Exhaustive form of the witness claim: over every pair (a, b)
    with b of central power defect and ab != ba, some shift works.
    Runs on the scan kernel; an empty failure list is the verdict."""
    rd = kernels.ring_data(alg)
    q = alg.field.q
    defects = kernels.power_defects(rd, q)
    cen_mask = np.zeros(rd.size, dtype=np.uint8)
    cen_mask[list(center(alg).members)] = 1
    scalars = np.array(
        sorted(alg.encode(alg.scalar(f, alg.unity)) for f in alg.field.elements()),
        dtype=np.int64,
    )
    failures = kernels.lemma_sweep(rd, scalars, defects, cen_mask)
    verdict = FAILS if len(failures) else HOLDS
    witnesses = [[int(p) // rd.size, int(p) % rd.size] for p in failures[:8]]
    return _report(
        "noncommuting_shift_witness_sweep",
        verdict,
        witnesses=witnesses,
        notes={"pairs_failing": int(len(failures)), "size": rd.size},
    )


def check_defect_commutant_centrality(alg):
    """If b has central power defect and every element's power defect
    commutes with b, then b itself is central; swept over all b."""
    rd = kernels.ring_data(alg)
    q = alg.field.q
    defects = kernels.power_defects(rd, q)
    cen = center(alg)
    bad = []
    applicable = 0
    for b in range(rd.size):
        if int(defects[b]) not in cen:
            continue
        applicable += 1
        cb = set(
            int(v)
            for v in kernels.scan_commutant(
                rd, np.array([b], dtype=np.int64)
            )
        )
        if all(int(d) in cb for d in defects):
            if b not in cen:
                bad.append(b)
    verdict = FAILS if bad else HOLDS
    return _report(
        "defect_commutant_centrality",
        verdict,
        witnesses=bad[:8],
        notes={"elements_with_central_defect": applicable},
    )


def check_defect_subspace_commutativity(alg):
    """When the central-defect solution set is additively closed its
    members commute pairwise; when it is the whole algebra, the algebra
    is commutative."""
    sols = central_defect_solutions(alg)
    rd = kernels.ring_data(alg)
    members = list(sols)
    closed = True
    mem = set(members)
    for x in members:
        if kernels.neg_enc(rd, x) not in mem:
            closed = False
            break
        for y in members:
            if kernels.add_enc(rd, x, y) not in mem:
                closed = False
                break
        if not closed:
            break
    notes = {
        "additively_closed": closed,
        "covers_ring": len(sols) == alg.size,
    }
    if not closed:
        return _report("defect_subspace_commutativity", HOLDS, notes=notes)
    bad = []
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if kernels.mul_enc(rd, x, y) != kernels.mul_enc(rd, y, x):
                bad.append([x, y])
                break
        if bad:
            break
    if len(sols) == alg.size and not is_commutative(alg):
        bad.append(["covers_ring_but_noncommutative"])
    verdict = FAILS if bad else HOLDS
    return _report("defect_subspace_commutativity", verdict, witnesses=bad, notes=notes)


# -- the density bounds ---------------------------------------------------------


def check_solution_density_bound(alg):
    """In a noncommutative algebra over a q-element field, both the
    central-defect solutions of x^q - x and the exact solutions of
    x^q = x fill at most (q^2 - q + 1)/q^2 of the algebra."""
    if is_commutative(alg):
        return _report(
            "solution_density_bound",
            NOT_APPLICABLE,
            notes={"reason": "commutative"},
        )
    q = alg.field.q
    bound = solution_bound(q)
    defect_set = central_defect_solutions(alg)
    exact_set = power_solutions(alg, q)
    r_defect = defect_set.density
    r_exact = exact_set.density
    verdict = HOLDS if (r_defect <= bound and r_exact <= bound) else FAILS
    return _report(
        "solution_density_bound",
        verdict,
        witnesses=[defect_set.cardinality, exact_set.cardinality],
        densities={
            "central_defect_density": r_defect,
            "solution_density": r_exact,
            "bound": bound,
        },
        notes={
            "defect_equality": r_defect == bound,
            "solution_equality": r_exact == bound,
            "defect_set_equals_solution_set": defect_set.members == exact_set.members,
        },
    )


def check_equality_characterization(alg):
    """When the solution density attains (q^2 - q + 1)/q^2, the algebra
    is generated by its center plus two noncommuting solutions b, c with
    |center| = q^(n-2) and |centralizer| = q^(n-1) for both witnesses,
    and the center consists of solutions."""
    if is_commutative(alg):
        return _report(
            "equality_characterization",
            NOT_APPLICABLE,
            notes={"reason": "commutative"},
        )
    q = alg.field.q
    n = alg.dim
    bound = solution_bound(q)
    exact_set = power_solutions(alg, q)
    if exact_set.density != bound:
        return _report(
            "equality_characterization",
            NOT_APPLICABLE,
            notes={"reason": "density below the bound"},
            densities={"solution_density": exact_set.density, "bound": bound},
        )
    cen = center(alg)
    checks = {
        "center_size": len(cen) == q ** (n - 2),
        "center_inside_solutions": all(x in exact_set for x in cen),
    }
    witness = None
    for b in exact_set:
        if b in cen:
            continue
        cb = centralizer(alg, b)
        if len(cb) != q ** (n - 1):
            continue
        for c in exact_set:
            if c in cb:
                continue
            cc = centralizer(alg, c)
            if len(cc) != q ** (n - 1):
                continue
            gen = generated_subring(alg, list(cen) + [b, c])
            if len(gen) == alg.size:
                witness = (b, c)
                break
        if witness:
            break
    checks["generating_pair_found"] = witness is not None
    verdict = HOLDS if all(checks.values()) else FAILS
    return _report(
        "equality_characterization",
        verdict,
        witnesses=list(witness) if witness else [],
        densities={"solution_density": exact_set.density, "bound": bound},
        notes=checks,
    )


def _prime_power(n):
    p = None
    for d in range(2, n + 1):
        if d * d > n:
            p = n if p is None else p
            break
        if n % d == 0:
            p = d
            break
    m = n
    while m % p == 0:
        m //= p
    return (p, m == 1)


def check_prime_power_char_bound(ring):
    """For a ring of p^n elements: in characteristic p the solution
    bound for x^p = x delegates to the algebra form; in characteristic
    p^k (k > 1) the solution set of x^p = x and its translate by
    p^(k-1)*1 are disjoint, capping the count at |R|/2.  The binomial
    mechanism (x + p^(k-1))^p = x^p is swept exhaustively."""
    size = ring.size
    p, is_pp = _prime_power(size)
    if not is_pp:
        raise NotPrimePower(size)
    char = characteristic(ring)
    fring = as_finite_ring(ring)
    sols = power_solutions(fring, p)
    density = sols.density
    notes = {"p": p, "characteristic": char}
    if char == p:
        commutative = is_commutative(ring)
        if commutative:
            return _report(
                "prime_power_char_bound",
                NOT_APPLICABLE,
                notes={**notes, "reason": "commutative"},
            )
        view = as_algebra(fring)
        sub = check_solution_density_bound(view)
        notes["branch"] = "prime_characteristic"
        notes.update(sub.notes)
        return _report(
            "prime_power_char_bound",
            sub.verdict,
            witnesses=sub.witnesses,
            densities=sub.densities,
            notes=notes,
        )
    notes["branch"] = "higher_prime_power_characteristic"
    rd = kernels.ring_data(fring)
    shift = 0
    for _ in range(char // p):
        shift = kernels.add_enc(rd, shift, rd.unity)
    translate = {kernels.add_enc(rd, shift, x) for x in sols}
    disjoint = not (set(sols.members) & translate)
    half = 2 * len(sols) <= size
    binomial_ok = all(
        kernels.pow_enc(rd, kernels.add_enc(rd, x, shift), p)
        == kernels.pow_enc(rd, x, p)
        for x in range(size)
    )
    notes.update(
        {
            "translate_disjoint": disjoint,
            "at_most_half": half,
            "binomial_shift_identity": binomial_ok,
        }
    )
    verdict = HOLDS if (disjoint and half and binomial_ok) else FAILS
    return _report(
        "prime_power_char_bound",
        verdict,
        witnesses=[len(sols)],
        densities={"solution_density": density, "half": Fraction(1, 2)},
        notes=notes,
    )


def check_qring_threshold(alg):
    """An algebra whose density of solutions of x^q = x exceeds
    (q^2 - q + 1)/q^2 is a finite product of copies of the base field
    (and so has solution density exactly 1)."""
    q = alg.field.q
    bound = solution_bound(q)
    sols = power_solutions(alg, q)
    if sols.density <= bound:
        return _report(
            "qring_threshold",
            NOT_APPLICABLE,
            densities={"solution_density": sols.density, "bound": bound},
            notes={"reason": "density not above the bound"},
        )
    ok = is_q_ring(alg)
    full = sols.density == 1
    idem_count = len(idempotents(alg))
    expected_idems = 2 ** alg.dim
    return _report(
        "qring_threshold",
        HOLDS if (ok and full and idem_count == expected_idems) else FAILS,
        witnesses=[idem_count],
        densities={"solution_density": sols.density, "bound": bound},
        notes={
            "product_of_base_fields": ok,
            "density_is_one": full,
            "idempotent_count_matches": idem_count == expected_idems,
        },
    )


def check_indecomposable_equality(alg):
    """An indecomposable algebra attaining the solution-density bound is
    isomorphic to the canonical three-dimensional example."""
    if is_commutative(alg):
        return _report(
            "indecomposable_equality",
            NOT_APPLICABLE,
            notes={"reason": "commutative"},
        )
    q = alg.field.q
    bound = solution_bound(q)
    sols = power_solutions(alg, q)
    if sols.density != bound:
        return _report(
            "indecomposable_equality",
            NOT_APPLICABLE,
            notes={"reason": "density below the bound"},
        )
    if len(decompose(alg)) != 1:
        return _report(
            "indecomposable_equality",
            NOT_APPLICABLE,
            notes={"reason": "decomposable"},
        )
    target = make_S(alg.field)
    witness = is_isomorphic(alg, target)
    return _report(
        "indecomposable_equality",
        HOLDS if witness is not None else FAILS,
        witnesses=[witness] if witness is not None else [],
        notes={"dimension": alg.dim},
    )


def check_dim3_uniqueness(alg):
    """A three-dimensional noncommutative algebra has a one-dimensional
    radical, semisimple quotient isomorphic to F x F, and is isomorphic
    to the canonical example (the unique such algebra)."""
    if not isinstance(alg, Algebra) or alg.dim != 3:
        return _report(
            "dim3_uniqueness",
            NOT_APPLICABLE,
            notes={"reason": "not a three-dimensional algebra"},
        )
    if is_commutative(alg):
        return _report(
            "dim3_uniqueness",
            NOT_APPLICABLE,
            notes={"reason": "commutative"},
        )
    q = alg.field.q
    rad = jacobson_radical(alg)
    radical_line = len(rad) == q
    quotient_ok = False
    if radical_line:
        quo = quotient_ring(alg, rad)
        target = as_finite_ring(make_qring(alg.field, 2))
        quotient_ok = is_isomorphic(quo, target) is not None
    witness = is_isomorphic(alg, make_S(alg.field))
    verdict = HOLDS if (radical_line and quotient_ok and witness is not None) else FAILS
    return _report(
        "dim3_uniqueness",
        verdict,
        witnesses=[witness] if witness is not None else [],
        notes={
            "radical_cardinality": len(rad),
            "radical_is_line": radical_line,
            "quotient_is_field_pair": quotient_ok,
        },
    )


# -- idempotent densities --------------------------------------------------------


def check_idempotent_density_bound(ring):
    """A noncommutative finite ring has at most 3|R|/4 idempotents; at
    exactly 3|R|/4 the ring is generated (as a ring) by a central
    Boolean subring of cardinality |R|/4 together with two noncommuting
    idempotents."""
    if is_commutative(ring):
        return _report(
            "idempotent_density_bound",
            NOT_APPLICABLE,
            notes={"reason": "commutative"},
        )
    size = ring.size
    idem = idempotents(ring)
    i = len(idem)
    bound_ok = 4 * i <= 3 * size
    notes = {"idempotents": i, "equality": 4 * i == 3 * size}
    densities = {
        "idempotent_density": idem.density,
        "bound": Fraction(3, 4),
    }
    if not bound_ok:
        return _report(
            "idempotent_density_bound",
            FAILS,
            witnesses=[i],
            densities=densities,
            notes=notes,
        )
    if 4 * i != 3 * size:
        return _report(
            "idempotent_density_bound", HOLDS, densities=densities, notes=notes
        )

    fring = as_finite_ring(ring)
    target = size // 4
    cen_idem = central_idempotents(fring)
    candidates = []
    if len(cen_idem) == target:
        candidates.append(list(cen_idem))
    else:
        candidates.extend(_boolean_central_subrings(fring, cen_idem, target))
    witness = None
    rd = kernels.ring_data(fring)
    noncentral = [e for e in idempotents(fring) if e not in center(fring)]
    for cand in candidates:
        if not _is_boolean_subring(rd, cand):
            continue
        for b in noncentral:
            cb = set(
                int(v)
                for v in kernels.scan_commutant(rd, np.array([b], dtype=np.int64))
            )
            for c in noncentral:
                if c in cb:
                    continue
                gen = generated_subring(fring, list(cand) + [b, c])
                if len(gen) == size:
                    witness = (sorted(cand), b, c)
                    break
            if witness:
                break
        if witness:
            break
    notes["boolean_center_witness"] = witness is not None
    verdict = HOLDS if witness else FAILS
    witnesses = [witness[1], witness[2]] if witness else []
    return _report(
        "idempotent_density_bound",
        verdict,
        witnesses=witnesses,
        densities=densities,
        notes=notes,
    )


def _is_boolean_subring(rd, members):
    mem = set(int(m) for m in members)
    if 0 not in mem or rd.unity not in mem:
        return False
    for x in mem:
        if kernels.pow_enc(rd, x, 2) != x:
            return False
        if kernels.neg_enc(rd, x) not in mem:
            return False
        for y in mem:
            if kernels.add_enc(rd, x, y) not in mem:
                return False
            if kernels.mul_enc(rd, x, y) not in mem:
                return False
    return True


def _boolean_central_subrings(ring, cen_idem, target):
    """Subrings of the central idempotents with the requested size,
    smallest generating sets first."""
    from itertools import combinations

    rd = kernels.ring_data(ring)
    pool = [e for e in cen_idem if e not in (0, rd.unity)]
    seen = set()
    out = []
    for k in range(len(pool) + 1):
        for combo in combinations(pool, k):
            closure = kernels.closure_scan(
                rd, np.array(combo, dtype=np.int64)
            )
            key = tuple(int(v) for v in closure)
            if key in seen:
                continue
            seen.add(key)
            if len(key) == target and all(v in set(cen_idem.members) for v in key):
                out.append(list(key))
    return out


def check_boolean_threshold(ring):
    """A finite ring with more than 3|R|/4 idempotents is Boolean, and
    its indecomposable factors all have exactly two elements."""
    size = ring.size
    i = len(idempotents(ring))
    if 4 * i <= 3 * size:
        return _report(
            "boolean_threshold",
            NOT_APPLICABLE,
            notes={"idempotents": i, "reason": "at or below the threshold"},
        )
    boolean = is_boolean(ring)
    factors = decompose(ring)
    factor_sizes = sorted(f.size for f in factors)
    all_two = all(s == 2 for s in factor_sizes)
    verdict = HOLDS if (boolean and all_two) else FAILS
    return _report(
        "boolean_threshold",
        verdict,
        witnesses=factor_sizes,
        densities={"idempotent_density": Fraction(i, size)},
        notes={"boolean": boolean, "factor_count": len(factors)},
    )


def check_idempotent_two_over_p(ring, p):
    """A commutative ring whose cardinality is divisible by the prime p
    has idempotent density at most 2/p, with equality exactly for the
    product of the p-element field with a power of the two-element
    field."""
    size = ring.size
    if size % p:
        raise NotDividing(p, size)
    if not is_commutative(ring):
        return _report(
            "idempotent_two_over_p",
            NOT_APPLICABLE,
            notes={"reason": "noncommutative", "p": p},
        )
    i = len(idempotents(ring))
    density = Fraction(i, size)
    bound = Fraction(2, p)
    bound_ok = density <= bound
    factors = decompose(ring)
    sizes = sorted(f.size for f in factors)
    if p == 2:
        shaped = all(s == 2 for s in sizes)
    else:
        shaped = (
            sizes.count(2) == len(sizes) - 1
            and sizes[-1] == p
            and _factor_is_prime_field(factors, p)
        )
    equality = density == bound
    verdict = HOLDS if (bound_ok and (equality == shaped)) else FAILS
    return _report(
        "idempotent_two_over_p",
        verdict,
        witnesses=sizes,
        densities={"idempotent_density": density, "bound": bound},
        notes={"p": p, "equality": equality, "factors_match_shape": shaped},
    )


def _factor_is_prime_field(factors, p):
    big = [f for f in factors if f.size == p]
    if len(big) != 1:
        return False
    return is_isomorphic(big[0], make_zm(p)) is not None


def check_idempotent_equivalences(ring):
    """Four conditions coincide for every finite ring: being Boolean,
    idempotent count above 3|R|/4, central idempotent count above
    2|R|/3, and central idempotent count above |R|/2 with |R| not
    divisible by 3.  Additionally the window |R|/2 < i_c <= 2|R|/3 is
    hit exactly by the product of the three-element field with a power
    of the two-element field."""
    size = ring.size
    i = len(idempotents(ring))
    ic = len(central_idempotents(ring))
    conds = {
        "boolean": is_boolean(ring),
        "idempotents_above_three_quarters": 4 * i > 3 * size,
        "central_idempotents_above_two_thirds": 3 * ic > 2 * size,
        "central_idempotents_above_half_no_three": 2 * ic > size and size % 3 != 0,
    }
    values = list(conds.values())
    equal = all(v == values[0] for v in values)

    in_window = 2 * ic > size and 3 * ic <= 2 * size
    factors = decompose(ring)
    sizes = sorted(f.size for f in factors)
    shaped = (
        is_commutative(ring)
        and sizes.count(2) == len(sizes) - 1
        and sizes[-1:] == [3]
        and _factor_is_prime_field(factors, 3)
    )
    window_ok = in_window == shaped
    verdict = HOLDS if (equal and window_ok) else FAILS
    return _report(
        "idempotent_equivalences",
        verdict,
        witnesses=[i, ic],
        densities={
            "idempotent_density": Fraction(i, size),
            "central_idempotent_density": Fraction(ic, size),
        },
        notes={**conds, "window_hit": in_window, "window_shape": shaped},
    )


# -- density sequence ------------------------------------------------------------


def density_sequence(primes):
    """Exact solution densities of x^p = x in the canonical
    three-dimensional example over each prime field, computed by
    counting; they match (p^2 - p + 1)/p^2 and increase toward 1."""
    fractions = []
    counted = []
    for p in primes:
        field = make_field(p)
        s = make_S(field)
        sols = power_solutions(s, p)
        counted.append(sols.cardinality)
        fractions.append(sols.density)
    expected = [solution_bound(p) for p in primes]
    matches = fractions == expected
    increasing = all(a < b for a, b in zip(fractions, fractions[1:]))
    verdict = HOLDS if (matches and increasing) else FAILS
    return _report(
        "density_sequence",
        verdict,
        witnesses=counted,
        densities={f"p{p}": f for p, f in zip(primes, fractions)},
        notes={
            "primes": list(primes),
            "matches_closed_form": matches,
            "strictly_increasing": increasing,
        },
    )


# -- catalog and driver ------------------------------------------------------------


def catalog():
    """The named verification targets: enough rings to exercise every
    statement branch, both equality and strict cases."""
    fields = {q: make_field(*pk) for q, pk in {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1)}.items()}
    entries = []
    for q in (2, 3, 4, 5):
        entries.append((f"S(F{q})", make_S(fields[q])))
    entries.append(("M2(F2)", make_matrix(fields[2], 2)))
    entries.append(("M2(F3)", make_matrix(fields[3], 2)))
    entries.append(("T2(F2)", make_triangular(fields[2], 2)))
    entries.append(("T2(F3)", make_triangular(fields[3], 2)))
    for q in (2, 3, 4, 5):
        for m in (1, 2):
            prod = make_product(make_S(fields[q]), make_qring(fields[q], m))
            entries.append((f"S(F{q})xF{q}^{m}", prod))
    for q in (2, 3, 4, 5):
        for n in range(1, 5):
            entries.append((f"F{q}^{n}", make_qring(fields[q], n)))
    entries.append(("Z/4", make_zm(4)))
    entries.append(("Z/8", make_zm(8)))
    entries.append(("Z/9", make_zm(9)))
    for m in (1, 2, 3):
        entries.append((f"F3xF2^{m}", make_zm(3, *([2] * m))))
    return entries


SWEEP_LIMIT = 729


def verify_all(ring, sweep_limit=SWEEP_LIMIT):
    """Every applicable check on one ring, in a stable order."""
    reports = []
    if isinstance(ring, Algebra):
        reports.append(check_defect_subspace_commutativity(ring))
        reports.append(check_defect_commutant_centrality(ring))
        reports.append(check_solution_density_bound(ring))
        reports.append(check_equality_characterization(ring))
        reports.append(check_qring_threshold(ring))
        reports.append(check_indecomposable_equality(ring))
        if ring.dim == 3:
            reports.append(check_dim3_uniqueness(ring))
        if ring.size <= sweep_limit:
            reports.append(sweep_shift_witness(ring))
    size = ring.size
    if _prime_power(size)[1]:
        reports.append(check_prime_power_char_bound(ring))
    reports.append(check_idempotent_density_bound(ring))
    reports.append(check_boolean_threshold(ring))
    for p in _prime_divisors(size):
        reports.append(check_idempotent_two_over_p(ring, p))
    reports.append(check_idempotent_equivalences(ring))
    return reports


def _prime_divisors(n):
    out = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def verify_catalog(sweep_limit=SWEEP_LIMIT):
    """(name, report) pairs for every catalog entry, preceded by the
    field-level power-sum dichotomy checks."""
    results = []
    for q, pk in ((2, (2, 1)), (3, (3, 1)), (4, (2, 2)), (5, (5, 1)), (7, (7, 1)), (8, (2, 3)), (9, (3, 2))):
        results.append((f"F{q}", check_power_sum_dichotomy(make_field(*pk))))
    for name, ring in catalog():
        for report in verify_all(ring, sweep_limit=sweep_limit):
            results.append((name, report))
    return results
