"""Theorem-check behavior: verdicts, witnesses, exact densities, and
re-checkability of every reported witness against plain arithmetic."""

from fractions import Fraction

import pytest

from ringlab import algebra, finring, gf, structure, theorems
from ringlab.errors import DegreeMismatch, NotDividing, NotPrimePower

F2 = gf.make_field(2)
F3 = gf.make_field(3)
F4 = gf.make_field(2, 2)
F5 = gf.make_field(5)


# -- power-sum dichotomy ----------------------------------------------------


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_power_sum_dichotomy_all_fields(p, k):
    rep = theorems.check_power_sum_dichotomy(gf.make_field(p, k))
    assert rep.verdict == "holds"
    assert rep.witnesses == []


# -- commutation criterion ---------------------------------------------------


def test_power_sum_commutation_noncommuting_pair():
    S = algebra.make_S(F3)
    a, b = S.basis(1), S.basis(2)
    assert S.mul(a, b) != S.mul(b, a)
    rep = theorems.check_power_sum_commutation(S, a, b, [0, 0, 0, 1])
    assert rep.verdict == "holds"
    # contrapositive: noncommuting pair must push the sum out of the
    # centralizer of b
    assert rep.notes["sum_in_centralizer"] is False
    assert rep.notes["commutator_identity"] is True


def test_power_sum_commutation_commuting_pair():
    S = algebra.make_S(F3)
    e1 = S.basis(1)
    rep = theorems.check_power_sum_commutation(S, e1, e1, [0, 0, 0, 1])
    assert rep.verdict == "holds"
    assert rep.notes["pair_commutes"] is True


def test_power_sum_commutation_nonmonic_polynomial():
    S = algebra.make_S(F3)
    a, b = S.basis(1), S.basis(2)
    # leading coefficient 2 is normalized away; verdict is unchanged
    rep = theorems.check_power_sum_commutation(S, a, b, [1, 2, 0, 2])
    assert rep.verdict == "holds"


def test_power_sum_commutation_degree_guard():
    S = algebra.make_S(F3)
    a, b = S.basis(1), S.basis(2)
    with pytest.raises(DegreeMismatch):
        theorems.check_power_sum_commutation(S, a, b, [0, 1, 1])
    with pytest.raises(DegreeMismatch):
        # degree collapses to 2 after stripping the zero leading term
        theorems.check_power_sum_commutation(S, a, b, [0, 1, 1, 0])


def test_power_sum_commutation_noncentral_defect_not_applicable():
    M = algebra.make_matrix(F3, 2)
    cen = structure.center(M)
    bad = None
    for enc in range(M.size):
        x = M.decode(enc)
        if M.encode(algebra.frobenius_defect(M, x)) not in cen:
            bad = x
            break
    assert bad is not None
    rep = theorems.check_power_sum_commutation(M, M.basis(0), bad, [0, 0, 0, 1])
    assert rep.verdict == "not_applicable"


def test_commutator_identity_sign_is_pinned_at_q3():
    # In characteristic 2 both orientations of the identity agree, so a
    # q = 3 sweep is what actually pins the sign.  The flipped version
    # b*c - c*b == a*b^q - b^q*a must fail somewhere.
    S = algebra.make_S(F3)
    q = 3
    flipped_breaks = False
    for ae in range(S.size):
        a = S.decode(ae)
        for be in range(S.size):
            b = S.decode(be)
            c_top = S.zero
            for t in range(q):
                c_top = S.add(
                    c_top, S.mul(S.pow(b, q - 1 - t), S.mul(a, S.pow(b, t)))
                )
            lhs = S.sub(S.mul(b, c_top), S.mul(c_top, b))
            assert lhs == S.sub(
                S.mul(S.pow(b, q), a), S.mul(a, S.pow(b, q))
            )
            if lhs != S.sub(S.mul(a, S.pow(b, q)), S.mul(S.pow(b, q), a)):
                flipped_breaks = True
    assert flipped_breaks


def test_shift_witness_single_pair():
    S = algebra.make_S(F3)
    a, b = S.basis(1), S.basis(2)
    rep = theorems.check_shift_witness(S, a, b)
    assert rep.verdict == "holds"
    (f,) = rep.witnesses
    shifted = S.add(a, S.scalar(f, b))
    defect = algebra.frobenius_defect(S, shifted)
    assert S.encode(defect) not in structure.centralizer(S, b)


def test_shift_witness_commuting_pair_not_applicable():
    S = algebra.make_S(F3)
    rep = theorems.check_shift_witness(S, S.basis(1), S.basis(1))
    assert rep.verdict == "not_applicable"


@pytest.mark.parametrize(
    "make",
    [
        lambda: algebra.make_S(F2),
        lambda: algebra.make_S(F3),
        lambda: algebra.make_matrix(F2, 2),
        lambda: algebra.make_triangular(F3, 2),
    ],
)
def test_sweep_shift_witness_exhaustive(make):
    rep = theorems.sweep_shift_witness(make())
    assert rep.verdict == "holds"
    assert rep.notes["pairs_failing"] == 0


@pytest.mark.parametrize(
    "make",
    [
        lambda: algebra.make_S(F2),
        lambda: algebra.make_S(F3),
        lambda: algebra.make_matrix(F2, 2),
    ],
)
def test_defect_commutant_centrality(make):
    rep = theorems.check_defect_commutant_centrality(make())
    assert rep.verdict == "holds"
    assert rep.witnesses == []


def test_defect_subspace_commutativity_on_s():
    rep = theorems.check_defect_subspace_commutativity(algebra.make_S(F3))
    assert rep.verdict == "holds"
    # hand check: 1 and e1 both solve x^3 = x but their sum does not
    S = algebra.make_S(F3)
    sols = set(structure.central_defect_solutions(S))
    e1 = S.encode(S.basis(1))
    one = S.encode(S.unity)
    assert e1 in sols and one in sols
    assert rep.notes["additively_closed"] is (
        all(
            S.encode(S.add(S.decode(x), S.decode(y))) in sols
            for x in sols
            for y in sols
        )
    )


def test_defect_subspace_commutativity_commutative_case():
    Q = algebra.make_qring(F3, 2)
    rep = theorems.check_defect_subspace_commutativity(Q)
    assert rep.verdict == "holds"
    assert rep.notes["covers_ring"] is True
    assert rep.notes["additively_closed"] is True


# -- density bounds -----------------------------------------------------------


@pytest.mark.parametrize("field", [F2, F3, F4, F5])
def test_solution_density_equality_on_s(field):
    q = field.q
    rep = theorems.check_solution_density_bound(algebra.make_S(field))
    assert rep.verdict == "holds"
    bound = Fraction(q * q - q + 1, q * q)
    assert rep.densities["solution_density"] == bound
    assert rep.densities["central_defect_density"] == bound
    assert rep.notes["solution_equality"] and rep.notes["defect_equality"]


@pytest.mark.parametrize("field", [F2, F3])
def test_solution_density_strict_on_full_matrices(field):
    rep = theorems.check_solution_density_bound(algebra.make_matrix(field, 2))
    assert rep.verdict == "holds"
    assert not rep.notes["solution_equality"]
    assert not rep.notes["defect_equality"]
    assert rep.densities["solution_density"] < rep.densities["bound"]
    assert rep.densities["central_defect_density"] < rep.densities["bound"]


def test_solution_density_not_applicable_commutative():
    rep = theorems.check_solution_density_bound(algebra.make_qring(F3, 2))
    assert rep.verdict == "not_applicable"


@pytest.mark.parametrize(
    "make,q,n",
    [
        (lambda: algebra.make_S(F2), 2, 3),
        (lambda: algebra.make_S(F3), 3, 3),
        (lambda: algebra.make_product(algebra.make_S(F2), algebra.make_qring(F2, 1)), 2, 4),
    ],
)
def test_equality_characterization_witnesses_recheck(make, q, n):
    alg = make()
    rep = theorems.check_equality_characterization(alg)
    assert rep.verdict == "holds"
    b_enc, c_enc = rep.witnesses
    sols = structure.power_solutions(alg, q)
    cen = structure.center(alg)
    assert b_enc in sols and c_enc in sols
    assert len(cen) == q ** (n - 2)
    cb = structure.centralizer(alg, alg.decode(b_enc))
    cc = structure.centralizer(alg, alg.decode(c_enc))
    assert len(cb) == len(cc) == q ** (n - 1)
    assert c_enc not in cb
    gen = structure.generated_subring(alg, list(cen) + [b_enc, c_enc])
    assert len(gen) == alg.size


def test_equality_characterization_below_bound_not_applicable():
    rep = theorems.check_equality_characterization(algebra.make_matrix(F2, 2))
    assert rep.verdict == "not_applicable"


# -- prime-power characteristic ------------------------------------------------


@pytest.mark.parametrize("m,p", [(4, 2), (8, 2), (9, 3)])
def test_prime_power_char_bound_translate_disjoint(m, p):
    ring = finring.make_zm(m)
    rep = theorems.check_prime_power_char_bound(ring)
    assert rep.verdict == "holds"
    assert rep.notes["branch"] == "higher_prime_power_characteristic"
    assert rep.notes["translate_disjoint"]
    assert rep.notes["at_most_half"]
    assert rep.notes["binomial_shift_identity"]
    # independent recheck of the disjointness
    sols = set(structure.power_solutions(ring, p))
    shift = (m // p) % m
    assert not (sols & {(x + shift) % m for x in sols})
    assert 2 * len(sols) <= m


def test_prime_power_char_bound_prime_branch():
    ring = finring.as_finite_ring(algebra.make_S(F2))
    rep = theorems.check_prime_power_char_bound(ring)
    assert rep.verdict == "holds"
    assert rep.notes["branch"] == "prime_characteristic"


def test_prime_power_char_bound_rejects_mixed_size():
    with pytest.raises(NotPrimePower):
        theorems.check_prime_power_char_bound(finring.make_zm(6))


def test_prime_power_char_bound_commutative_prime_char():
    rep = theorems.check_prime_power_char_bound(algebra.make_qring(F2, 2))
    assert rep.verdict == "not_applicable"


# -- q-ring threshold ------------------------------------------------------------


def test_qring_threshold_above_bound():
    Q = algebra.make_qring(F2, 3)
    rep = theorems.check_qring_threshold(Q)
    assert rep.verdict == "holds"
    assert rep.witnesses == [8]
    assert rep.densities["solution_density"] == 1


def test_qring_threshold_at_bound_not_applicable():
    rep = theorems.check_qring_threshold(algebra.make_S(F2))
    assert rep.verdict == "not_applicable"


# -- structure of the equality case -----------------------------------------------


def test_indecomposable_equality_s_and_triangular():
    for alg in (algebra.make_S(F3), algebra.make_triangular(F2, 2)):
        rep = theorems.check_indecomposable_equality(alg)
        assert rep.verdict == "holds"
        (witness,) = rep.witnesses
        assert structure.check_isomorphism(alg, algebra.make_S(alg.field), witness)


def test_indecomposable_equality_decomposable_not_applicable():
    prod = algebra.make_product(algebra.make_S(F2), algebra.make_qring(F2, 1))
    rep = theorems.check_indecomposable_equality(prod)
    assert rep.verdict == "not_applicable"
    assert rep.notes["reason"] == "decomposable"


@pytest.mark.parametrize("field", [F2, F3, F4, F5])
def test_dim3_uniqueness_on_s(field):
    rep = theorems.check_dim3_uniqueness(algebra.make_S(field))
    assert rep.verdict == "holds"
    assert rep.notes["radical_cardinality"] == field.q
    assert rep.notes["quotient_is_field_pair"]


def test_dim3_uniqueness_triangular():
    rep = theorems.check_dim3_uniqueness(algebra.make_triangular(F3, 2))
    assert rep.verdict == "holds"


def test_dim3_uniqueness_not_applicable():
    assert theorems.check_dim3_uniqueness(algebra.make_matrix(F2, 2)).verdict == "not_applicable"
    assert theorems.check_dim3_uniqueness(algebra.make_qring(F2, 3)).verdict == "not_applicable"


# -- idempotent bounds --------------------------------------------------------------


def test_idempotent_bound_strict_on_matrices():
    M = algebra.make_matrix(F2, 2)
    rep = theorems.check_idempotent_density_bound(M)
    assert rep.verdict == "holds"
    assert rep.notes["idempotents"] == 8
    assert rep.notes["equality"] is False


def test_idempotent_bound_equality_on_s_f2():
    S = algebra.make_S(F2)
    rep = theorems.check_idempotent_density_bound(S)
    assert rep.verdict == "holds"
    assert rep.notes["idempotents"] == 6
    assert rep.notes["equality"] is True
    assert rep.notes["boolean_center_witness"] is True
    b_enc, c_enc = rep.witnesses
    ring = finring.as_finite_ring(S)
    idem = structure.idempotents(ring)
    assert b_enc in idem and c_enc in idem
    b, c = ring.decode(b_enc), ring.decode(c_enc)
    assert ring.mul(b, c) != ring.mul(c, b)


def test_idempotent_bound_commutative_not_applicable():
    rep = theorems.check_idempotent_density_bound(finring.make_zm(8))
    assert rep.verdict == "not_applicable"


def test_boolean_threshold():
    rep = theorems.check_boolean_threshold(algebra.make_qring(F2, 3))
    assert rep.verdict == "holds"
    assert rep.witnesses == [2, 2, 2]
    # S has exactly 3|R|/4 idempotents, which is not above the threshold
    assert theorems.check_boolean_threshold(algebra.make_S(F2)).verdict == "not_applicable"


@pytest.mark.parametrize("m", [1, 2, 3])
def test_two_over_p_equality_shape(m):
    ring = finring.make_zm(3, *([2] * m))
    rep = theorems.check_idempotent_two_over_p(ring, 3)
    assert rep.verdict == "holds"
    assert rep.notes["equality"] is True
    assert rep.notes["factors_match_shape"] is True
    assert sorted(rep.witnesses) == sorted([3] + [2] * m)


def test_two_over_p_strict_cases():
    rep = theorems.check_idempotent_two_over_p(finring.make_zm(9), 3)
    assert rep.verdict == "holds"
    assert rep.notes["equality"] is False

    rep = theorems.check_idempotent_two_over_p(finring.make_zm(6), 3)
    assert rep.verdict == "holds"
    assert rep.notes["equality"] is True  # Z/6 is F_3 x F_2 in disguise

    rep = theorems.check_idempotent_two_over_p(finring.make_zm(6), 2)
    assert rep.verdict == "holds"
    assert rep.notes["equality"] is False


def test_two_over_p_guards():
    with pytest.raises(NotDividing):
        theorems.check_idempotent_two_over_p(finring.make_zm(6), 5)
    ring = finring.as_finite_ring(algebra.make_matrix(F2, 2))
    assert theorems.check_idempotent_two_over_p(ring, 2).verdict == "not_applicable"


def test_equivalences_window_and_boolean():
    # boolean ring: all four conditions true
    rep = theorems.check_idempotent_equivalences(algebra.make_qring(F2, 2))
    assert rep.verdict == "holds"
    assert all(
        rep.notes[k]
        for k in (
            "boolean",
            "idempotents_above_three_quarters",
            "central_idempotents_above_two_thirds",
            "central_idempotents_above_half_no_three",
        )
    )
    # window case: F_3 x F_2^2 sits strictly inside (|R|/2, 2|R|/3]
    rep = theorems.check_idempotent_equivalences(finring.make_zm(3, 2, 2))
    assert rep.verdict == "holds"
    assert rep.notes["window_hit"] and rep.notes["window_shape"]
    # Z/6 is isomorphic to F_3 x F_2, so it must also land in the window
    rep = theorems.check_idempotent_equivalences(finring.make_zm(6))
    assert rep.verdict == "holds"
    assert rep.notes["window_hit"] and rep.notes["window_shape"]
    # a ring outside the window with all conditions false
    rep = theorems.check_idempotent_equivalences(finring.make_zm(9))
    assert rep.verdict == "holds"
    assert not rep.notes["window_hit"]


# -- density sequence ----------------------------------------------------------------


def test_density_sequence_exact_values():
    rep = theorems.density_sequence([2, 3, 5, 7])
    assert rep.verdict == "holds"
    assert rep.witnesses == [6, 21, 105, 301]
    assert rep.densities == {
        "p2": Fraction(3, 4),
        "p3": Fraction(7, 9),
        "p5": Fraction(21, 25),
        "p7": Fraction(43, 49),
    }
    assert rep.notes["strictly_increasing"]


def test_density_sequence_detects_disorder():
    rep = theorems.density_sequence([3, 2])
    assert rep.verdict == "fails"
    assert rep.notes["strictly_increasing"] is False


# -- catalog and driver ----------------------------------------------------------------


def test_catalog_shape():
    entries = theorems.catalog()
    names = [n for n, _ in entries]
    assert len(names) == len(set(names))
    sizes = {n: r.size for n, r in entries}
    assert sizes["S(F5)xF5^2"] == 5 ** 5
    assert sizes["M2(F3)"] == 81
    assert sizes["Z/9"] == 9
    assert sizes["F3xF2^3"] == 24
    assert max(sizes.values()) == 3125


def test_verify_all_statement_order():
    reports = theorems.verify_all(algebra.make_S(F3))
    ids = [r.statement for r in reports]
    assert ids == [
        "defect_subspace_commutativity",
        "defect_commutant_centrality",
        "solution_density_bound",
        "equality_characterization",
        "qring_threshold",
        "indecomposable_equality",
        "dim3_uniqueness",
        "noncommuting_shift_witness_sweep",
        "prime_power_char_bound",
        "idempotent_density_bound",
        "boolean_threshold",
        "idempotent_two_over_p",
        "idempotent_equivalences",
    ]
    assert all(r.ok for r in reports)


def test_verify_all_finite_ring():
    reports = theorems.verify_all(finring.make_zm(4))
    ids = {r.statement for r in reports}
    assert "prime_power_char_bound" in ids
    assert "idempotent_equivalences" in ids
    assert all(r.ok for r in reports)


def test_report_serialization():
    rep = theorems.check_solution_density_bound(algebra.make_S(F2))
    d = rep.to_dict()
    assert d["statement"] == "solution_density_bound"
    assert d["verdict"] == "holds"
    assert d["densities"]["solution_density"] == "3/4"
    assert d["densities"]["bound"] == "3/4"


def test_verify_catalog_is_all_green():
    results = theorems.verify_catalog()
    bad = [(n, r.statement) for n, r in results if r.verdict == "fails"]
    assert bad == []
    assert len(results) > 400
    # the known equality cases really are reported as equalities
    eq = {
        n
        for n, r in results
        if r.statement == "solution_density_bound" and r.notes.get("solution_equality")
    }
    assert {"S(F2)", "S(F3)", "S(F4)", "S(F5)"} <= eq
    assert "M2(F2)" not in eq and "M2(F3)" not in eq
