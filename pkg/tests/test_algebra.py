"""Structure-constant algebras: validation, arithmetic, builtins."""

import pytest

from ringlab import algebra, gf
from ringlab.errors import (
    AlgebraMismatch,
    DimensionTooLarge,
    NotAssociative,
    NotUnital,
    ShapeMismatch,
)

F2 = gf.make_field(2)
F3 = gf.make_field(3)
F4 = gf.make_field(2, 2)
F5 = gf.make_field(5)


def test_dimension_one_is_the_field():
    alg = algebra.make_algebra(F3, 1, [[(1,)]], (1,))
    for a in F3.elements():
        for b in F3.elements():
            assert alg.mul((a,), (b,)) == (F3.mul(a, b),)


def test_make_algebra_rejects_bad_shapes():
    with pytest.raises(ShapeMismatch):
        algebra.make_algebra(F2, 2, [[(1, 0)]], (1, 0))
    with pytest.raises(ShapeMismatch):
        algebra.make_algebra(F2, 1, [[(5,)]], (1,))
    with pytest.raises(ShapeMismatch):
        algebra.make_algebra(F2, 1, [[(1,)]], (1, 0))


def test_make_algebra_rejects_broken_unity():
    # e0 * e1 = 0 makes (1, 0) fail as a left unity on basis element 1
    bad = [[(1, 0), (0, 0)], [(0, 1), (0, 0)]]
    with pytest.raises(NotUnital):
        algebra.make_algebra(F2, 2, bad, (1, 0))


def test_make_algebra_rejects_non_associative():
    # unity e0; e1*e1 = e2, e1*e2 = 1, e2*e1 = 0, e2*e2 = 0:
    # (e1 e1) e1 = e2 e1 = 0 but e1 (e1 e1) = e1 e2 = 1
    e0, e1, e2 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    zero = (0, 0, 0)
    table = [
        [e0, e1, e2],
        [e1, e2, e0],
        [e2, zero, zero],
    ]
    with pytest.raises(NotAssociative) as err:
        algebra.make_algebra(F2, 3, table, e0)
    assert err.value.triple == (1, 1, 1)


def test_S_multiplication_facts():
    s = algebra.make_S(F2)
    e1, e2 = s.basis(1), s.basis(2)
    assert s.mul(e1, e2) == e1
    assert s.mul(e2, e1) == e2
    assert s.mul(e1, e1) == e1
    # e1 + e2 squares to zero in characteristic 2
    y = s.add(e1, e2)
    assert s.pow(y, 2) == s.zero
    for x in s.elements():
        assert s.mul(x, s.unity) == x
        assert s.mul(s.unity, x) == x


@pytest.mark.parametrize("field", [F2, F3, F4, F5])
def test_S_power_closed_form(field):
    """[f1 (e1 - e2) + f2]^m = f2^m + m f2^(m-1) f1 (e1 - e2)."""
    s = algebra.make_S(field)
    q = field.q
    d = s.sub(s.basis(1), s.basis(2))
    for f1 in field.elements():
        for f2 in field.elements():
            x = s.add(s.scalar(f1, d), s.scalar(f2, s.unity))
            for m in range(1, 2 * q + 1):
                lead = field.mul(
                    _embed_int(field, m), field.mul(field.pow(f2, m - 1), f1)
                )
                expected = s.add(
                    s.scalar(field.pow(f2, m), s.unity), s.scalar(lead, d)
                )
                assert s.pow(x, m) == expected, (f1, f2, m)


def _embed_int(field, m):
    """The image of the integer m in the field (m copies of 1)."""
    out = 0
    for _ in range(m % field.p):
        out = field.add(out, 1)
    return out


@pytest.mark.parametrize("field", [F2, F3, F4, F5])
def test_S_fixed_points_of_q_power(field):
    """(f1 e1 + f2 e2)^q differs from the element exactly when
    f1 + f2 = 0 (and the element is nonzero)."""
    s = algebra.make_S(field)
    q = field.q
    for f1 in field.elements():
        for f2 in field.elements():
            x = s.add(s.scalar(f1, s.basis(1)), s.scalar(f2, s.basis(2)))
            fixed = s.pow(x, q) == x
            if f1 == 0 and f2 == 0:
                assert fixed
            else:
                assert fixed == (field.add(f1, f2) != 0)


def test_eval_poly_and_defect():
    s = algebra.make_S(F2)
    e1 = s.basis(1)
    # x^2 + x at e1: e1 + e1 = 0
    assert algebra.eval_poly(s, [0, 1, 1], e1) == s.zero
    # defect of e1 is zero (e1 idempotent), defect of e1 + e2 is e1 + e2
    assert algebra.frobenius_defect(s, e1) == s.zero
    y = s.add(e1, s.basis(2))
    assert algebra.frobenius_defect(s, y) == y


def test_matrix_algebra_m2():
    m2 = algebra.make_matrix(F2, 2)
    assert m2.dim == 4
    assert m2.size == 16
    # E01 * E10 = E00, E10 * E01 = E11, E01 * E01 = 0
    e01 = m2.basis(1)
    e10 = m2.basis(2)
    assert m2.mul(e01, e10) == m2.basis(0)
    assert m2.mul(e10, e01) == m2.basis(3)
    assert m2.mul(e01, e01) == m2.zero


def test_triangular_algebra():
    t2 = algebra.make_triangular(F3, 2)
    assert t2.dim == 3
    assert t2.size == 27
    # basis order: (0,0), (0,1), (1,1)
    d0, n01, d1 = t2.basis(0), t2.basis(1), t2.basis(2)
    assert t2.mul(d0, n01) == n01
    assert t2.mul(n01, d0) == t2.zero
    assert t2.mul(n01, d1) == n01


def test_qring_componentwise():
    r = algebra.make_qring(F3, 2)
    assert r.mul((1, 2), (2, 2)) == (2, 1)
    assert r.unity == (1, 1)


def test_product_blocks_and_mismatch():
    s = algebra.make_S(F2)
    f = algebra.make_qring(F2, 1)
    prod = algebra.make_product(s, f)
    assert prod.dim == 4
    x = (0, 1, 0, 1)
    y = (1, 0, 1, 1)
    # componentwise multiplication of the two blocks
    left = s.mul((0, 1, 0), (1, 0, 1))
    right = f.mul((1,), (1,))
    assert prod.mul(x, y) == tuple(left) + tuple(right)
    with pytest.raises(AlgebraMismatch):
        algebra.make_product(s, algebra.make_qring(F3, 1))


def test_product_idempotents_componentwise():
    s = algebra.make_S(F2)
    f = algebra.make_qring(F2, 1)
    prod = algebra.make_product(s, f)
    for x in prod.elements():
        a, b = x[:3], x[3:]
        is_idem = prod.mul(x, x) == x
        assert is_idem == (s.mul(a, a) == a and f.mul(b, b) == b)


def test_encode_decode_roundtrip():
    s = algebra.make_S(F3)
    for code in range(s.size):
        assert s.encode(s.decode(code)) == code
    assert s.encode(s.basis(1)) == 3  # q^1


def test_enumerate_budget():
    from ringlab.errors import BudgetExceeded

    s = algebra.make_S(F2)
    assert len(list(algebra.enumerate_ring(s))) == 8
    with pytest.raises(BudgetExceeded):
        algebra.enumerate_ring(s, budget=4)


def test_dimension_budget_guard():
    with pytest.raises(DimensionTooLarge):
        algebra.make_matrix(F5, 4)  # 5^16 elements is far past the budget
