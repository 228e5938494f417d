"""Field construction, scalar arithmetic, and power sums."""

import fractions

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import gf
from ringlab.errors import DegreeOutOfRange, DivisionByZero, FieldTooLarge, NotPrime


# ---------------------------------------------------------------------------
# oracle: minimal, independent polynomial arithmetic over Z/p, used to pin
# down the canonical modulus without touching the library implementation


def oracle_poly_rem(a, m, p):
    r = list(a)
    while len(r) >= len(m) and r:
        lead = r[-1]
        if lead:
            off = len(r) - len(m)
            for i, c in enumerate(m):
                r[off + i] = (r[off + i] - lead * c) % p
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def oracle_least_irreducible(p, k):
    """Smallest-encoding monic irreducible of degree k, by trial division
    against every lower-degree monic polynomial."""

    def digits(code, width):
        out = []
        for _ in range(width):
            out.append(code % p)
            code //= p
        return out

    for code in range(p**k):
        poly = digits(code, k) + [1]
        divisible = False
        for d in range(1, k):
            for dc in range(p**d):
                divisor = digits(dc, d) + [1]
                if not oracle_poly_rem(poly, divisor, p):
                    divisible = True
                    break
            if divisible:
                break
        if not divisible:
            return tuple(poly)
    raise AssertionError


def test_modulus_gf4_is_unique_irreducible_quadratic():
    f = gf.make_field(2, 2)
    assert f.modulus == (1, 1, 1)  # x^2 + x + 1
    assert f.modulus == oracle_least_irreducible(2, 2)


def test_modulus_gf9_matches_enumeration_oracle():
    f = gf.make_field(3, 2)
    assert f.modulus == oracle_least_irreducible(3, 2)
    assert f.modulus == (1, 0, 1)  # x^2 + 1


@pytest.mark.parametrize("p,k", [(2, 1), (2, 3), (3, 2), (5, 1), (2, 4)])
def test_modulus_agrees_with_oracle(p, k):
    assert gf.make_field(p, k).modulus == oracle_least_irreducible(p, k)


def test_make_field_validation():
    with pytest.raises(NotPrime):
        gf.make_field(6, 1)
    with pytest.raises(NotPrime):
        gf.make_field(1, 1)
    with pytest.raises(DegreeOutOfRange):
        gf.make_field(2, 0)
    with pytest.raises(FieldTooLarge):
        gf.make_field(2, 17)
    # same (p, k) yields the identical cached object
    assert gf.make_field(3, 2) is gf.make_field(3, 2)


def test_scalar_arithmetic_examples():
    f3 = gf.make_field(3)
    assert f3.mul(2, 2) == 1
    f5 = gf.make_field(5)
    assert f5.inv(3) == 2
    f4 = gf.make_field(2, 2)
    # x * x = x + 1 under the canonical modulus
    assert f4.mul(2, 2) == 3
    with pytest.raises(DivisionByZero):
        f4.inv(0)


FIELDS_TO_16 = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2),
                (11, 1), (13, 1), (2, 4)]


@pytest.mark.parametrize("p,k", FIELDS_TO_16)
def test_field_axioms_exhaustive(p, k):
    """Associativity, commutativity, distributivity, inverses: every
    element (pair, triple) for q <= 16."""
    f = gf.make_field(p, k)
    q = f.q
    els = list(f.elements())
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, q) == a
    for a in els:
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
    for a in els:
        for b in els:
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_zero_pow_zero_is_one():
    for p, k in [(2, 1), (3, 1), (2, 2)]:
        assert gf.make_field(p, k).pow(0, 0) == 1


def test_power_sum_gf4_r3_by_direct_sum():
    """Independent accumulation of cubes in GF(4)."""
    f = gf.make_field(2, 2)
    total = 0
    for a in f.elements():
        cube = f.mul(f.mul(a, a), a)
        total = f.add(total, cube)
    assert total == 1  # -1 in characteristic 2
    assert gf.power_sum(f, 3) == 1


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1),
                                 (2, 3), (3, 2)])
def test_power_sum_dichotomy(p, k):
    f = gf.make_field(p, k)
    q = f.q
    minus_one = f.neg(1)
    assert gf.power_sum(f, 0) == 0
    for r in range(1, 3 * (q - 1) + 1):
        expected = minus_one if r % (q - 1) == 0 else 0
        assert gf.power_sum(f, r) == expected, (q, r)


def test_tables_consistent_with_scalar_ops():
    f = gf.make_field(3, 2)
    add, mul, neg = f.tables()
    for a in f.elements():
        assert neg[a] == f.neg(a)
        for b in f.elements():
            assert add[a, b] == f.add(a, b)
            assert mul[a, b] == f.mul(a, b)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS_TO_16), st.data())
def test_frobenius_fixes_everything(pk, data):
    p, k = pk
    f = gf.make_field(p, k)
    a = data.draw(st.integers(min_value=0, max_value=f.q - 1))
    assert f.pow(a, f.q) == a
    # binomial collapse: (a + b)^p = a^p + b^p
    b = data.draw(st.integers(min_value=0, max_value=f.q - 1))
    assert f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p))


def test_density_fraction_helper_sanity():
    # exact rational bookkeeping used throughout: no floats anywhere
    assert fractions.Fraction(6, 8) == fractions.Fraction(3, 4)
