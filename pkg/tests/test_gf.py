import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfcodes.gf import field_arith, field_new, gf, is_irreducible
from oracles import oracle_field

FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (2, 8)]


@pytest.mark.parametrize("p,m", FIELDS)
def test_mul_table_matches_polynomial_product(p, m):
    ctx = field_new(p, m)
    ref = oracle_field(ctx)
    els = range(ctx.q) if ctx.q <= 32 else range(0, ctx.q, 7)
    a = np.array([x for x in els for _ in els])
    b = np.array([y for _ in els for y in els])
    got = ctx.mul(a, b)
    want = [ref.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert got.tolist() == want


@pytest.mark.parametrize("p,m", FIELDS)
def test_add_and_neg_match_digitwise_arithmetic(p, m):
    ctx = field_new(p, m)
    ref = oracle_field(ctx)
    for a in range(min(ctx.q, 40)):
        assert int(ctx.neg(a)) == ref.neg(a)
        for b in range(min(ctx.q, 40)):
            assert int(ctx.add(a, b)) == ref.add(a, b)
            assert int(ctx.sub(ctx.add(a, b), b)) == a


@pytest.mark.parametrize("p,m", FIELDS)
def test_every_nonzero_element_has_an_inverse(p, m):
    ctx = field_new(p, m)
    a = np.arange(1, ctx.q)
    assert np.all(ctx.mul(a, ctx.inv(a)) == 1)


def test_prime_field_gf5():
    f = field_new(5, 1)
    assert f.q == 5
    assert list(f.elements()) == [0, 1, 2, 3, 4]
    assert int(f.mul(2, 3)) == 1


def test_gf256_primitive_element_has_order_255():
    f = field_new(2, 8)
    g = f.primitive_element()
    assert int(f.pow(g, 255)) == 1
    powers = {int(f.pow(g, e)) for e in range(255)}
    assert powers == set(range(1, 256))


def test_builtin_moduli_are_the_documented_ones():
    assert tuple(field_new(2, 2).modulus) == (1, 1, 1)
    assert tuple(field_new(2, 3).modulus) == (1, 1, 0, 1)
    assert tuple(field_new(3, 2).modulus) == (2, 1, 1)
    assert tuple(field_new(2, 8).modulus) == (1, 0, 1, 1, 1, 0, 0, 0, 1)


def test_non_prime_characteristic_rejected():
    with pytest.raises(ValueError):
        field_new(4, 1)


def test_reducible_modulus_rejected():
    assert not is_irreducible([1, 0, 1], 2)  # x^2+1 = (x+1)^2
    with pytest.raises(ValueError):
        field_new(2, 2, modulus=[1, 0, 1])


def test_gf_by_order():
    assert gf(9) == field_new(3, 2)
    with pytest.raises(ValueError):
        gf(6)


def test_division_by_zero():
    f = gf(5)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        field_arith(f, "inv", 0)


def test_field_arith_dispatch():
    f = gf(7)
    assert field_arith(f, "add", 5, 4) == 2
    assert field_arith(f, "mul", 3, 5) == 1
    assert field_arith(f, "pow", 3, 6) == 1
    with pytest.raises(ValueError):
        field_arith(f, "frobnicate", 1, 2)


@given(st.sampled_from([4, 8, 9, 16, 25]), st.data())
def test_distributivity(q, data):
    f = gf(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert int(f.mul(a, f.add(b, c))) == int(f.add(f.mul(a, b), f.mul(a, c)))


@given(st.sampled_from([2, 3, 4, 5, 8, 9]), st.data())
def test_matmul_matches_oracle(q, data):
    f = gf(q)
    ref = oracle_field(f)
    r, k, c = (data.draw(st.integers(1, 4)) for _ in range(3))
    a = np.array(data.draw(st.lists(st.integers(0, q - 1), min_size=r * k, max_size=r * k))).reshape(r, k)
    b = np.array(data.draw(st.lists(st.integers(0, q - 1), min_size=k * c, max_size=k * c))).reshape(k, c)
    want = [[0] * c for _ in range(r)]
    for i in range(r):
        for j in range(c):
            for t in range(k):
                want[i][j] = ref.add(want[i][j], ref.mul(int(a[i, t]), int(b[t, j])))
    assert f.matmul(a, b).tolist() == want
