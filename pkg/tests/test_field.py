import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sbecdbed.field import DEFAULT_POLYS, FieldError, clmul, field_new, is_irreducible, poly_mod

from conftest import clmul_mod


def test_gf4_basics(gf4):
    assert gf4.q == 4
    assert len(gf4.antilog) == 3
    assert gf4.log[0] == -1


def test_default_poly_b5_has_full_order():
    gf = field_new(5)
    x, seen = 1, set()
    for _ in range(31):
        seen.add(x)
        x = gf.mul(x, 2)
    assert x == 1 and len(seen) == 31


@pytest.mark.parametrize("b", range(2, 17))
def test_every_default_poly_builds(b):
    gf = field_new(b)
    assert gf.poly == DEFAULT_POLYS[b]
    assert is_irreducible(gf.poly)
    assert sorted(gf.nonzero()) == list(range(1, 1 << b))


def test_reducible_poly_rejected():
    with pytest.raises(FieldError, match="reducible"):
        field_new(2, 0b101)


def test_irreducible_non_primitive_rejected():
    # x^4+x^3+x^2+x+1 divides x^5-1, so x has order 5
    with pytest.raises(FieldError, match="not primitive"):
        field_new(4, 0b11111)


@pytest.mark.parametrize("b", [0, 1, 17])
def test_b_out_of_range(b):
    with pytest.raises(FieldError):
        field_new(b)


def test_add():
    gf = field_new(3)
    assert gf.add(5, 5) == 0
    assert gf.add(6, 0) == 6
    assert gf.add(3, 5) == 6


def test_mul_examples(gf8):
    assert gf8.poly == 0b1011
    assert gf8.mul(3, 5) == 4
    assert gf8.mul(7, 1) == 7
    assert gf8.mul(0, 6) == 0


def test_inv_pow(gf4):
    assert gf4.inv(1) == 1
    assert gf4.inv(2) == 3
    assert [y for y in range(1, 4) if gf4.mul(2, y) == 1] == [3]
    assert gf4.pow(2, 3) == 1
    with pytest.raises(FieldError):
        gf4.inv(0)
    with pytest.raises(FieldError):
        gf4.div(1, 0)


@pytest.mark.parametrize("b", range(2, 9))
def test_mul_matches_oracle_exhaustive(b):
    gf = field_new(b)
    q = gf.q
    x, y = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    got = gf.vmul(x, y)
    for a in range(q):
        for c in range(q):
            assert got[a, c] == clmul_mod(a, c, gf.poly, b)


@settings(max_examples=300, deadline=None)
@given(b=st.integers(9, 16), data=st.data())
def test_mul_matches_oracle_sampled(b, data):
    gf = field_new(b)
    x = data.draw(st.integers(0, gf.q - 1))
    y = data.draw(st.integers(0, gf.q - 1))
    assert gf.mul(x, y) == poly_mod(clmul(x, y), gf.poly) == clmul_mod(x, y, gf.poly, b)


@pytest.mark.parametrize("b", range(2, 9))
def test_log_antilog_roundtrip(b):
    gf = field_new(b)
    for i in range(gf.q - 1):
        assert gf.log[gf.antilog[i]] == i


@pytest.mark.parametrize("b", range(2, 5))
def test_distributive_exhaustive(b):
    gf = field_new(b)
    for x in range(gf.q):
        for y in range(gf.q):
            for z in range(gf.q):
                assert gf.mul(x, y ^ z) == gf.mul(x, y) ^ gf.mul(x, z)


def test_companion_b2(gf4):
    assert np.array_equal(gf4.companion_matrix(1), np.eye(2, dtype=np.uint8))
    assert gf4.companion_matrix(2).tolist() == [[0, 1], [1, 1]]
    assert not gf4.companion_matrix(0).any()


@pytest.mark.parametrize("b", range(2, 5))
def test_companion_homomorphism(b):
    gf = field_new(b)
    C = [gf.companion_matrix(x).astype(int) for x in range(gf.q)]
    for x in range(gf.q):
        for y in range(gf.q):
            assert np.array_equal(C[gf.mul(x, y)], (C[x] @ C[y]) % 2)
            assert np.array_equal(C[x ^ y], C[x] ^ C[y])


@settings(max_examples=100, deadline=None)
@given(b=st.integers(2, 10), data=st.data())
def test_companion_acts_on_bits(b, data):
    gf = field_new(b)
    x = data.draw(st.integers(0, gf.q - 1))
    y = data.draw(st.integers(0, gf.q - 1))
    prod = gf.companion_matrix(x).astype(int) @ gf.to_bits(y) % 2
    assert gf.from_bits(prod) == gf.mul(x, y)


@settings(max_examples=200, deadline=None)
@given(b=st.integers(2, 12), data=st.data())
def test_inverse_and_division(b, data):
    gf = field_new(b)
    x = data.draw(st.integers(1, gf.q - 1))
    y = data.draw(st.integers(0, gf.q - 1))
    assert gf.mul(x, gf.inv(x)) == 1
    assert gf.mul(gf.div(y, x), x) == y
