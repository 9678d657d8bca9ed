import pytest
from hypothesis import given, strategies as st

from bkseq.arith import MulCounter, binom, bit_length, mod_inv, mod_pow
from bkseq.errors import InvalidParameter, NotInvertible


def slow_pow(b, e, m):
    y = 1
    for _ in range(e):
        y = y * b % m
    return y


@pytest.mark.parametrize("b,e,m,expected", [(5, 0, 64, 1), (5, 3, 64, 61), (2, 9, 27, 26)])
def test_mod_pow_examples(b, e, m, expected):
    assert slow_pow(b, e, m) == expected
    assert mod_pow(b, e, m) == expected


def test_mod_pow_rejects_small_modulus():
    with pytest.raises(InvalidParameter):
        mod_pow(3, 2, 1)


@given(st.integers(0, 10**6), st.integers(0, 300), st.integers(0, 300), st.integers(2, 10**9))
def test_mod_pow_homomorphism(g, a, b, m):
    assert mod_pow(g, a + b, m) == mod_pow(g, a, m) * mod_pow(g, b, m) % m


@given(st.integers(0, 10**6), st.integers(0, 200), st.integers(2, 10**4))
def test_mod_pow_matches_repeated_multiplication(g, e, m):
    assert mod_pow(g, e, m) == slow_pow(g, e, m)


def test_mod_pow_counts_logarithmically_many_multiplications():
    c = MulCounter()
    mod_pow(3, (1 << 20) - 1, 1 << 40, c)
    assert c.count <= 2 * 20


@pytest.mark.parametrize("x,m,expected", [(1, 64, 1), (5, 64, 13), (3, 8, 3)])
def test_mod_inv_examples(x, m, expected):
    assert mod_inv(x, m) == expected


def test_mod_inv_exhaustive_odd_units():
    for r in range(1, 13):
        m = 1 << r
        for x in range(1, m, 2):
            assert x * mod_inv(x, m) % m == 1


def test_mod_inv_non_unit():
    with pytest.raises(NotInvertible):
        mod_inv(4, 64)


@pytest.mark.parametrize("x,expected", [(0, 0), (1, 1), (49, 6), (25, 5)])
def test_bit_length_examples(x, expected):
    assert bit_length(x) == expected


def test_bit_length_matches_halving():
    for x in range(0, 10**6 + 1, 7):
        n, y = 0, x
        while y:
            y //= 2
            n += 1
        assert bit_length(x) == n


@pytest.mark.parametrize("n,k,expected", [(3, 2, 3), (5, 0, 1), (23, 4, 8855), (2, 5, 0)])
def test_binom_examples(n, k, expected):
    assert binom(n, k) == expected


def test_binom_pascal():
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)
