import pytest
from hypothesis import given, settings, strategies as st

from bkseq import gfpk
from bkseq.errors import InstanceTooLarge, InvalidInput, InvalidParameter

from oracles import reducible_monics


def brute_order(e, params):
    y, n = e, 1
    while y != params.one():
        y = gfpk.mul(y, e, params)
        n += 1
    return n


def test_find_primitive_examples():
    p = gfpk.find_primitive_poly(3, 2)
    assert p.f == (2, 1)  # x^2 + x + 2
    assert gfpk.find_primitive_poly(2, 2).f == (1, 1)
    with pytest.raises(InvalidParameter):
        gfpk.find_primitive_poly(4, 2)


def test_enumeration_order_skips_nonprimitive_irreducible():
    # m = 1 gives x^2 + 1: irreducible over GF(3) but its root has order 4.
    assert gfpk.is_irreducible((1, 0), 3)
    assert gfpk.element_order((0, 1), gfpk.FieldParams(3, 2, (1, 0))) == 4


def test_limits_and_degree():
    with pytest.raises(InstanceTooLarge):
        gfpk.find_primitive_poly(3, 20)
    with pytest.raises(InvalidParameter):
        gfpk.find_primitive_poly(5, 1)


def test_mul_examples():
    p = gfpk.FieldParams(3, 2, (2, 1))
    assert gfpk.mul(p.x(), p.x(), p) == (1, 2)  # 2x + 1
    for e in [(0, 0), (1, 2), (2, 1)]:
        assert gfpk.mul(p.one(), e, p) == e
        assert gfpk.mul(p.zero(), e, p) == p.zero()


def test_element_order_examples():
    assert gfpk.element_order((1, 0), gfpk.FieldParams(3, 2, (2, 1))) == 1
    assert gfpk.element_order((0, 1), gfpk.FieldParams(3, 2, (1, 0))) == 4
    assert gfpk.element_order((0, 1), gfpk.FieldParams(3, 2, (2, 1))) == 8
    with pytest.raises(InvalidInput):
        gfpk.element_order((0, 0), gfpk.FieldParams(3, 2, (2, 1)))


FIELDS = [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (11, 3), (2, 10)]


@pytest.mark.parametrize("q,k", FIELDS)
def test_found_polynomial_is_primitive(q, k):
    p = gfpk.find_primitive_poly(q, k)
    order = q**k - 1
    assert gfpk.power(p.x(), order, p) == p.one()
    for ell in gfpk.prime_factors(order):
        assert gfpk.power(p.x(), order // ell, p) != p.one()
    if q**k <= 200:
        assert brute_order(p.x(), p) == order


@pytest.mark.parametrize("q,k", [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (3, 4), (3, 5), (3, 6), (5, 2), (5, 3), (7, 2)])
def test_irreducibility_matches_product_oracle(q, k):
    reducible = reducible_monics(q, k)
    for m in range(q**k):
        coeffs = gfpk._coeffs_of(m, q, k)
        assert gfpk.is_irreducible(coeffs, q) == (coeffs not in reducible)


@st.composite
def field_and_elements(draw, count=3):
    q, k = draw(st.sampled_from(FIELDS))
    p = gfpk.find_primitive_poly(q, k)
    elt = st.tuples(*[st.integers(0, q - 1)] * k)
    return (p, *[draw(elt) for _ in range(count)])


@settings(max_examples=200)
@given(field_and_elements())
def test_field_axioms(args):
    p, a, b, c = args
    mul = gfpk.mul
    assert mul(a, b, p) == mul(b, a, p)
    assert mul(mul(a, b, p), c, p) == mul(a, mul(b, c, p), p)
    b_plus_c = tuple((u + v) % p.q for u, v in zip(b, c))
    lhs = mul(a, b_plus_c, p)
    rhs = tuple((u + v) % p.q for u, v in zip(mul(a, b, p), mul(a, c, p)))
    assert lhs == rhs
    if any(a):
        assert (p.size - 1) % gfpk.element_order(a, p) == 0
