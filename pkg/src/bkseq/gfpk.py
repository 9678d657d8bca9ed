"""Arithmetic in GF(q^k) for prime q.

Elements are tuples of k coefficients (c_0, ..., c_{k-1}) in Z/q, lowest
degree first. The field is GF(q)[x]/(f) for a monic primitive f, stored
without its leading 1.
"""

from dataclasses import dataclass
from itertools import product

from .errors import InstanceTooLarge, InvalidInput, InvalidParameter
from .primes import is_prime

DEFAULT_FIELD_LIMIT = 1 << 24


@dataclass(frozen=True)
class FieldParams:
    q: int
    k: int
    f: tuple  # (c_0, ..., c_{k-1}); f = x^k + c_{k-1} x^{k-1} + ... + c_0

    @property
    def size(self):
        return self.q**self.k

    def zero(self):
        return (0,) * self.k

    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def x(self):
        return (0, 1) + (0,) * (self.k - 2)

    def constant(self, a):
        return (a % self.q,) + (0,) * (self.k - 1)


def _check_q_k(q, k, limit):
    if not is_prime(q):
        raise InvalidParameter(f"q must be prime, got {q}")
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    if q**k > limit:
        raise InstanceTooLarge(f"q^k = {q**k} exceeds field limit {limit}", q**k)


def mul(a, b, params):
    q, k, f = params.q, params.k, params.f
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    # x^k = -(c_{k-1} x^{k-1} + ... + c_0)
    for d in range(2 * k - 2, k - 1, -1):
        top = prod[d] % q
        if top:
            base = d - k
            for i, c in enumerate(f):
                prod[base + i] -= top * c
    return tuple(c % q for c in prod[:k])


def power(e, n, params):
    result = params.one()
    while n:
        if n & 1:
            result = mul(result, e, params)
        n >>= 1
        if n:
            e = mul(e, e, params)
    return result


def prime_factors(m):
    """Distinct prime factors of m by trial division."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


def element_order(e, params):
    """Multiplicative order of a nonzero element."""
    if not any(e):
        raise InvalidInput("zero has no multiplicative order")
    order = params.size - 1
    for ell in prime_factors(order):
        while order % ell == 0 and power(e, order // ell, params) == params.one():
            order //= ell
    return order


def _poly_mod(num, den, q):
    """Remainder of num by monic den; both lowest degree first, den[-1] == 1."""
    rem = list(num)
    dd = len(den) - 1
    for top in range(len(rem) - 1, dd - 1, -1):
        c = rem[top] % q
        if c:
            for i, dc in enumerate(den):
                rem[top - dd + i] = (rem[top - dd + i] - c * dc) % q
    return [c % q for c in rem[:dd]]


def is_irreducible(coeffs, q):
    """Irreducibility of the monic x^k + ... + coeffs[0] by trial division.

    Divides by every monic polynomial of degree 1..k//2.
    """
    k = len(coeffs)
    f = list(coeffs) + [1]
    for d in range(1, k // 2 + 1):
        for low in product(range(q), repeat=d):
            if not any(_poly_mod(f, list(low) + [1], q)):
                return False
    return True


def _coeffs_of(m, q, k):
    out = []
    for _ in range(k):
        m, c = divmod(m, q)
        out.append(c)
    return tuple(out)


def find_primitive_poly(q, k, limit=DEFAULT_FIELD_LIMIT):
    """First monic primitive polynomial of degree k over GF(q).

    Candidates are enumerated as m = 0, 1, ..., q^k - 1 with the base-q
    digits of m (least significant first) as (c_0, ..., c_{k-1}).
    """
    _check_q_k(q, k, limit)
    for m in range(q**k):
        coeffs = _coeffs_of(m, q, k)
        if coeffs[0] == 0 or not is_irreducible(coeffs, q):
            continue
        params = FieldParams(q, k, coeffs)
        if element_order(params.x(), params) == params.size - 1:
            return params
    raise InvalidParameter(f"no primitive polynomial of degree {k} over GF({q})")
