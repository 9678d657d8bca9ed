"""The B_k sequence families.

``pow2``         logs base 5 of the first n odd primes in (Z/2^r)^*, modulo 2^(r-2)
``pow3``         logs base 2 of the first n primes other than 3 in (Z/3^r)^*
``bose_chowla``  exponents d with x^d = x + a in GF(q^k), modulo q^k - 1
``geometric``    k, k^2, ..., k^n, the exponentially sparse baseline
"""

from dataclasses import dataclass, field

from . import gfpk
from .arith import bit_length
from .dlog import ThreeAdicGroup, TwoAdicGroup, dlog_2adic, dlog_3adic
from .errors import InconsistencyError, InvalidParameter
from .primes import first_primes_coprime_to

LABELS = ("pow2", "pow3", "bose_chowla", "geometric")


@dataclass(frozen=True)
class BkSequence:
    elements: tuple
    modulus: int
    k: int
    label: str
    params: dict = field(default_factory=dict, compare=True, hash=False)

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidParameter(f"modulus must be >= 2, got {self.modulus}")
        if self.k < 1:
            raise InvalidParameter(f"k must be >= 1, got {self.k}")

    @property
    def size(self):
        return len(self.elements)


def _check_nk(n, k):
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    if k < 1:
        raise InvalidParameter(f"k must be >= 1, got {k}")


def compute_r(n, k):
    """r = 1 + ceil(k * log2(p_n)), computed exactly.

    p_n^k is odd and > 1, so it is never a power of two and
    ceil(log2(p_n^k)) equals its bit length.
    """
    _check_nk(n, k)
    p_n = first_primes_coprime_to(2, n).largest
    return 1 + bit_length(p_n**k)


def construct_pow2(n, k):
    _check_nk(n, k)
    base = first_primes_coprime_to(2, n)
    r = 1 + bit_length(base.largest**k)
    group = TwoAdicGroup(r)
    elements = tuple(dlog_2adic(p, group).h for p in base.primes)
    return BkSequence(elements, group.subgroup_order, k, "pow2", {"n": n, "k": k, "r": r})


def construct_pow3(n, k):
    """Products of k factor-base primes are distinct and below 3^r, so
    their logs have distinct sums modulo the full group order."""
    _check_nk(n, k)
    base = first_primes_coprime_to(3, n)
    bound = base.largest**k
    r, power = 1, 3
    while power <= bound:
        r += 1
        power *= 3
    group = ThreeAdicGroup(r)
    elements = tuple(dlog_3adic(p, group) for p in base.primes)
    return BkSequence(elements, group.group_order, k, "pow3", {"n": n, "k": k, "r": r})


def construct_bose_chowla(q, k, limit=gfpk.DEFAULT_FIELD_LIMIT):
    """The q exponents d in [1, q^k - 1) with x^d - x a constant, sorted."""
    params = gfpk.find_primitive_poly(q, k, limit)
    x = params.x()
    cur = x
    found = []
    for t in range(1, params.size - 1):
        if cur[1] == 1 and not any(cur[2:]):
            found.append(t)
        cur = gfpk.mul(cur, x, params)
    if len(found) != q:
        raise InconsistencyError(f"expected {q} exponents, found {len(found)}")
    return BkSequence(
        tuple(found), params.size - 1, k, "bose_chowla", {"q": q, "k": k, "f": params.f}
    )


def construct_geometric(n, k):
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    if k < 2:
        raise InvalidParameter(f"k must be >= 2 (k = 1 repeats elements), got {k}")
    elements = tuple(k**i for i in range(1, n + 1))
    return BkSequence(elements, k ** (n + 1), k, "geometric", {"n": n, "k": k})


def construct(label, n=None, k=None, q=None):
    """Dispatch by construction tag; ``q`` is used only for bose_chowla."""
    if label == "pow2":
        return construct_pow2(n, k)
    if label == "pow3":
        return construct_pow3(n, k)
    if label == "bose_chowla":
        return construct_bose_chowla(q, k)
    if label == "geometric":
        return construct_geometric(n, k)
    raise InvalidParameter(f"unknown construction {label!r}; choose from {', '.join(LABELS)}")
