"""Factor bases: the first few primes, skipping one excluded prime."""

import math
from dataclasses import dataclass

from .errors import InvalidParameter


@dataclass(frozen=True)
class FactorBase:
    primes: tuple
    excluded_prime: int

    @property
    def n(self):
        return len(self.primes)

    @property
    def largest(self):
        return self.primes[-1]


def sieve(limit):
    """All primes <= limit, by the sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def _upper_estimate(count):
    # p_m < m (ln m + ln ln m) for m >= 6 (Rosser); pad for the skipped prime.
    m = count + 1
    if m < 6:
        return 15
    return int(m * (math.log(m) + math.log(math.log(m)))) + 10


def first_primes_coprime_to(excluded, n):
    """The ``n`` smallest primes other than ``excluded``, ascending.

    ``excluded`` is 2 for the base construction over Z/2^r and 3 for the
    Z/3^r variant.
    """
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    if excluded not in (2, 3):
        raise InvalidParameter(f"excluded prime must be 2 or 3, got {excluded}")
    limit = _upper_estimate(n)
    while True:
        found = [p for p in sieve(limit) if p != excluded]
        if len(found) >= n:
            return FactorBase(tuple(found[:n]), excluded)
        limit *= 2


def is_prime(m):
    """Deterministic trial division up to isqrt(m)."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    for d in range(3, math.isqrt(m) + 1, 2):
        if m % d == 0:
            return False
    return True
