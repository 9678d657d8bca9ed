"""Exact integer helpers. Everything here stays in int; no floats."""

import math

from .errors import InvalidParameter, NotInvertible


class MulCounter:
    """Tally of modular multiplications, for cost instrumentation."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def __repr__(self):
        return f"MulCounter({self.count})"


def mod_pow(base, exp, modulus, counter=None):
    """Return ``base**exp % modulus`` by right-to-left square-and-multiply."""
    if modulus < 2:
        raise InvalidParameter(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise InvalidParameter("negative exponent; use mod_inv first")
    result = 1
    base %= modulus
    mults = 0
    while exp:
        if exp & 1:
            result = result * base % modulus
            mults += 1
        exp >>= 1
        if exp:
            base = base * base % modulus
            mults += 1
    if counter is not None:
        counter.count += mults
    return result


def mod_inv(x, modulus):
    """Inverse of ``x`` modulo ``modulus``; raises NotInvertible for non-units."""
    if modulus < 2:
        raise InvalidParameter(f"modulus must be >= 2, got {modulus}")
    try:
        return pow(x, -1, modulus)
    except ValueError:
        raise NotInvertible(f"{x} is not invertible modulo {modulus}") from None


def bit_length(x):
    if x < 0:
        raise InvalidParameter("bit_length is defined for naturals only")
    return x.bit_length()


def binom(n, k):
    """Binomial coefficient; zero when k > n."""
    if n < 0 or k < 0:
        raise InvalidParameter("binom takes nonnegative arguments")
    return math.comb(n, k)
