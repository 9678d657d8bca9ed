"""Discrete logarithms in the unit groups of Z/2^r and Z/3^r.

Both groups have smooth order, so the exponent is recovered one digit at a
time: raise the current residue to a cofactor power that lands it in the
subgroup of prime order, read off the digit by comparison, divide out the
matching generator power, and move to the next digit.
"""

from dataclasses import dataclass

from .arith import mod_inv, mod_pow
from .errors import InconsistencyError, InvalidInput, InvalidParameter


@dataclass(frozen=True)
class TwoAdicGroup:
    """(Z/2^r)^* viewed as <-1> x <5>, with 5 of order 2^(r-2)."""

    r: int

    def __post_init__(self):
        if self.r < 3:
            raise InvalidParameter(f"r must be >= 3, got {self.r}")

    generator = 5

    @property
    def modulus(self):
        return 1 << self.r

    @property
    def subgroup_order(self):
        return 1 << (self.r - 2)

    @property
    def order_two_element(self):
        """5^(2^(r-3)), which is always 2^(r-1) + 1."""
        return (1 << (self.r - 1)) + 1


@dataclass(frozen=True)
class ThreeAdicGroup:
    """(Z/3^r)^*, cyclic of order 2*3^(r-1) and generated by 2."""

    r: int

    def __post_init__(self):
        if self.r < 1:
            raise InvalidParameter(f"r must be >= 1, got {self.r}")

    generator = 2

    @property
    def modulus(self):
        return 3**self.r

    @property
    def group_order(self):
        return 2 * 3 ** (self.r - 1)


@dataclass(frozen=True)
class DlogResult:
    j: int
    h: int


def _square_times(y, times, modulus, counter):
    for _ in range(times):
        y = y * y % modulus
    if counter is not None:
        counter.count += times
    return y


def dlog_2adic(x, group, counter=None):
    """Return (j, h) with x == (-1)^j * 5^h (mod 2^r) and 0 <= h < 2^(r-2).

    The sign is settled first from x mod 4, since <5> is exactly the
    residues that are 1 mod 4. The binary digits of h are then peeled from
    the least significant end. Pass a MulCounter to tally multiplications.
    """
    r = group.r
    modulus = group.modulus
    if x % 2 == 0:
        raise InvalidInput(f"{x} is even, not a unit modulo 2^{r}")
    if not 1 <= x < modulus:
        raise InvalidInput(f"{x} is outside [1, 2^{r})")

    j = 0 if x % 4 == 1 else 1
    if j:
        x = modulus - x

    digits = r - 2
    minus_one = group.order_two_element
    # inv_steps[i] = 5^(-2^i)
    step = mod_inv(group.generator, modulus)
    inv_steps = [step]
    for _ in range(digits - 1):
        step = step * step % modulus
        inv_steps.append(step)
    if counter is not None:
        counter.count += digits - 1

    h = 0
    for i in range(digits):
        y = _square_times(x, digits - 1 - i, modulus, counter)
        if y == 1:
            continue
        if y != minus_one:
            raise InconsistencyError(
                f"digit {i}: {y} is neither 1 nor {minus_one} modulo 2^{r}"
            )
        h |= 1 << i
        x = x * inv_steps[i] % modulus
        if counter is not None:
            counter.count += 1
    if x != 1:
        raise InconsistencyError(f"residue {x} left after peeling all digits")
    return DlogResult(j, h)


def dlog_3adic(x, group, counter=None):
    """Return e in [0, 2*3^(r-1)) with 2^e == x (mod 3^r).

    The parity of e comes from x^(3^(r-1)), which is +1 or -1. The residue
    of e modulo 3^(r-1) comes from ternary peeling of x^2 against base 4,
    comparing against the three cube roots of unity. The two parts are
    glued by CRT; 3^(r-1) is odd, so that is a single parity fix-up.
    """
    r = group.r
    modulus = group.modulus
    if x % 3 == 0:
        raise InvalidInput(f"{x} is divisible by 3, not a unit modulo 3^{r}")
    if not 1 <= x < modulus:
        raise InvalidInput(f"{x} is outside [1, 3^{r})")

    three_part = 3 ** (r - 1)
    sign = mod_pow(x, three_part, modulus, counter)
    if sign == 1:
        parity = 0
    elif sign == modulus - 1:
        parity = 1
    else:
        raise InconsistencyError(f"{x}^(3^{r - 1}) = {sign} is not +-1 mod 3^{r}")

    digits = r - 1
    residue = 0
    if digits:
        base = 4  # generator of the 3-part, order 3^(r-1)
        cube_root = mod_pow(base, 3 ** (digits - 1), modulus, counter)
        roots = {1: 0, cube_root: 1, cube_root * cube_root % modulus: 2}
        # inv_steps[i] = 4^(-3^i)
        step = mod_inv(base, modulus)
        inv_steps = [step]
        for _ in range(digits - 1):
            step = mod_pow(step, 3, modulus, counter)
            inv_steps.append(step)

        y_cur = x * x % modulus
        place = 1
        for i in range(digits):
            y = mod_pow(y_cur, 3 ** (digits - 1 - i), modulus, counter)
            digit = roots.get(y)
            if digit is None:
                raise InconsistencyError(f"digit {i}: {y} is not a cube root of unity")
            if digit:
                y_cur = y_cur * mod_pow(inv_steps[i], digit, modulus, counter) % modulus
                residue += digit * place
            place *= 3
        if y_cur != 1:
            raise InconsistencyError(f"residue {y_cur} left after peeling all digits")

    e = residue if residue % 2 == parity else residue + three_part
    return e
