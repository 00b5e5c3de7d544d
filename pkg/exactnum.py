"""Exact integer and rational helpers shared by every solver.

Integers are plain Python ints and rationals are fractions.Fraction, which is
always stored reduced with a positive denominator. Nothing in here touches
floating point.
"""

import math
from fractions import Fraction
from typing import Dict, Tuple

# Factor map: prime -> exponent, keys inserted in increasing order.
FactorMap = Dict[int, int]

# The first 64 primes double as Miller-Rabin witnesses and as the
# small-prime screen run before any modular exponentiation.
SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
    59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
    227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311,
)

# The first 12 primes are a proven deterministic witness set below this bound.
DETERMINISTIC_BOUND = 318_665_857_834_031_151_167_461


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial of negative number: {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), and 0 when k is out of range."""
    if n < 0:
        raise ValueError(f"binomial with negative n: {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def reduce(num: int, den: int) -> Fraction:
    """Reduced fraction num/den with a positive denominator."""
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(num, den)


def _miller_rabin_round(n: int, d: int, s: int, a: int) -> bool:
    """One strong-probable-prime round; n - 1 = d * 2^s with d odd."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = pow(x, 2, n)
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with fixed witnesses.

    Exact below DETERMINISTIC_BOUND (which covers every 64-bit value); above it
    the 64 fixed bases leave an error bound under 4^-64 = 2^-128. Composites are
    never reported prime for n < 2, even numbers or small-prime multiples.
    """
    if n < 0:
        raise ValueError(f"primality of negative number: {n}")
    if n < 2:
        return False
    for p in SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    bases = SMALL_PRIMES[:12] if n < DETERMINISTIC_BOUND else SMALL_PRIMES
    return all(_miller_rabin_round(n, d, s, a) for a in bases)


def trial_division(n: int, bound: int) -> Tuple[FactorMap, int]:
    """Divide out every prime <= bound.

    Returns (factors, cofactor) with n == prod(p**e) * cofactor.
    """
    if n < 1:
        raise ValueError(f"trial division needs n >= 1, got {n}")
    if bound < 2:
        raise ValueError(f"trial division bound must be >= 2, got {bound}")

    factors: FactorMap = {}
    cofactor = n
    p = 2
    while p <= bound and cofactor > 1:
        if cofactor % p == 0:
            e = 0
            while cofactor % p == 0:
                cofactor //= p
                e += 1
            factors[p] = e
        # Composite p never divides here: its prime factors are already gone.
        p += 1 if p == 2 else 2
    return factors, cofactor


def round_half_even(q: Fraction, digits: int) -> int:
    """round(q * 10^digits) with ties to even, exactly."""
    return round(q * 10 ** digits)


def decimal_string(q: Fraction, digits: int) -> str:
    """Decimal expansion of q rounded half-even to `digits` fractional digits."""
    if digits < 0:
        raise ValueError(f"digits must be >= 0, got {digits}")
    scaled = round_half_even(Fraction(q), digits)
    sign = '-' if scaled < 0 else ''
    whole, frac = divmod(abs(scaled), 10 ** digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def percent_string(q: Fraction, digits: int) -> str:
    """q as a percentage, e.g. 0.954523717669 -> '95.4523717669%' at 10 digits."""
    return decimal_string(Fraction(q) * 100, digits) + '%'


def format_integer(n: int, group: bool = False) -> str:
    """Full decimal rendering, never scientific; optional comma grouping."""
    return f"{n:,}" if group else str(n)


def format_rational(q: Fraction, group: bool = False) -> str:
    """'num/den', or just 'num' for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return format_integer(q.numerator, group)
    return f"{format_integer(q.numerator, group)}/{format_integer(q.denominator, group)}"


def parse_rational(text: str) -> Fraction:
    """Parse 'num/den' or 'num' (commas allowed as digit separators)."""
    cleaned = text.strip().replace(',', '')
    num_text, sep, den_text = cleaned.partition('/')
    try:
        num = int(num_text)
        den = int(den_text) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational number: {text!r}") from None
    return reduce(num, den)
