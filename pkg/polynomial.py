"""Dense univariate polynomials with exact integer coefficients.

Coefficients are stored lowest power first with no trailing zeros, so the
zero polynomial is the empty tuple and equality is structural. Multiplication
is schoolbook convolution: degrees stay small (at most a few hundred) while the
coefficients get very large, so exactness is the only thing that matters.
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union

from exactnum import binomial, factorial


def _canonical(coeffs: Iterable[int]) -> Tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial sum(coeffs[k] * x^k)."""
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _canonical(self.coeffs))

    @classmethod
    def constant(cls, c: int) -> 'IntPolynomial':
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> 'IntPolynomial':
        """c * x^k."""
        if k < 0:
            raise ValueError(f"negative exponent: {k}")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> 'IntPolynomial':
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> 'IntPolynomial':
        return power(self, e)

    def __call__(self, x: int) -> int:
        """Evaluate exactly at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return render(self)


def _coerce(value: Union['IntPolynomial', int]):
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial.constant(value)
    return NotImplemented


ZERO = IntPolynomial()
ONE = IntPolynomial.constant(1)
X = IntPolynomial.monomial(1)


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    size = max(len(p.coeffs), len(q.coeffs))
    return IntPolynomial(p.coefficient(k) + q.coefficient(k) for k in range(size))


def multiply(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return ZERO
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return IntPolynomial(out)


def power(p: IntPolynomial, e: int) -> IntPolynomial:
    """p^e by binary exponentiation; p^0 == 1 (including 0^0)."""
    if e < 0:
        raise ValueError(f"negative polynomial exponent: {e}")
    result, base = ONE, p
    while e:
        if e & 1:
            result = multiply(result, base)
        e >>= 1
        if e:
            base = multiply(base, base)
    return result


def shift(p: IntPolynomial, k: int) -> IntPolynomial:
    """p * x^k."""
    if k < 0:
        raise ValueError(f"negative shift: {k}")
    if p.is_zero():
        return ZERO
    return IntPolynomial((0,) * k + p.coeffs)


def phi(p: IntPolynomial) -> int:
    """The linear functional x^k -> k!."""
    return sum(c * factorial(k) for k, c in enumerate(p.coeffs) if c)


def substitute_shift(p: IntPolynomial, a: int) -> IntPolynomial:
    """q with q(t) = p(t + a) (Taylor shift with exact binomials)."""
    n = len(p.coeffs)
    out = [0] * n
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        # c * (t + a)^i = c * sum_k C(i, k) a^(i-k) t^k
        for k in range(i + 1):
            out[k] += c * binomial(i, k) * a ** (i - k)
    return IntPolynomial(out)


def substitute_shifted(p: IntPolynomial) -> IntPolynomial:
    """q with q(t) = p(t - 1); turns factorial-weighted rook sums into hit counts."""
    return substitute_shift(p, -1)


def from_rook_numbers(rook: List[int], n: int) -> IntPolynomial:
    """sum_k (-1)^k r_k x^(n-k)."""
    out = [0] * (n + 1)
    for k, r in enumerate(rook):
        if r and k <= n:
            out[n - k] += -r if k % 2 else r
    return IntPolynomial(out)


def signed_rook_numbers(p: IntPolynomial, n: int) -> List[int]:
    """Read R_j back off a rook-style polynomial of nominal degree n.

    The coefficient of x^(n-j) is (-1)^j R_j.
    """
    return [(-1) ** j * p.coefficient(n - j) for j in range(n + 1)]


def hit_polynomial(p: IntPolynomial, n: int) -> IntPolynomial:
    """Hit-count generating polynomial of a rook-style polynomial of nominal degree n.

    Builds sum_j R_j (n-j)! t^j and substitutes t -> t - 1; coefficient k of
    the result counts permutations with exactly k hits.
    """
    weighted = [r * factorial(n - j) for j, r in enumerate(signed_rook_numbers(p, n))]
    return substitute_shifted(IntPolynomial(weighted))


def render(p: IntPolynomial, var: str = 'x') -> str:
    """Highest power first: 'x^4 - 12x^3 + 36x^2 - 24x'."""
    if p.is_zero():
        return '0'
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{'-' if c < 0 else '+'} {body}")
    return ' '.join(parts)
