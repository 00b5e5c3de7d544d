"""Closed forms for the two complete condition families.

full_board_poly(n) is the rook polynomial of the whole n x n board (a colour
class in the generalized-derangement problem); full_adjacency_poly(n) is the
generalized rook polynomial of every "i immediately followed by j" condition
on [n] (a colour class in the no-equal-neighbours problem). Both are built term
by term from exact binomials and factorials.
"""

from exactnum import binomial, factorial
from polynomial import IntPolynomial


def _check(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")


def full_board_poly(n: int) -> IntPolynomial:
    """l_n(x) = sum_k (-1)^k C(n,k)^2 k! x^(n-k)."""
    _check(n)
    coeffs = [0] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = (-1) ** k * binomial(n, k) ** 2 * factorial(k)
    return IntPolynomial(coeffs)


def full_adjacency_poly(n: int) -> IntPolynomial:
    """l*_n(x) = sum_k (-1)^k C(n,k) C(n-1,k) k! x^(n-k).

    For n >= 1 the k = n term vanishes because C(n-1, n) = 0. For n = 0 the
    polynomial is the constant 1.
    """
    _check(n)
    if n == 0:
        return IntPolynomial.constant(1)
    coeffs = [0] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = (-1) ** k * binomial(n, k) * binomial(n - 1, k) * factorial(k)
    return IntPolynomial(coeffs)
