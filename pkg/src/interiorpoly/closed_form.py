"""Complete bipartite graphs: closed form, recurrence and the binomial identity behind it."""

from __future__ import annotations

from math import comb
from typing import Callable

from .errors import InvalidInput
from .polynomial import IntPolynomial


def gen_binomial(a: int, j: int) -> int:
    """``C(a, j)`` for ``a >= -1`` and ``j >= 0``, with ``C(-1, j) = (-1)^j``.

    Other negative upper arguments are rejected rather than guessed.
    """
    if j < 0:
        raise InvalidInput(f"lower argument must be non-negative, got {j}")
    if a < -1:
        raise InvalidInput(f"upper argument must be at least -1, got {a}")
    if a == -1:
        return (-1) ** j
    return comb(a, j)


def interior_complete(m: int, n: int) -> IntPolynomial:
    """``sum_j C(m-1, j) C(n-1, j) x^j`` for ``K_{m,n}``.

    When one side is empty the generalised binomial gives ``(1 - x)^(c-1)``
    for the ``c`` isolated vertices.
    """
    if m < 0 or n < 0:
        raise InvalidInput("side sizes must be non-negative")
    if m == 0 and n == 0:
        raise InvalidInput("K_{0,0} has no vertices")
    top = max(m, n) - 1 if min(m, n) == 0 else min(m, n) - 1
    return IntPolynomial(gen_binomial(m - 1, j) * gen_binomial(n - 1, j) for j in range(top + 1))


def complete_recurrence_rhs(
    m: int, n: int, lookup: Callable[[int, int], IntPolynomial] = interior_complete
) -> IntPolynomial:
    """``sum_{k=1..n} (-1)^(k-1) C(n, k) I_{K_{m,n-k}}`` with values from ``lookup``."""
    if n < 1 or m < 1:
        raise InvalidInput("recurrence needs m >= 1 and n >= 1")
    acc = IntPolynomial()
    for k in range(1, n + 1):
        term = lookup(m, n - k) * comb(n, k)
        acc = acc + term if k % 2 else acc - term
    return acc


def binom_identity_lhs(n: int, j: int) -> int:
    """``sum_{k=1..n} (-1)^(k-1) C(n, k) C(n-k-1, j)``; the ``k = n`` term uses ``C(-1, j)``."""
    if n < 1:
        raise InvalidInput("n must be at least 1")
    if not 0 <= j <= n - 1:
        raise InvalidInput(f"j must lie in [0, {n - 1}], got {j}")
    return sum((-1) ** (k - 1) * comb(n, k) * gen_binomial(n - k - 1, j) for k in range(1, n + 1))
