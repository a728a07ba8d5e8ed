"""Dense univariate polynomials with exact integer coefficients.

Coefficients are stored lowest degree first with trailing zeros stripped, so
the zero polynomial has an empty coefficient tuple. Python ints are
arbitrary precision, which is all the exactness this module needs.
"""

from __future__ import annotations

import operator
from math import comb
from typing import Iterable, Sequence


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    # operator.index rejects floats and Fractions: coefficients stay exact.
    out = [operator.index(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class IntPolynomial:
    """Immutable polynomial in ``x`` over the integers."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self._coeffs = _strip(coeffs)

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return poly_sub(self, _coerce(other))

    def __rsub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return poly_sub(_coerce(other), self)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self._coeffs)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __call__(self, value):
        # Horner; works for ints, Fractions, floats alike.
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        return format_polynomial(self._coeffs)


def _coerce(p: IntPolynomial | int) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    n = max(len(p), len(q))
    return IntPolynomial(p[k] + q[k] for k in range(n))


def poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    n = max(len(p), len(q))
    return IntPolynomial(p[k] - q[k] for k in range(n))


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return IntPolynomial()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return IntPolynomial(out)


def one_minus_x_pow(k: int) -> IntPolynomial:
    """Expansion of ``(1 - x)**k``."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    return IntPolynomial((-1) ** j * comb(k, j) for j in range(k + 1))


def series_coeffs(numerator: IntPolynomial | Sequence[int], denom_power: int, upto: int) -> list[int]:
    """First ``upto + 1`` coefficients of ``numerator / (1 - x)**denom_power``.

    The power series of ``1 / (1 - x)**k`` has coefficients ``C(s + k - 1, k - 1)``;
    the result is the convolution of that sequence with the numerator.
    """
    if denom_power < 0 or upto < 0:
        raise ValueError("denom_power and upto must be non-negative")
    num = numerator.coeffs if isinstance(numerator, IntPolynomial) else tuple(numerator)
    k = denom_power
    if k == 0:
        kernel = [1] + [0] * upto
    else:
        kernel = [comb(s + k - 1, k - 1) for s in range(upto + 1)]
    out = []
    for s in range(upto + 1):
        out.append(sum(num[i] * kernel[s - i] for i in range(min(s, len(num) - 1) + 1)))
    return out


def format_polynomial(coeffs: Sequence[int], var: str = "x") -> str:
    """Render ascending powers, e.g. ``1 + 2x + x^2``; zero renders as ``0``."""
    terms: list[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"
