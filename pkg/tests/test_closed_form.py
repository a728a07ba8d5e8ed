from math import comb

import pytest

from interiorpoly.closed_form import binom_identity_lhs, complete_recurrence_rhs, gen_binomial, interior_complete
from interiorpoly.errors import InvalidInput
from interiorpoly.polynomial import IntPolynomial, one_minus_x_pow


def test_gen_binomial():
    assert [gen_binomial(-1, j) for j in range(5)] == [1, -1, 1, -1, 1]
    assert gen_binomial(2, 3) == 0
    assert gen_binomial(0, 0) == 1
    assert gen_binomial(5, 2) == 10
    with pytest.raises(InvalidInput):
        gen_binomial(-2, 1)
    with pytest.raises(InvalidInput):
        gen_binomial(3, -1)


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (2, 3, [1, 2]),
        (1, 1, [1]),
        (1, 7, [1]),
        (3, 3, [1, 4, 1]),  # C(2, j)^2
        (3, 0, [1, -2, 1]),
        (0, 4, [1, -3, 3, -1]),
        (1, 0, [1]),
    ],
)
def test_interior_complete_examples(m, n, expected):
    assert interior_complete(m, n).coeffs == tuple(expected)


def test_interior_complete_rejects_empty():
    with pytest.raises(InvalidInput):
        interior_complete(0, 0)


def test_recurrence_examples():
    assert complete_recurrence_rhs(2, 3) == IntPolynomial([1, 2])
    # 2 * I(K11) - I(K10) = 2 - 1
    assert complete_recurrence_rhs(1, 2) == IntPolynomial([1])
    for m in range(1, 6):
        assert complete_recurrence_rhs(m, 1) == one_minus_x_pow(m - 1)


def test_recurrence_uses_lookup():
    calls = []

    def lookup(m, n):
        calls.append((m, n))
        return interior_complete(m, n)

    complete_recurrence_rhs(3, 4, lookup)
    assert calls == [(3, 3), (3, 2), (3, 1), (3, 0)]


@pytest.mark.parametrize("n, j, expected", [(1, 0, 1), (3, 1, 2), (4, 3, 1)])
def test_binom_identity_examples(n, j, expected):
    assert binom_identity_lhs(n, j) == expected == comb(n - 1, j)


def test_binom_identity_range_checks():
    with pytest.raises(InvalidInput):
        binom_identity_lhs(3, 3)
    with pytest.raises(InvalidInput):
        binom_identity_lhs(0, 0)


def test_symmetry():
    for m in range(0, 9):
        for n in range(0, 9):
            if m or n:
                assert interior_complete(m, n) == interior_complete(n, m)


def test_recurrence_consistency_for_m_le_n():
    for m in range(1, 9):
        for n in range(m, 9):
            assert complete_recurrence_rhs(m, n) == interior_complete(m, n)


def test_recurrence_needs_the_larger_class():
    # Deleting from the smaller side is not a valid expansion: for K21 the
    # sum is I(K20) = 1 - x, while I(K21) = 1.
    assert complete_recurrence_rhs(2, 1) == IntPolynomial([1, -1])
    assert interior_complete(2, 1) == IntPolynomial([1])
    for m in range(2, 9):
        for n in range(1, m):
            assert complete_recurrence_rhs(n, m) == interior_complete(m, n)
