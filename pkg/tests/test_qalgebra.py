import itertools
from collections import Counter
from functools import lru_cache
from math import comb

import pytest
from hypothesis import given, strategies as st

from stablemaps.errors import DivisionByZero, DivisionNotExact
from stablemaps.qalgebra import (
    ONE,
    Q,
    ZERO,
    QPoly,
    exact_div,
    generalized_binomial,
    lambda_k,
    q_binomial,
    q_factorial,
    q_int,
    sigma_k,
)
from strategies import nonneg_qpolys, nonzero_qpolys, qpolys


def naive_mul(a, b):
    out = Counter()
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    top = max(out, default=-1)
    return QPoly([out[i] for i in range(top + 1)])


@lru_cache(maxsize=None)
def pascal_binomial(n, k):
    # [n, k] = [n-1, k-1] + q^k [n-1, k]
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return pascal_binomial(n - 1, k - 1) + pascal_binomial(n - 1, k).shift(k)


def exponents(p):
    """Expand a nonnegative polynomial into its multiset of monomials."""
    return [e for e, c in enumerate(p.coeffs) for _ in range(c)]


def brute_lambda(p, k):
    out = Counter(sum(c) for c in itertools.combinations(exponents(p), k))
    return QPoly([out[i] for i in range(max(out, default=-1) + 1)])


def brute_sigma(p, k):
    out = Counter(sum(c) for c in itertools.combinations_with_replacement(exponents(p), k))
    return QPoly([out[i] for i in range(max(out, default=-1) + 1)])


# -- construction and canonical form --------------------------------

def test_trailing_zeros_trimmed():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0, 0]) == ZERO
    assert ZERO.coeffs == ()
    assert ZERO.degree == -1
    assert QPoly([3, 0, 5]).degree == 2


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        QPoly([1.0])
    with pytest.raises(TypeError):
        QPoly([True])


def test_immutable():
    p = QPoly([1, 1])
    with pytest.raises(AttributeError):
        p._c = (2,)


def test_str_and_eval():
    assert str(QPoly([1, 2, 1])) == "1 + 2q + q^2"
    assert str(QPoly([0, -1, 0, 1])) == "-q + q^3"
    assert str(ZERO) == "0"
    assert QPoly([1, 2, 1])(1) == 4
    assert QPoly([1, 2, 1])(2) == 9


def test_reversed():
    assert QPoly([1, 2]).reversed(3) == QPoly([0, 0, 2, 1])
    with pytest.raises(ValueError):
        QPoly([1, 2, 3]).reversed(1)


def test_int_coercion():
    assert 1 + Q == QPoly([1, 1])
    assert Q - 2 == QPoly([-2, 1])
    assert 2 - Q == QPoly([2, -1])
    assert 3 * Q == QPoly([0, 3])
    assert Q == QPoly([0, 1])
    assert QPoly([5]) == 5


# -- q-analogs ----------------------------------------------------------

def test_q_int_examples():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(4) == QPoly([1, 1, 1, 1])


def test_q_factorial_examples():
    assert q_factorial(0) == ONE
    assert q_factorial(2) == QPoly([1, 1])
    assert q_factorial(3) == QPoly([1, 2, 2, 1])


def test_q_binomial_examples():
    assert q_binomial(2, 1) == QPoly([1, 1])
    assert q_binomial(4, 2) == QPoly([1, 1, 2, 1, 1])
    assert q_binomial(3, 2) == QPoly([1, 1, 1])
    assert q_binomial(3, 4) == ZERO
    assert q_binomial(3, -1) == ZERO


@pytest.mark.parametrize("n", range(31))
def test_q_binomial_rows(n):
    for k in range(n + 1):
        b = q_binomial(n, k)
        assert b == pascal_binomial(n, k)
        assert b.is_nonnegative()
        assert b.is_palindromic()
        assert b == q_binomial(n, n - k)
        assert b(1) == comb(n, k)
        assert b.degree == k * (n - k)


# -- exact division -----------------------------------------------------

def test_exact_div_examples():
    assert exact_div(QPoly([0, -1, 0, 1]), QPoly([-1, 1])) == QPoly([0, 1, 1])
    p = QPoly([3, 1, 4, 1, 5])
    assert exact_div(p, ONE) == p


def test_exact_div_four_three_over_two():
    # [4][3]/[2] = (1+q^2)[3] = q_binomial(4, 2).
    got = exact_div(q_int(4) * q_int(3), q_int(2))
    assert got == QPoly([1, 0, 1]) * q_int(3)
    assert got == QPoly([1, 1, 2, 1, 1])
    assert got == q_binomial(4, 2)
    assert naive_mul(got, q_int(2)) == q_int(4) * q_int(3)


def test_exact_div_errors():
    with pytest.raises(DivisionNotExact):
        exact_div(QPoly([1, 0, 1]), QPoly([1, 1]))
    with pytest.raises(DivisionNotExact):
        exact_div(QPoly([1, 1]), QPoly([0, 2]))
    with pytest.raises(DivisionByZero):
        exact_div(ONE, ZERO)
    with pytest.raises(ZeroDivisionError):
        exact_div(Q, 0)


@given(qpolys(), nonzero_qpolys())
def test_exact_div_round_trip(a, b):
    assert exact_div(a * b, b) == a


@given(qpolys(), nonzero_qpolys())
def test_divmod_identity(a, b):
    if abs(b.coeffs[-1]) != 1:
        return
    quo, rem = a.divmod(b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


# -- ring axioms -------------------------------------------------------------

@given(qpolys(), qpolys(), qpolys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(qpolys(), qpolys())
def test_mul_matches_naive_convolution(a, b):
    assert a * b == naive_mul(a, b)


@given(qpolys(), qpolys(), st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(qpolys(), st.integers(0, 4))
def test_pow(a, n):
    expected = ONE
    for _ in range(n):
        expected = expected * a
    assert a ** n == expected


# -- lambda and sigma ---------------------------------------------------------

def test_lambda_examples():
    p = QPoly([2, 7, 1])
    assert lambda_k(p, 0) == ONE
    assert lambda_k(p, 1) == p
    assert lambda_k(q_int(3), 2) == QPoly([0, 1, 1, 1])
    assert lambda_k(QPoly([-2]), 2) == QPoly([3])


def test_sigma_examples():
    assert sigma_k(q_int(2), 2) == QPoly([1, 1, 1])
    assert sigma_k(ZERO, 2) == ZERO
    assert sigma_k(QPoly([1, 1]), 1) == QPoly([1, 1])


@pytest.mark.parametrize("m", range(8))
def test_lambda2_of_negative_integer(m):
    assert lambda_k(QPoly([-m]), 2) == lambda_k(QPoly([m + 1]), 2) == comb(m + 1, 2)


@pytest.mark.parametrize("n", range(31))
def test_lambda_sigma_on_q_integers(n):
    for k in range(5):
        expected = q_binomial(n + k - 1, k) if n + k >= 1 else ONE
        assert sigma_k(q_int(n), k) == expected
        assert lambda_k(q_int(n), k) == q_binomial(n, k).shift(comb(k, 2))


@given(nonneg_qpolys(hi=3, max_len=4), st.integers(0, 4))
def test_lambda_sigma_against_subsets(p, k):
    assert lambda_k(p, k) == brute_lambda(p, k)
    assert sigma_k(p, k) == brute_sigma(p, k)


@given(qpolys(-5, 5, 5), qpolys(-5, 5, 5))
def test_lambda2_of_sum(a, b):
    assert lambda_k(a + b, 2) == lambda_k(a, 2) + a * b + lambda_k(b, 2)


@given(qpolys(-5, 5, 5))
def test_sigma2_plus_lambda2_is_square(p):
    assert sigma_k(p, 2) + lambda_k(p, 2) == p * p


@given(qpolys(-5, 5, 4), st.integers(0, 4))
def test_sigma_lambda_duality(p, k):
    # sum_{i} (-1)^i lambda_i(p) sigma_{k-i}(p) = 0 for k >= 1
    if k == 0:
        return
    total = ZERO
    for i in range(k + 1):
        total = total + (-1) ** i * lambda_k(p, i) * sigma_k(p, k - i)
    assert total == ZERO


def test_generalized_binomial():
    assert generalized_binomial(5, 2) == 10
    assert generalized_binomial(-2, 2) == 3
    assert generalized_binomial(-1, 3) == -1
    assert generalized_binomial(4, 0) == 1
