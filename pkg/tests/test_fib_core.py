import math
from fractions import Fraction

import pytest

from cobweb.fib_core import (
    FIBONACCI,
    NATURAL,
    PsiSequence,
    fib,
    fibonomial_def,
    fibonomial_rec,
    geometric,
    psi_binomial,
    psi_factorial,
    psi_falling,
)


def unrolled_fib(n):
    # oracle: literal recurrence unrolling into a list
    seq = [0, 1]
    while len(seq) <= n:
        seq.append(seq[-1] + seq[-2])
    return seq[n]


def pascal_row(n):
    # oracle: additive triangle, no factorials
    row = [1]
    for _ in range(n):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    return row


def test_fib_base_and_frozen_values():
    assert fib(0) == 0
    assert fib(1) == 1
    assert fib(2) == 1
    assert fib(5) == 5
    assert fib(10) == 55


def test_fib_matches_unrolled_recurrence():
    for n in range(60):
        assert fib(n) == unrolled_fib(n)


def test_fib_rejects_negative():
    with pytest.raises(ValueError):
        fib(-1)


def test_psi_factorial_values():
    assert psi_factorial(FIBONACCI, 0) == 1
    assert psi_factorial(FIBONACCI, 5) == 30  # 1*1*2*3*5
    assert psi_factorial(NATURAL, 4) == 24
    assert psi_factorial(FIBONACCI, 7) == 3120


def test_psi_factorial_rejects_zero_value():
    bad = PsiSequence("hits-zero", lambda n: n - 3)
    assert psi_factorial(bad, 2) == 2  # (1-3)*(2-3)
    with pytest.raises(ValueError):
        psi_factorial(bad, 3)


def test_psi_falling_values():
    assert psi_falling(FIBONACCI, 5, 2) == 15  # F_5 * F_4
    assert psi_falling(FIBONACCI, 9, 0) == 1
    assert psi_falling(FIBONACCI, 5, 5) == psi_factorial(FIBONACCI, 5)


def test_psi_falling_rejects_k_above_x():
    with pytest.raises(ValueError):
        psi_falling(FIBONACCI, 3, 4)


def test_fibonomial_def_values():
    assert fibonomial_def(4, 2) == 6
    assert fibonomial_def(5, 3) == 15
    for n in range(12):
        assert fibonomial_def(n, 0) == 1


def test_fibonomial_def_rejects_k_above_n():
    with pytest.raises(ValueError):
        fibonomial_def(3, 4)


def test_fibonomial_rec_values():
    # unrolled once by hand: (5,2) = F_1*(4,2) + F_4*(4,1) = 1*6 + 3*3
    assert fibonomial_rec(5, 2, "A") == 1 * 6 + 3 * 3 == 15
    # and via form B coefficients: F_3*(4,2) + F_2*(4,1) = 2*6 + 1*3
    assert fibonomial_rec(5, 2, "B") == 2 * 6 + 1 * 3 == 15
    assert fibonomial_rec(0, 3, "A") == 0
    assert fibonomial_rec(0, 0, "A") == 1
    assert fibonomial_rec(2, 7, "B") == 0  # k > n extension


def test_fibonomial_rec_rejects_bad_form():
    with pytest.raises(ValueError):
        fibonomial_rec(4, 2, "C")


def test_recurrence_forms_equal_definition():
    for n in range(21):
        for k in range(n + 1):
            want = fibonomial_def(n, k)
            assert fibonomial_rec(n, k, "A") == want
            assert fibonomial_rec(n, k, "B") == want


def test_fibonomial_symmetry():
    for n in range(21):
        for k in range(n + 1):
            assert fibonomial_def(n, k) == fibonomial_def(n, n - k)


def test_cross_identity_between_forms():
    # F_k (n, k) = F_{n-k+1} (n, k-1) is what makes forms A and B agree
    for n in range(1, 21):
        for k in range(1, n + 1):
            assert fib(k) * fibonomial_def(n, k) == fib(n - k + 1) * fibonomial_def(n, k - 1)


def test_fibonomial_integrality_to_60():
    for n in range(61):
        for k in range(n + 1):
            fibonomial_def(n, k)  # would raise ArithmeticError on a remainder


def test_psi_binomial_values():
    assert psi_binomial(NATURAL, 5, 2) == 10
    assert psi_binomial(FIBONACCI, 6, 3) == 60  # 240 / (2*2) in F-factorials
    assert psi_binomial(FIBONACCI, 3, 1) == 2
    with pytest.raises(ValueError):
        psi_binomial(NATURAL, 2, 3)


def test_psi_binomial_natural_matches_pascal():
    for n in range(21):
        row = pascal_row(n)
        for k in range(n + 1):
            got = psi_binomial(NATURAL, n, k)
            assert got == row[k]
            assert got.denominator == 1


def test_psi_binomial_returns_exact_rational():
    odd = PsiSequence("odd", lambda n: 2 * n - 1)
    assert psi_binomial(odd, 3, 2) == Fraction(5, 1)  # (5*3)/(3*1)
    skewed = PsiSequence("squares-plus-one", lambda n: n * n + 1)
    # (17*10*5)/(10*5*2) does not reduce to an integer
    assert psi_binomial(skewed, 4, 3) == Fraction(17, 2)


def test_geometric_sequence():
    g = geometric(3)
    assert [g(n) for n in range(1, 5)] == [1, 3, 9, 27]
    assert psi_factorial(g, 3) == 27
    assert psi_binomial(g, 4, 2) == 3 ** (2 * 2)  # q^(k(n-k))
    with pytest.raises(ValueError):
        geometric(0)


def test_fibonacci_sequence_instance():
    assert FIBONACCI(0) == 0
    assert [FIBONACCI(n) for n in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]
    assert math.gcd(fibonomial_def(30, 15), 1) >= 1  # big values stay exact ints
    assert isinstance(fibonomial_def(40, 20), int)
