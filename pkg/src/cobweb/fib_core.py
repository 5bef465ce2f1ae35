"""Fibonacci numbers, generalized sequence factorials, and fibonomials.

Everything is exact: plain Python integers throughout, with
``fractions.Fraction`` only where a quotient is not known to be integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable


@dataclass(frozen=True)
class PsiSequence:
    """An integer sequence that generates factorials and binomials.

    ``values(n)`` must be nonzero for every n >= 1 (the factorial
    machinery divides by these); the value at 0 is unconstrained and
    never enters a product.
    """

    name: str
    values: Callable[[int], int]

    def __call__(self, n: int) -> int:
        return self.values(n)


def fib(n: int) -> int:
    """n-th Fibonacci number under F_0 = 0, F_1 = F_2 = 1; exact for any n."""
    if n < 0:
        raise ValueError(f"fib expects n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


FIBONACCI = PsiSequence("fibonacci", fib)
NATURAL = PsiSequence("natural", lambda n: n)


def geometric(q: int) -> PsiSequence:
    """Sequence 1, q, q^2, ... (the value at 0 is 0 and never used)."""
    if q < 1:
        raise ValueError(f"geometric ratio must be >= 1, got {q}")
    return PsiSequence(f"geometric({q})", lambda n: q ** (n - 1) if n >= 1 else 0)


def psi_factorial(seq: PsiSequence, n: int) -> int:
    """Product seq(n) * seq(n-1) * ... * seq(1); the empty product is 1."""
    if n < 0:
        raise ValueError(f"psi_factorial expects n >= 0, got {n}")
    out = 1
    for m in range(1, n + 1):
        v = seq.values(m)
        if v == 0:
            raise ValueError(f"sequence {seq.name!r} vanishes at {m}; factorial undefined")
        out *= v
    return out


def psi_falling(seq: PsiSequence, x: int, k: int) -> int:
    """Falling product of k consecutive sequence values descending from seq(x)."""
    if k < 0:
        raise ValueError(f"psi_falling expects k >= 0, got {k}")
    if k > x:
        raise ValueError(f"psi_falling needs k <= x, got x={x}, k={k}")
    out = 1
    for m in range(x, x - k, -1):
        out *= seq.values(m)
    return out


def fibonomial_def(n: int, k: int) -> int:
    """Fibonomial coefficient by its defining quotient of Fibonacci factorials.

    Equals F_n! / (F_k! * F_{n-k}!); the division is asserted exact.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        raise ValueError(f"fibonomial_def needs k <= n, got n={n}, k={k}")
    q, r = divmod(psi_falling(FIBONACCI, n, k), psi_factorial(FIBONACCI, k))
    if r:
        # cannot happen for the Fibonacci sequence; guards against a broken build
        raise ArithmeticError(f"inexact division in fibonomial({n}, {k})")
    return q


def fibonomial_rec(n: int, k: int, form: str = "A") -> int:
    """Fibonomial coefficient by a two-term recurrence, form "A" or "B".

    Total on all n, k >= 0: (n, 0) is 1, (0, k) is 0 for k > 0, and
    anything with k > n is 0.  The DP table is rebuilt per call and holds
    at most (n+1)(k+1) entries.

    Form A steps with coefficients F_{k-1} and F_{n-k+2}; form B with
    F_{k+1} and F_{n-k}.  On the diagonal form B touches F_{-1}, which is
    1 under the standard backward extension of the sequence.
    """
    if form not in ("A", "B"):
        raise ValueError(f"form must be 'A' or 'B', got {form!r}")
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        return 0
    fibs = [fib(i) for i in range(n + 2)]

    def cf(i: int) -> int:
        return 1 if i == -1 else fibs[i]

    prev = [1] + [0] * k  # row for 0
    for i in range(1, n + 1):
        cur = [1] + [0] * k
        for j in range(1, min(i, k) + 1):
            if form == "A":
                cur[j] = cf(j - 1) * prev[j] + cf(i - j + 1) * prev[j - 1]
            else:
                cur[j] = cf(j + 1) * prev[j] + cf(i - 1 - j) * prev[j - 1]
        prev = cur
    return prev[k]


def psi_binomial(seq: PsiSequence, n: int, k: int) -> Fraction:
    """Generalized binomial: falling product over factorial, as an exact rational.

    Integral for the Fibonacci and natural instances; callers wanting an
    int should check ``.denominator == 1``.
    """
    if k > n:
        raise ValueError(f"psi_binomial needs k <= n, got n={n}, k={k}")
    return Fraction(psi_falling(seq, n, k), psi_factorial(seq, k))
