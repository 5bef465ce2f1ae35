"""Saturated-chain counts on the cobweb poset and the copy-count reading
of the fibonomial coefficients they support.

The closed-form counters live next to a deliberately naive DFS oracle that
walks every chain of a truncated poset; the two are cross-checked in the
test suite and the crosscheck harness.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .fib_core import FIBONACCI, fib, fibonomial_def, psi_factorial, psi_falling
from .poset import (
    CobwebCopy,
    Vertex,
    count_copies_rooted,
    enumerate_copies_rooted,
    level_size,
    to_linear,
    truncate,
)

ORACLE_MAX_ENV = "COBWEB_ORACLE_MAX"
DEFAULT_ORACLE_MAX = 8  # 8_F! = 65520 chains; DFS stays well under a second


def oracle_max() -> int:
    """DFS ceiling for brute_force_max_chains; COBWEB_ORACLE_MAX overrides."""
    raw = os.environ.get(ORACLE_MAX_ENV)
    if raw is None:
        return DEFAULT_ORACLE_MAX
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{ORACLE_MAX_ENV} must be an integer, got {raw!r}") from exc


def max_chains_from_root(n: int) -> int:
    """Saturated chains from the root to level n: the Fibonacci factorial n_F!."""
    return psi_factorial(FIBONACCI, n)


def max_chains_from_fixed(k: int, n: int) -> int:
    """Saturated chains from one fixed level-k vertex to level n.

    The falling product F_n * F_{n-1} * ... * F_{k+1}; the same for every
    source vertex of the level.
    """
    if k > n:
        raise ValueError(f"need k <= n, got k={k}, n={n}")
    return psi_falling(FIBONACCI, n, n - k)


def max_chains_level_to_level(k: int, n: int) -> int:
    """Saturated chains from the whole of level k to level n (k >= 1)."""
    if k == 0:
        raise ValueError("use max_chains_from_root for the root level")
    if k > n:
        raise ValueError(f"need k <= n, got k={k}, n={n}")
    return level_size(k) * max_chains_from_fixed(k, n)


def fibonomial_via_chains(n: int, k: int) -> int:
    """Fibonomial as the chain-count quotient: chains from a fixed level-k
    vertex to level n, divided by the chain count of one height-(n-k) copy.

    The division is asserted exact; a remainder would mean a broken build.
    """
    if k > n:
        raise ValueError(f"need k <= n, got k={k}, n={n}")
    m = n - k
    q, r = divmod(max_chains_from_fixed(k, n), psi_factorial(FIBONACCI, m))
    if r:
        raise ArithmeticError(f"inexact chain division for n={n}, k={k}")
    return q


@dataclass(frozen=True)
class ChainCountReport:
    """Chain counts from level ``from_level`` to level ``to_level``."""

    from_level: int
    to_level: int
    per_source: int
    total: int

    def to_json_dict(self) -> dict:
        # counts rendered as decimal strings so arbitrary precision survives JSON
        return {
            "n": str(self.to_level),
            "k": str(self.from_level),
            "per_source": str(self.per_source),
            "total": str(self.total),
            "fibonomial": str(fibonomial_via_chains(self.to_level, self.from_level)),
        }


def chain_count_report(k: int, n: int) -> ChainCountReport:
    """Bundle per-source and whole-level chain counts for levels k -> n."""
    per_source = max_chains_from_fixed(k, n)
    return ChainCountReport(k, n, per_source, level_size(k) * per_source)


@dataclass(frozen=True)
class K1DegeneracyReport:
    """Why the copy-count reading needs k > 1, recorded per n."""

    n: int
    value: int
    flagged: bool
    note: str


def check_k1_degeneracy(n: int) -> K1DegeneracyReport:
    """Report the k = 1 breakdown of the copy-count interpretation.

    The fibonomial (n, 1) = F_n stays perfectly well defined; only the
    level-factor reading fails, because the first two levels have equal
    size and the factor for level 1 is indistinguishable from level 2's.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if fib(1) != fib(2):
        raise AssertionError("F_1 != F_2; the degeneracy premise itself broke")
    return K1DegeneracyReport(
        n=n,
        value=fibonomial_def(n, 1),
        flagged=True,
        note="levels 1 and 2 have equal size; the copy-count reading needs k > 1",
    )


def recurrence_class_split(n: int, k: int) -> tuple[int, int]:
    """The two disjoint-class counts behind the step from (n, .) to (n+1, k).

    Returns (F_{k+1} * (n, k)_F, F_{n-k} * (n, k-1)_F); the sum is the
    fibonomial (n+1, k).
    """
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    first = fib(k + 1) * fibonomial_def(n, k)
    second = fib(n - k) * fibonomial_def(n, k - 1)
    return first, second


def brute_force_max_chains(k: int, n: int, source: Vertex | None = None) -> int:
    """Count saturated chains by explicit DFS over the truncated Hasse diagram.

    Oracle code: every chain is walked, no closed form and no memo.
    ``source`` fixes one level-k start vertex; None sums the whole level.
    """
    bound = oracle_max()
    if n > bound:
        raise ValueError(f"DFS oracle bound is {bound} (set {ORACLE_MAX_ENV} to change), got n={n}")
    if k > n:
        raise ValueError(f"need k <= n, got k={k}, n={n}")
    if source is not None and source.level != k:
        raise ValueError(f"source {source} is not at level {k}")
    t = truncate(n)
    adj: list[list[int]] = [[] for _ in range(t.vertex_count)]
    for i, j in t.edges:
        adj[i].append(j)
    levels = [v.level for v in t.vertices]

    def walk(i: int) -> int:
        if levels[i] == n:
            return 1
        return sum(walk(j) for j in adj[i])

    sources = [source] if source is not None else list(t.vertices_at(k))
    return sum(walk(to_linear(v)) for v in sources)


def greedy_disjoint_copies(root: Vertex, m: int, copy_limit: int = 200_000) -> list[CobwebCopy]:
    """One chain-disjoint family of prototype copies under ``root``, greedily.

    Demonstration only: copies are taken in enumeration order whenever
    their maximal chains avoid every chain already claimed.  The family
    found can fall short of the fibonomial; nothing here claims maximality
    or that a perfect family exists.
    """
    total = count_copies_rooted(root, m)
    if total > copy_limit:
        raise ValueError(f"{total} copies exceed the limit {copy_limit}")
    claimed: set[tuple[Vertex, ...]] = set()
    family: list[CobwebCopy] = []
    for copy in enumerate_copies_rooted(root, m):
        chains = list(copy.chains())
        if any(c in claimed for c in chains):
            continue
        claimed.update(chains)
        family.append(copy)
    return family
