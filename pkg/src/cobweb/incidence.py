"""Exact integer incidence-algebra matrices for truncated cobweb posets.

The zeta matrix is materialized two independent ways (straight from the
order relation, and from the closed staircase formula), the Moebius matrix
comes from exact back-substitution, and powers of eta = zeta - delta count
strict chains.
"""

from __future__ import annotations

from .fib_core import fib
from .poset import Vertex, leq, level_size, to_linear, truncate


class TriangularMatrix:
    """Immutable square integer matrix with nothing below the diagonal."""

    __slots__ = ("rows",)

    def __init__(self, rows) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        for i in range(n):
            if any(rows[i][j] for j in range(i)):
                raise ValueError(f"nonzero entry below the diagonal in row {i}")
        object.__setattr__(self, "rows", rows)

    # construction helpers -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "TriangularMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    # basic protocol --------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, TriangularMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"TriangularMatrix(size={self.size})"

    def __setattr__(self, name, value) -> None:
        raise AttributeError("TriangularMatrix is immutable")

    def is_unitriangular(self) -> bool:
        return all(self.rows[i][i] == 1 for i in range(self.size))

    # exact arithmetic ------------------------------------------------------

    def __mul__(self, other: "TriangularMatrix") -> "TriangularMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        n = self.size
        out = []
        for i in range(n):
            acc = [0] * n
            for t in range(i, n):
                c = self.rows[i][t]
                if not c:
                    continue
                brow = other.rows[t]
                if c == 1:
                    acc = [x + y for x, y in zip(acc, brow)]
                elif c == -1:
                    acc = [x - y for x, y in zip(acc, brow)]
                else:
                    acc = [x + c * y for x, y in zip(acc, brow)]
            out.append(acc)
        return TriangularMatrix(out)

    def __add__(self, other: "TriangularMatrix") -> "TriangularMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return TriangularMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "TriangularMatrix") -> "TriangularMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return TriangularMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def power(self, t: int) -> "TriangularMatrix":
        if t < 0:
            raise ValueError(f"power expects t >= 0, got {t}")
        out = TriangularMatrix.identity(self.size)
        for _ in range(t):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return all(not any(row) for row in self.rows)

    # export -----------------------------------------------------------------

    def to_dense_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows) + "\n"

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.rows) + "\n"

    def to_json_dict(self) -> dict:
        return {"size": self.size, "rows": [list(row) for row in self.rows]}


def zeta_from_order(max_level: int) -> TriangularMatrix:
    """Zeta matrix read off the order relation of the truncated poset."""
    t = truncate(max_level)
    verts = t.vertices
    return TriangularMatrix(
        [[1 if leq(u, v) else 0 for v in verts] for u in verts]
    )


def zeta_explicit(size: int) -> TriangularMatrix:
    """Zeta matrix from the closed formula zeta = zeta1 - zeta0.

    zeta1 is the all-ones upper triangle (diagonal included).  zeta0
    punches out, for the vertex at linear index F_{s+1}+k of level s, the
    F_s - k - 1 same-level columns to its right.  No poset machinery is
    used here; the construction depends only on Fibonacci numbers.
    """
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    z1 = [[1 if j >= i else 0 for j in range(size)] for i in range(size)]
    z0 = [[0] * size for _ in range(size)]
    s = 1
    while fib(s + 1) < size:
        fs = fib(s)
        base = fib(s + 1)
        for k in range(max(fs - 1, 0)):  # larger k leave the inner sum empty
            x = base + k
            if x >= size:
                break
            for r in range(1, fs - k):
                y = x + r
                if y < size:
                    z0[x][y] = 1
        s += 1
    return TriangularMatrix(z1) - TriangularMatrix(z0)


def mobius(z: TriangularMatrix) -> TriangularMatrix:
    """Exact inverse of a unitriangular matrix by back-substitution."""
    if not z.is_unitriangular():
        raise ValueError("mobius needs a unitriangular matrix")
    n = z.size
    rows = z.rows
    out = []
    for i in range(n):
        y = [0] * n
        y[i] = 1
        for t in range(i, n):
            c = y[t]
            if not c:
                continue
            rt = rows[t]
            for j in range(t + 1, n):
                if rt[j]:
                    y[j] -= c * rt[j]
        out.append(y)
    return TriangularMatrix(out)


def eta(z: TriangularMatrix) -> TriangularMatrix:
    """Strict-order part zeta - delta; its powers count strict chains."""
    return z - TriangularMatrix.identity(z.size)


def chain_count(z: TriangularMatrix, x: int, y: int, length: int) -> int:
    """Number of strict chains x = z_0 < z_1 < ... < z_length = y.

    Entry (x, y) of eta^length, computed by iterated row-vector products.
    """
    n = z.size
    if not (0 <= x < n and 0 <= y < n):
        raise ValueError(f"indices must be in 0..{n - 1}")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    e = eta(z)
    vec = list(e.rows[x])
    for _ in range(length - 1):
        nxt = [0] * n
        for t in range(n):
            c = vec[t]
            if not c:
                continue
            row = e.rows[t]
            for j in range(t + 1, n):
                if row[j]:
                    nxt[j] += c * row[j]
        vec = nxt
    return vec[y]


def _rect_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    out = []
    for row in a:
        acc = [0] * len(b[0])
        for t, c in enumerate(row):
            if c:
                brow = b[t]
                acc = [x + c * y for x, y in zip(acc, brow)]
        out.append(acc)
    return out


def maximal_chain_matrix(max_level: int, from_level: int, to_level: int) -> list[list[int]]:
    """Saturated-chain counts between two levels, vertex by vertex.

    The product of the per-step cover matrices read off the truncation's
    edge list; entry (u, v) counts saturated chains from the u-th vertex
    of from_level to the v-th vertex of to_level.  Zero steps give the
    identity.
    """
    if not 0 <= from_level <= to_level <= max_level:
        raise ValueError(
            f"need 0 <= from_level <= to_level <= max_level, got {from_level}, {to_level}, {max_level}"
        )
    t = truncate(max_level)
    offset = {s: to_linear(Vertex(s, 1)) for s in range(max_level + 1)}
    size0 = level_size(from_level)
    result = [[1 if i == j else 0 for j in range(size0)] for i in range(size0)]
    for s in range(from_level, to_level):
        step = [[0] * level_size(s + 1) for _ in range(level_size(s))]
        for i, j in t.edges:
            if offset[s] <= i < offset[s] + level_size(s):
                step[i - offset[s]][j - offset[s + 1]] += 1
        result = _rect_mul(result, step)
    return result
