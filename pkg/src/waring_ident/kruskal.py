"""Higher Kruskal ranks and the symmetric Kruskal criterion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd
from typing import Optional

from .errors import EmptyPointSet
from .exact_linalg import Matrix, rank
from .projective import PointSet, evaluation_matrix


@dataclass(frozen=True)
class KruskalReport:
    degree: int
    rank: int
    witness: Optional[tuple] = None

    def to_json(self) -> dict:
        return {"d": self.degree, "k": self.rank,
                "witness": list(self.witness) if self.witness is not None else None}


@dataclass(frozen=True)
class PartitionCheck:
    partition: tuple
    ranks: tuple
    bound: Fraction
    passes: bool

    def to_json(self) -> dict:
        return {"partition": list(self.partition), "ranks": list(self.ranks),
                "bound": str(self.bound), "passes": self.passes}


def max_kruskal_rank(A: PointSet, d: int) -> int:
    return min(len(A), comb(A.n + d, d))


def kruskal_rank(A: PointSet, d: int) -> KruskalReport:
    """Largest k such that every k-subset of the degree-d Veronese image is independent.

    When k is below its ceiling ``min(len(A), C(n+d, d))`` the report carries
    the lexicographically first dependent (k+1)-subset as witness. The answer
    is the one a level-by-level scan over subsets in lexicographic order
    gives; the search below just shares elimination work between subsets
    with a common prefix and prunes at the smallest dependent size found.
    """
    if len(A) == 0:
        raise EmptyPointSet("the point set is empty")
    if d < 1:
        raise ValueError("Kruskal degree must be at least 1")
    V = evaluation_matrix(A, d)
    rows = [list(V.row(i)) for i in range(V.rows)]
    l = len(A)
    top = max_kruskal_rank(A, d)

    if rank(V) == l:
        return KruskalReport(d, top)
    # independence passes to subsets, so all ceiling-size subsets independent settles it
    if all(rank(_rows_matrix(rows, S, V.cols)) == top for S in combinations(range(l), top)):
        return KruskalReport(d, top)

    girth = _smallest_dependent_size(rows, min(l, top + 1))
    witness = _first_dependent(rows, girth)
    return KruskalReport(d, girth - 1, witness)


def _rows_matrix(rows, S, cols):
    return Matrix(len(S), cols, tuple(x for i in S for x in rows[i]))


def _reduce(basis: list, row: list) -> list:
    # basis rows are zero at the pivots of earlier basis rows, so one pass suffices
    for pc, b in basis:
        f = row[pc]
        if f:
            p = b[pc]
            row = [p * x - f * y for x, y in zip(row, b)]
            g = gcd(*row)
            if g > 1:
                row = [x // g for x in row]
    return row


def _extend(basis: list, red: list) -> list:
    pc = next(j for j, x in enumerate(red) if x)
    return basis + [(pc, red)]


def _smallest_dependent_size(rows: list, bound: int) -> int:
    """Size of the smallest dependent subset, given that one of size ``bound`` exists."""
    best = bound
    l = len(rows)

    def dfs(start, basis, size):
        nonlocal best
        for i in range(start, l):
            if size + 1 >= best:
                return
            red = _reduce(basis, rows[i])
            if not any(red):
                best = size + 1
                return
            if size + 2 < best:
                dfs(i + 1, _extend(basis, red), size + 1)

    dfs(0, [], 0)
    return best


def _first_dependent(rows: list, size: int) -> tuple:
    """Lexicographically first dependent subset of the given (minimal dependent) size."""
    l = len(rows)

    def dfs(start, basis, chosen):
        last = len(chosen) + 1 == size
        for i in range(start, l - (size - len(chosen) - 1)):
            red = _reduce(basis, rows[i])
            if last:
                if not any(red):
                    return chosen + (i,)
            elif any(red):
                found = dfs(i + 1, _extend(basis, red), chosen + (i,))
                if found:
                    return found
        return None

    found = dfs(0, [], ())
    assert found is not None
    return found


def partitions3(d: int) -> list:
    """Partitions ``a + b + c = d`` with ``a >= b >= c >= 1``, in decreasing lex order."""
    out = []
    for a in range(d - 2, 0, -1):
        for b in range(min(a, d - a - 1), 0, -1):
            c = d - a - b
            if 1 <= c <= b:
                out.append((a, b, c))
    return out


def kruskal_criterion(A: PointSet, d: int, ranks: Optional[dict] = None) -> list:
    """Every three-part reshaping of degree ``d`` checked against ``2r <= ka + kb + kc - 2``.

    Sorted by bound, widest first. Empty when ``d < 3`` (no such partition).
    ``ranks`` is an optional cache ``{degree: k}`` that is filled in place.
    """
    if len(A) == 0:
        raise EmptyPointSet("the point set is empty")
    ranks = {} if ranks is None else ranks
    r = len(A)
    checks = []
    for part in partitions3(d):
        ks = []
        for a in part:
            if a not in ranks:
                ranks[a] = kruskal_rank(A, a).rank
            ks.append(ranks[a])
        total = sum(ks) - 2
        checks.append(PartitionCheck(part, tuple(ks), Fraction(total, 2), 2 * r <= total))
    checks.sort(key=lambda c: (-c.bound, tuple(-x for x in c.partition)))
    return checks
