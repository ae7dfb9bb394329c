"""Hilbert functions of finite point sets and the quantities derived from them.

``h(d)`` is the rank of the degree-d evaluation matrix, ``dh`` its first
difference and ``h1(d) = len(Z) - h(d)`` the failure of the Veronese image
to be independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyPointSet, InternalConsistencyError, NotDisjoint, DimensionMismatch
from .exact_linalg import Matrix, kernel_basis, rank
from .projective import PointSet, evaluation_matrix


@dataclass(frozen=True)
class HilbertProfile:
    set_size: int
    h: tuple
    dh: tuple
    h1: tuple

    @property
    def d_max(self) -> int:
        return len(self.h) - 1

    def to_json(self) -> dict:
        return {"l": self.set_size, "h": list(self.h), "dh": list(self.dh), "h1": list(self.h1)}


def _require_nonempty(Z: PointSet):
    if len(Z) == 0:
        raise EmptyPointSet("the point set is empty")


def hilbert_function(Z: PointSet, d: int) -> int:
    _require_nonempty(Z)
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return rank(evaluation_matrix(Z, d))


def hilbert_profile(Z: PointSet, d_max: int | None = None) -> HilbertProfile:
    """Table of h, Dh and h1 for degrees 0..d_max (default ``len(Z) - 1``).

    The function stabilizes at ``len(Z)`` no later than degree ``len(Z) - 1``,
    so once that value is reached the remaining entries are filled without
    further rank computations.
    """
    _require_nonempty(Z)
    l = len(Z)
    if d_max is None:
        d_max = l - 1
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    h = []
    for d in range(d_max + 1):
        if h and h[-1] == l:
            h.append(l)
        else:
            h.append(hilbert_function(Z, d))
    dh = tuple(v - (h[i - 1] if i else 0) for i, v in enumerate(h))
    return HilbertProfile(l, tuple(h), dh, tuple(l - v for v in h))


def span_dim(Z: PointSet, d: int) -> int:
    """Projective dimension of the span of the degree-d Veronese image."""
    return hilbert_function(Z, d) - 1


def h1(Z: PointSet, d: int) -> int:
    if len(Z) == 0:
        return 0
    return len(Z) - hilbert_function(Z, d)


def _check_disjoint(A: PointSet, B: PointSet):
    if len(A) == 0 or len(B) == 0:
        raise EmptyPointSet("both point sets must be nonempty")
    if A.n != B.n:
        raise DimensionMismatch("point sets live in different projective spaces")
    common = set(A.points) & set(B.points)
    if common:
        raise NotDisjoint(f"{len(common)} point(s) shared, e.g. {list(next(iter(common)).coords)}")


def span_intersection_dim(A: PointSet, B: PointSet, d: int) -> int:
    """Projective dimension of the intersection of the two Veronese spans, by direct linear algebra.

    Solves ``VA^T x = VB^T y`` and measures the span of the resulting vectors
    ``VA^T x``; -1 means the spans meet only in zero.
    """
    VA = evaluation_matrix(A, d)
    VB = evaluation_matrix(B, d)
    # columns of [VA^T | -VB^T] are the Veronese vectors of A followed by negated ones of B
    stacked = Matrix.from_rows(
        [list(VA.row(i)) for i in range(VA.rows)] + [[-x for x in VB.row(i)] for i in range(VB.rows)],
        cols=VA.cols,
    ).transpose()
    vecs = []
    for k in kernel_basis(stacked):
        x = k[:len(A)]
        vecs.append([sum(x[i] * VA.row(i)[j] for i in range(len(A))) for j in range(VA.cols)])
    if not vecs:
        return -1
    return rank(Matrix.from_rows(vecs, cols=VA.cols)) - 1


def grassmann_intersection_dim(A: PointSet, B: PointSet, d: int) -> int:
    """Intersection dimension of the Veronese spans of disjoint ``A`` and ``B`` via h1 bookkeeping.

    Returns ``h1_Z(d) - h1_A(d) - h1_B(d) - 1`` with ``Z = A u B``. When both
    images are independent (the case of minimal decompositions) the
    correction terms vanish and this is ``h1_Z(d) - 1``. The result is
    cross-checked against :func:`span_intersection_dim`.
    """
    _check_disjoint(A, B)
    Z = A.union(B)
    value = h1(Z, d) - h1(A, d) - h1(B, d) - 1
    direct = span_intersection_dim(A, B, d)
    if value != direct:
        raise InternalConsistencyError(
            f"Grassmann formula gives {value}, direct intersection gives {direct}"
        )
    return value
