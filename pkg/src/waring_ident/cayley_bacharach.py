"""Cayley-Bacharach checks and the Geramita-Kreuzer-Robbiano inequality audit."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionViolated
from .exact_linalg import kernel_basis, rank
from .hilbert import hilbert_profile
from .projective import PointSet, evaluate_form, evaluation_matrix


@dataclass(frozen=True)
class CBReport:
    degree: int
    holds: bool
    separating_point: Optional[int] = None
    separating_form: Optional[tuple] = None

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "holds": self.holds,
            "separating_point": self.separating_point,
            "separating_form": list(self.separating_form) if self.separating_form is not None else None,
        }


def separating_form(Z: PointSet, i: int, d: int) -> Optional[tuple]:
    """First kernel vector of ``Z`` minus point ``i`` that does not vanish at that point."""
    P = Z[i]
    for f in kernel_basis(evaluation_matrix(Z.without(i), d)):
        if evaluate_form(f, P, d) != 0:
            return f
    return None


def cb_check(Z: PointSet, d: int) -> CBReport:
    """Does every degree-d form through all but one point pass through the last one too?

    CB(d) fails at P exactly when dropping P lowers the rank of the degree-d
    evaluation matrix (equivalently, the kernel grows). The first such point
    is reported with an explicit separating form. A singleton never
    satisfies CB(d), since some degree-d form is nonzero at its point.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if len(Z) == 0:
        raise ValueError("the point set is empty")
    full = rank(evaluation_matrix(Z, d))
    for i in range(len(Z)):
        if rank(evaluation_matrix(Z.without(i), d)) < full:
            form = separating_form(Z, i, d)
            assert form is not None
            return CBReport(d, False, i, form)
    return CBReport(d, True)


def cb_max_degree(Z: PointSet) -> int:
    """Largest d with CB(d), or -1. CB degrees are down-closed and CB fails from ``len(Z) - 1`` on."""
    if len(Z) < 2:
        raise PreconditionViolated("need at least two points")
    best = -1
    for d in range(len(Z)):
        if not cb_check(Z, d).holds:
            break
        best = d
    return best


def gkr_inequalities(dh, i: int) -> list:
    """Pairs ``(left, right)`` of partial sums for j = 0..i+1; each must satisfy left <= right."""
    dh = list(dh) + [0] * max(0, i + 2 - len(dh))
    out = []
    for j in range(i + 2):
        out.append((sum(dh[:j + 1]), sum(dh[i + 1 - j:i + 2])))
    return out


def gkr_audit(Z: PointSet, i: int) -> bool:
    """Check ``Dh(0)+...+Dh(j) <= Dh(i+1-j)+...+Dh(i+1)`` for all ``0 <= j <= i+1``.

    Must hold for every CB(i) set; ``False`` therefore signals a bug somewhere
    in the rank machinery, and callers treat it as an internal-consistency
    failure.
    """
    if i < 0:
        raise ValueError("degree must be nonnegative")
    if not cb_check(Z, i).holds:
        raise PreconditionViolated(f"the set does not satisfy CB({i})")
    profile = hilbert_profile(Z, i + 1)
    return all(left <= right for left, right in gkr_inequalities(profile.dh, i))
