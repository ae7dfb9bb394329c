"""Identifiability certificates for Waring decompositions.

Rules, in order of precedence:

* ``TRIVIAL_RANK_ONE``: a single power is its own unique decomposition.
* ``KRUSKAL``: some reshaping ``a + b + c = d`` has ``2r <= ka + kb + kc - 2``.
* ``EXTENDED_SEPTIC``: ternary septics with 11 summands, ``k1 = 3`` and ``k3 = 10``.
* ``CUBIC_FAMILY``: ternary forms of degree ``7 + 2q`` (``q >= -1``) with
  ``3q + 10`` summands on a plane cubic, ``k1 = 3`` and ``k_{q+3} = 3q + 9``.

All rules are sufficient conditions and assume the points form a minimal
decomposition of the tensor; :func:`certify_weighted` verifies that
assumption for an explicit weighting. Anything else is ``INCONCLUSIVE``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    EmptyPointSet,
    InternalConsistencyError,
    NotMinimal,
    WrongAmbientDimension,
    ZeroWeight,
)
from .exact_linalg import as_rational, kernel_basis, rank
from .hilbert import hilbert_profile
from .kruskal import kruskal_criterion, kruskal_rank
from .projective import PointSet, evaluation_matrix
from .tensor import WeightedDecomposition, format_rational, is_minimal, synthesize

IDENTIFIABLE = "IDENTIFIABLE"
INCONCLUSIVE = "INCONCLUSIVE"

TRIVIAL_RANK_ONE = "TRIVIAL_RANK_ONE"
KRUSKAL = "KRUSKAL"
EXTENDED_SEPTIC = "EXTENDED_SEPTIC"
CUBIC_FAMILY = "CUBIC_FAMILY"

MINIMALITY = "A is a minimal decomposition of T"
ASSUMED = "ASSUMED"
VERIFIED = "VERIFIED"


@dataclass(frozen=True)
class CubicContainment:
    contained: bool
    cubic_form: Optional[tuple]
    unique: bool

    def to_json(self) -> dict:
        return {"contained": self.contained,
                "cubic_form": list(self.cubic_form) if self.cubic_form is not None else None,
                "unique": self.unique}


@dataclass(frozen=True)
class Certificate:
    verdict: str
    rule: Optional[str]
    evidence: dict = field(default_factory=dict)
    assumptions: tuple = ()

    @property
    def identifiable(self) -> bool:
        return self.verdict == IDENTIFIABLE

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "rule": self.rule,
                "evidence": self.evidence, "assumptions": [dict(a) for a in self.assumptions]}


def cubic_containment(A: PointSet) -> CubicContainment:
    """Plane cubics through ``A``: whether one exists, a canonical one, and whether it is unique."""
    if A.n != 2:
        raise WrongAmbientDimension(f"cubic containment needs points of P^2, got P^{A.n}")
    ker = kernel_basis(evaluation_matrix(A, 3))
    return CubicContainment(bool(ker), ker[0] if ker else None, len(ker) == 1)


def cubic_family_profile(q: int) -> tuple:
    """The Dh table forced by the cubic-family hypotheses: 1, 2, then 3 (q+2 times), then 1."""
    return (1, 2) + (3,) * (q + 2) + (1,)


def _ranks_json(ranks: dict) -> dict:
    return {str(a): ranks[a] for a in sorted(ranks)}


def _rank(A, a, ranks):
    if a not in ranks:
        ranks[a] = kruskal_rank(A, a).rank
    return ranks[a]


def _septic(A: PointSet, d: int, ranks: dict) -> dict:
    if not (A.n == 2 and d == 7 and len(A) == 11):
        return {"shape_matches": False,
                "diagnostic": f"needs n=2, d=7, r=11 (have n={A.n}, d={d}, r={len(A)})"}
    k1, k3 = _rank(A, 1, ranks), _rank(A, 3, ranks)
    failed = []
    if k1 != 3:
        failed.append(f"k1 < 3 (k1 = {k1})")
    if k3 != 10:
        failed.append(f"k3 < 10 (k3 = {k3})")
    return {"shape_matches": True, "k1": k1, "k3": k3, "fires": not failed, "failed": failed}


def _cubic_family(A: PointSet, d: int, ranks: dict) -> dict:
    r = len(A)
    if not (A.n == 2 and d >= 5 and d % 2 == 1):
        return {"shape_matches": False,
                "diagnostic": f"needs n=2 and odd d >= 5 (have n={A.n}, d={d})"}
    q = (d - 7) // 2
    top = 3 * q + 10
    if r > top:
        return {"shape_matches": False, "q": q,
                "diagnostic": f"needs r <= 3q+10 = {top} (have r={r})"}
    cubic = cubic_containment(A)
    k1 = _rank(A, 1, ranks)
    kq = _rank(A, q + 3, ranks)
    failed = []
    if not cubic.contained:
        failed.append("points not on a plane cubic")
    if k1 != min(3, r):
        failed.append(f"k1 < {min(3, r)} (k1 = {k1})")
    if kq != min(r, 3 * q + 9):
        failed.append(f"k{q + 3} < {min(r, 3 * q + 9)} (k{q + 3} = {kq})")
    info = {"shape_matches": True, "q": q, "k1": k1, f"k{q + 3}": kq,
            "cubic": cubic.to_json(), "critical": r == top, "failed": failed}
    info["fires"] = not failed and r == top
    info["hypotheses_hold"] = not failed
    return info


def certify(A: PointSet, d: int, minimality: str = ASSUMED) -> Certificate:
    """Run every criterion on the decomposition ``A`` of a degree-``d`` tensor.

    The verdict cites the first rule that fires (by precedence); every rule
    that fires is listed under ``evidence["applicable_rules"]``. Internal
    invariants the theory guarantees are asserted along the way and raise
    :class:`InternalConsistencyError` if violated.
    """
    if len(A) == 0:
        raise EmptyPointSet("a decomposition needs at least one point")
    if d < 1:
        raise ValueError("degree must be at least 1")
    r = len(A)
    assumptions = ({"statement": MINIMALITY, "status": minimality},)
    evidence = {"n": A.n, "d": d, "r": r}
    if r == 1:
        evidence["applicable_rules"] = [TRIVIAL_RANK_ONE]
        return Certificate(IDENTIFIABLE, TRIVIAL_RANK_ONE, evidence, assumptions)

    ranks: dict = {}
    checks = kruskal_criterion(A, d, ranks) if d >= 3 else []
    passing = [c for c in checks if c.passes]
    kruskal_info = {"applicable": d >= 3, "checks": [c.to_json() for c in checks]}
    if passing:
        kruskal_info["passing_partition"] = list(passing[0].partition)
    if d < 3:
        kruskal_info["diagnostic"] = "criterion inapplicable: d < 3 has no three-part partition"

    septic = _septic(A, d, ranks)
    cubic = _cubic_family(A, d, ranks)

    applicable = []
    if passing:
        applicable.append(KRUSKAL)
    if septic.get("fires"):
        applicable.append(EXTENDED_SEPTIC)
        if passing:
            raise InternalConsistencyError(
                f"septic hypotheses hold yet partition {passing[0].partition} passes Kruskal"
            )
    if cubic.get("fires"):
        q = cubic["q"]
        profile = hilbert_profile(A, q + 5)
        expected = cubic_family_profile(q) + (0,)
        cubic["dh"] = list(profile.dh)
        if profile.dh[:len(expected)] != expected:
            raise InternalConsistencyError(
                f"cubic-family hypotheses hold but Dh = {profile.dh}, expected {expected}"
            )
        if q >= 0 and not cubic["cubic"]["unique"]:
            raise InternalConsistencyError("cubic-family hypotheses hold but the cubic is not unique")
        applicable.append(CUBIC_FAMILY)
    elif cubic.get("hypotheses_hold") and not cubic["critical"] and not passing:
        raise InternalConsistencyError(
            "below the critical length the cubic-family hypotheses must make Kruskal pass"
        )

    evidence["kruskal_ranks"] = _ranks_json(ranks)
    evidence["kruskal"] = kruskal_info
    evidence["extended_septic"] = septic
    evidence["cubic_family"] = cubic
    evidence["applicable_rules"] = applicable
    if applicable:
        return Certificate(IDENTIFIABLE, applicable[0], evidence, assumptions)

    diagnostics = []
    if checks:
        best = checks[0]
        diagnostics.append(
            f"KRUSKAL: widest partition {list(best.partition)} bound {best.bound} < r = {r}"
        )
    else:
        diagnostics.append(f"KRUSKAL: {kruskal_info['diagnostic']}")
    for name, info in ((EXTENDED_SEPTIC, septic), (CUBIC_FAMILY, cubic)):
        if not info["shape_matches"]:
            diagnostics.append(f"{name}: {info['diagnostic']}")
        elif info["failed"]:
            diagnostics.extend(f"{name}: {msg}" for msg in info["failed"])
        else:
            diagnostics.append(f"{name}: r below 3q+10, Kruskal should have applied")
    evidence["diagnostics"] = diagnostics
    return Certificate(INCONCLUSIVE, None, evidence, assumptions)


def certify_weighted(A: PointSet, weights: Sequence, d: int) -> Certificate:
    """Verify that ``(A, weights)`` is a minimal decomposition of its tensor, then :func:`certify`."""
    weights = tuple(as_rational(w) for w in weights)
    for i, w in enumerate(weights):
        if w == 0:
            raise ZeroWeight(f"weight {i} is zero")
    D = WeightedDecomposition(A, weights)
    if rank(evaluation_matrix(A, d)) < len(A):
        raise NotMinimal(f"decomposition not minimal: the degree-{d} Veronese images are dependent")
    T = synthesize(D, d)
    if not is_minimal(T, A):
        raise InternalConsistencyError("independent powers with nonzero weights must be minimal")
    cert = certify(A, d, minimality=VERIFIED)
    cert.evidence["weights"] = [format_rational(w) for w in weights]
    return cert
