"""Projective points, point sets, monomial bases and Veronese maps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, prod
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, DuplicatePoint, MalformedInput, ZeroVector
from .exact_linalg import Matrix, as_rational


@dataclass(frozen=True)
class ProjectivePoint:
    """Canonical representative: primitive integer vector, first nonzero entry positive."""

    coords: tuple

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)


def normalize(raw: Sequence) -> ProjectivePoint:
    vals = [as_rational(x) for x in raw]
    if not vals:
        raise ZeroVector("empty coordinate vector")
    den = 1
    for x in vals:
        if not isinstance(x, int):
            den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector("the zero vector is not a projective point")
    if next(x for x in ints if x) < 0:
        g = -g
    return ProjectivePoint(tuple(x // g for x in ints))


@dataclass(frozen=True)
class MonomialBasis:
    """Exponent vectors of degree ``d`` in ``n + 1`` variables, graded lex, x0 > x1 > ... > xn."""

    n: int
    d: int
    exponents: tuple

    def __len__(self):
        return len(self.exponents)

    def index(self, e: Sequence[int]) -> int:
        return _exponent_index(self.n, self.d)[tuple(e)]


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> MonomialBasis:
    if n < 0 or d < 0:
        raise ValueError("n and d must be nonnegative")
    exps = tuple(_compositions(d, n + 1))
    assert len(exps) == comb(n + d, d)
    return MonomialBasis(n, d, exps)


@lru_cache(maxsize=None)
def _exponent_index(n: int, d: int) -> dict:
    return {e: i for i, e in enumerate(monomial_basis(n, d).exponents)}


def monomial_values(coords: Sequence[int], d: int) -> tuple:
    """All degree-``d`` monomials evaluated at ``coords``, in basis order."""
    basis = monomial_basis(len(coords) - 1, d)
    # powers table avoids recomputing x**k per monomial
    powers = [[1] * (d + 1) for _ in coords]
    for i, x in enumerate(coords):
        for k in range(1, d + 1):
            powers[i][k] = powers[i][k - 1] * x
    return tuple(prod(powers[i][k] for i, k in enumerate(e)) for e in basis.exponents)


def veronese(P: ProjectivePoint, d: int) -> ProjectivePoint:
    if d < 1:
        raise ValueError("veronese degree must be at least 1")
    return normalize(monomial_values(P.coords, d))


@dataclass(frozen=True)
class PointSet:
    """Ordered set of distinct points of P^n.

    ``points`` are canonical and drive every rank computation.
    ``representatives`` keep the coordinate vectors as supplied: they are the
    linear forms L_i whose powers make up a tensor, and a sign flip in odd
    degree changes L_i^d. They default to the canonical coordinates and do
    not take part in equality.

    The empty set is representable (sub-configurations need it) but the
    public Hilbert/Kruskal operations reject it.
    """

    n: int
    points: tuple
    representatives: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.representatives is None:
            object.__setattr__(self, "representatives", tuple(p.coords for p in self.points))
        elif len(self.representatives) != len(self.points):
            raise DimensionMismatch("one representative per point required")
        else:
            for p, rep in zip(self.points, self.representatives):
                if normalize(rep) != p:
                    raise ValueError(f"{list(rep)} does not represent {list(p.coords)}")
        seen = set()
        for i, p in enumerate(self.points):
            if not isinstance(p, ProjectivePoint):
                raise TypeError("points must be ProjectivePoint instances")
            if len(p.coords) != self.n + 1:
                raise DimensionMismatch(
                    f"point {i} has {len(p.coords)} coordinates, expected {self.n + 1}"
                )
            if p in seen:
                raise DuplicatePoint(f"point {i} {list(p.coords)} repeats an earlier point")
            seen.add(p)

    @classmethod
    def from_coords(cls, rows: Iterable[Sequence], n: int | None = None) -> "PointSet":
        reps = tuple(tuple(as_rational(x) for x in r) for r in rows)
        pts = tuple(normalize(r) for r in reps)
        if n is None:
            if not pts:
                raise MalformedInput("ambient dimension required for an empty point set")
            n = pts[0].n
        return cls(n, pts, reps)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def subset(self, indices: Iterable[int]) -> "PointSet":
        indices = list(indices)
        return PointSet(self.n, tuple(self.points[i] for i in indices),
                        tuple(self.representatives[i] for i in indices))

    def without(self, i: int) -> "PointSet":
        return PointSet(self.n, self.points[:i] + self.points[i + 1:],
                        self.representatives[:i] + self.representatives[i + 1:])

    def union(self, other: "PointSet") -> "PointSet":
        if other.n != self.n:
            raise DimensionMismatch("point sets live in different projective spaces")
        return PointSet(self.n, self.points + other.points,
                        self.representatives + other.representatives)

    def to_json(self) -> dict:
        return {"n": self.n, "points": [[int(x) if isinstance(x, int) else str(x) for x in r]
                                        for r in self.representatives]}


def parse_point_set(doc) -> PointSet:
    """Build a :class:`PointSet` from the JSON document ``{"n": 2, "points": [[...], ...]}``."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "points" not in doc:
        raise MalformedInput('point-set document needs a "points" array')
    raw = doc["points"]
    if not isinstance(raw, list):
        raise MalformedInput('"points" must be an array')
    n = doc.get("n")
    rows = []
    for i, r in enumerate(raw):
        if not isinstance(r, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in r
        ):
            raise MalformedInput(f"point {i} must be an array of integers")
        rows.append(r)
    if n is None:
        if not rows:
            raise MalformedInput('empty point list without "n"')
        n = len(rows[0]) - 1
    if not isinstance(n, int) or n < 0:
        raise MalformedInput('"n" must be a nonnegative integer')
    for i, r in enumerate(rows):
        if len(r) != n + 1:
            raise DimensionMismatch(f"point {i} has {len(r)} coordinates, expected {n + 1}")
    return PointSet.from_coords(rows, n=n)


def evaluation_matrix(Z: PointSet, d: int) -> Matrix:
    """``len(Z) x C(n+d, d)`` matrix; row i holds the degree-d monomials at point i."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    cols = comb(Z.n + d, d)
    return Matrix(len(Z), cols, tuple(x for p in Z for x in monomial_values(p.coords, d)))


def evaluate_form(coeffs: Sequence, P: ProjectivePoint, d: int) -> Fraction:
    """Value of the degree-``d`` form with the given basis coefficients at ``P``."""
    vals = monomial_values(P.coords, d)
    if len(coeffs) != len(vals):
        raise DimensionMismatch("coefficient vector does not match the monomial basis")
    return sum((as_rational(c) * v for c, v in zip(coeffs, vals)), 0)
