"""Symmetric tensors: synthesis, span membership, minimality, catalecticants.

A tensor is stored by its entries, one per degree-d monomial in graded-lex
order: the entry at exponent ``e`` is the common value of every tensor slot
whose index multiset is ``e``. For ``T = sum a_i L_i^d`` that entry is
``sum a_i * L_i^e``, i.e. ``T = sum a_i v_d(L_i)`` in Veronese coordinates.
The literal polynomial coefficient is the entry times ``multinomial(e)``;
see :meth:`SymmetricTensor.polynomial_coefficients`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Optional, Sequence

from .errors import (
    DegreeOutOfRange,
    DimensionMismatch,
    MalformedInput,
    NotInSpan,
    ZeroWeight,
)
from .exact_linalg import Matrix, as_rational, rank, solve
from .projective import PointSet, monomial_basis, monomial_values


def multinomial(e: Sequence[int]) -> int:
    return factorial(sum(e)) // prod(factorial(k) for k in e)


@dataclass(frozen=True)
class SymmetricTensor:
    n: int
    d: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != comb(self.n + self.d, self.d):
            raise DimensionMismatch(
                f"{len(self.coeffs)} coefficients for degree {self.d} in {self.n + 1} variables"
            )

    @classmethod
    def from_coeffs(cls, n: int, d: int, coeffs: Sequence) -> "SymmetricTensor":
        return cls(n, d, tuple(as_rational(c) for c in coeffs))

    def coefficient(self, e: Sequence[int]) -> Fraction:
        return self.coeffs[monomial_basis(self.n, self.d).index(e)]

    def __add__(self, other):
        if (self.n, self.d) != (other.n, other.d):
            raise DimensionMismatch("tensors of different shape")
        return SymmetricTensor.from_coeffs(self.n, self.d, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c) -> "SymmetricTensor":
        c = as_rational(c)
        return SymmetricTensor.from_coeffs(self.n, self.d, [c * a for a in self.coeffs])

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "order": "grlex",
                "coeffs": [format_rational(c) for c in self.coeffs]}

    def polynomial_coefficients(self) -> tuple:
        """Coefficients of the form itself, with multinomial factors applied."""
        exps = monomial_basis(self.n, self.d).exponents
        return tuple(as_rational(c * multinomial(e)) for c, e in zip(self.coeffs, exps))

    def to_polynomial(self, names: Sequence[str] | None = None, literal: bool = False) -> str:
        """Human-readable rendering; entries by default, form coefficients if ``literal``."""
        names = names or (["x", "y", "z"] if self.n == 2 else [f"x{i}" for i in range(self.n + 1)])
        coeffs = self.polynomial_coefficients() if literal else self.coeffs
        terms = []
        for c, e in zip(coeffs, monomial_basis(self.n, self.d).exponents):
            if c == 0:
                continue
            mono = "".join(v if k == 1 else f"{v}^{k}" for v, k in zip(names, e) if k)
            terms.append(f"{format_rational(c)}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def format_rational(x) -> str:
    x = as_rational(x)
    return str(x) if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise MalformedInput("booleans are not rationals")
    if isinstance(s, int):
        return s
    if isinstance(s, str):
        try:
            return as_rational(Fraction(s.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInput(f"not an exact rational: {s!r}") from exc
    raise MalformedInput(f"rationals are serialized as strings or integers, got {s!r}")


def parse_tensor(doc) -> SymmetricTensor:
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedInput("tensor document must be an object")
    try:
        n, d, coeffs = doc["n"], doc["d"], doc["coeffs"]
    except KeyError as exc:
        raise MalformedInput(f"tensor document missing {exc}") from exc
    if doc.get("order", "grlex") != "grlex":
        raise MalformedInput(f"unsupported monomial order {doc['order']!r}")
    if not isinstance(n, int) or not isinstance(d, int) or n < 0 or d < 0 or not isinstance(coeffs, list):
        raise MalformedInput("tensor document has malformed n, d or coeffs")
    return SymmetricTensor.from_coeffs(n, d, [parse_rational(c) for c in coeffs])


def parse_weights(doc) -> list:
    if isinstance(doc, dict):
        doc = doc.get("weights")
    if not isinstance(doc, list):
        raise MalformedInput("weights must be a JSON array (or {\"weights\": [...]})")
    return [parse_rational(w) for w in doc]


@dataclass(frozen=True)
class WeightedDecomposition:
    points: PointSet
    weights: tuple

    def __post_init__(self):
        if len(self.weights) != len(self.points):
            raise DimensionMismatch(f"{len(self.weights)} weights for {len(self.points)} points")
        for i, w in enumerate(self.weights):
            if as_rational(w) == 0:
                raise ZeroWeight(f"weight {i} is zero")


def synthesize(D: WeightedDecomposition, d: int) -> SymmetricTensor:
    """Entries of ``sum_i w_i L_i^d`` for the decomposition's representatives and weights."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    n = D.points.n
    acc = [0] * comb(n + d, d)
    for rep, w in zip(D.points.representatives, D.weights):
        w = as_rational(w)
        for j, c in enumerate(monomial_values(rep, d)):
            acc[j] += w * c
    return SymmetricTensor.from_coeffs(n, d, acc)


def power_matrix(A: PointSet, d: int) -> Matrix:
    """Columns are the entry vectors of ``L_i^d`` for the set's representatives."""
    cols = [monomial_values(rep, d) for rep in A.representatives]
    N = comb(A.n + d, d)
    return Matrix(N, len(A), tuple(cols[i][j] for j in range(N) for i in range(len(A))))


def _check_shape(T: SymmetricTensor, A: PointSet):
    if T.n != A.n:
        raise DimensionMismatch(f"tensor in {T.n + 1} variables, points in P^{A.n}")


def membership(T: SymmetricTensor, A: PointSet) -> Optional[tuple]:
    """Weights ``w`` with ``T = sum w_i L_i^d``, or ``None`` when T is outside the span."""
    _check_shape(T, A)
    if len(A) == 0:
        return () if all(c == 0 for c in T.coeffs) else None
    return solve(power_matrix(A, T.d), T.coeffs)


def is_minimal(T: SymmetricTensor, A: PointSet) -> bool:
    """True iff no proper subset of ``A`` spans ``T``.

    Equivalent to: the powers are linearly independent and the (then
    unique) weights are all nonzero.
    """
    w = membership(T, A)
    if w is None:
        raise NotInSpan("the tensor is not in the span of the given powers")
    if rank(power_matrix(A, T.d)) < len(A):
        return False
    return all(x != 0 for x in w)


def catalecticant_matrix(T: SymmetricTensor, s: int) -> Matrix:
    """Contraction map from degree-s to degree-(d-s) forms.

    Entry ``(alpha, beta)`` is the tensor entry at ``alpha + beta``; for
    ``T = L^d`` it factors as ``L^alpha * L^beta`` and has rank one.
    """
    if not 1 <= s <= T.d - 1:
        raise DegreeOutOfRange(f"catalecticant degree must lie in 1..{T.d - 1}, got {s}")
    n, d = T.n, T.d
    left = monomial_basis(n, s).exponents
    right = monomial_basis(n, d - s).exponents
    rows = []
    for a in left:
        row = []
        for b in right:
            e = tuple(x + y for x, y in zip(a, b))
            row.append(T.coefficient(e))
        rows.append(row)
    return Matrix.from_rows(rows, cols=len(right))


def catalecticant_rank(T: SymmetricTensor, s: int) -> int:
    """Rank of the (s, d-s) catalecticant; a lower bound for the Waring rank."""
    return rank(catalecticant_matrix(T, s))
