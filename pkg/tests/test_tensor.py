import json
import random
import re
import warnings
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import eval_rows, frank, mono_value, monomials
from strategies import random_point_set
from waring_ident import PointSet
from waring_ident.errors import DegreeOutOfRange, DimensionMismatch, NotInSpan, ZeroWeight
from waring_ident.tensor import (
    SymmetricTensor,
    WeightedDecomposition,
    catalecticant_matrix,
    catalecticant_rank,
    is_minimal,
    membership,
    multinomial,
    parse_tensor,
    synthesize,
)

from conftest import SEPTIC_POINTS

# the printed expansion of the sum of the eleven 7th powers, verbatim
PRINTED_SEPTIC = r"""
2191x^7-849x^6y+249x^5y^2-51x^4y^3+45x^3y^4+501x^2y^5+69xy^6+4500y^7+3181x^6z -918x^5yz
+430x^4y^2z-204x^3y^3z+346x^2y^4z-1128xy^5z+2390y^6z+3631x^5z^2-1390x^4yz^2+274x^3y^2z^2 +344x^2y3z^2
-1034xy^4z^2+4390y^5z^2+5731x^4z^3-1668x^3yz^3+1372x^2y^2z^3 -1686xy^3z^3 +5636y^4z^3+6115x^3z^4
-1714x^2yz^4-1346xy^2z^4 +7234y^3z^4+11491x^2z^5-5208xyz^5 +11480y^2z^5+7531xz^6+8860yz^6+37272z^7
"""


def parse_printed(text):
    """Terms ``c x^a y^b z^c``; a missing caret ("y3") is read as an exponent."""
    out = {}
    text = re.sub(r"\s+", "", text)
    for m in re.finditer(r"([+-]?\d+)((?:[xyz](?:\^?\d+)?)+)", text):
        e = [0, 0, 0]
        for var, k in re.findall(r"([xyz])\^?(\d*)", m.group(2)):
            e["xyz".index(var)] += int(k) if k else 1
        out[tuple(e)] = int(m.group(1))
    return out


def septic_tensor():
    A = PointSet.from_coords(SEPTIC_POINTS)
    return A, synthesize(WeightedDecomposition(A, (1,) * 11), 7)


def test_single_power():
    T = synthesize(WeightedDecomposition(PointSet.from_coords([(1, 0, 0)]), (1,)), 7)
    assert T.coeffs == (1,) + (0,) * 35


def test_septic_printed_coefficients():
    _, T = septic_tensor()
    for e, c in {(7, 0, 0): 2191, (6, 1, 0): -849, (5, 2, 0): 249, (0, 7, 0): 4500, (0, 0, 7): 37272}.items():
        assert T.coefficient(e) == c
    # independent expansion of the representatives
    for e in monomials(2, 7):
        assert T.coefficient(e) == sum(mono_value(p, e) for p in SEPTIC_POINTS)


def test_septic_full_printed_polynomial():
    _, T = septic_tensor()
    printed = parse_printed(PRINTED_SEPTIC)
    assert len(printed) == 36
    mismatches = {e: (c, T.coefficient(e)) for e, c in printed.items() if T.coefficient(e) != c}
    if mismatches:
        warnings.warn(f"printed coefficients differing from the expansion: {mismatches}")
    assert printed[(2, 3, 2)] == 344


def test_literal_polynomial_coefficients():
    _, T = septic_tensor()
    lit = T.polynomial_coefficients()
    idx = {e: i for i, e in enumerate(monomials(2, 7))}
    assert lit[idx[(6, 1, 0)]] == -849 * 7
    assert all(lit[idx[e]] == multinomial(e) * T.coefficient(e) for e in idx)


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(1, 5))
def test_linearity_and_symmetry(rnd, d):
    A = random_point_set(rnd, 6)
    w = [Fraction(rnd.choice([-3, -2, -1, 1, 2, 5]), rnd.randint(1, 4)) for _ in A]
    T = synthesize(WeightedDecomposition(A, tuple(w)), d)
    assert synthesize(WeightedDecomposition(A, tuple(2 * x for x in w)), d) == T.scale(2)
    perm = list(range(len(A)))
    rnd.shuffle(perm)
    P = PointSet.from_coords([A.representatives[i] for i in perm])
    assert synthesize(WeightedDecomposition(P, tuple(w[i] for i in perm)), d) == T


def test_membership_round_trip():
    rng = random.Random(2)
    checked = 0
    for _ in range(60):
        A = random_point_set(rng, 8)
        d = rng.randint(2, 5)
        w = tuple(Fraction(rng.choice([-4, -1, 1, 3]), rng.randint(1, 3)) for _ in A)
        T = synthesize(WeightedDecomposition(A, w), d)
        got = membership(T, A)
        assert got is not None
        if frank(eval_rows(A.representatives, d)) == len(A):
            assert got == w
            assert is_minimal(T, A)
            checked += 1
    assert checked > 20


def test_membership_examples():
    A, T = septic_tensor()
    assert membership(T, A) == (1,) * 11
    assert is_minimal(T, A)
    x7 = SymmetricTensor.from_coeffs(2, 7, [1] + [0] * 35)
    assert membership(x7, PointSet.from_coords([(0, 1, 0)])) is None
    for i in range(11):
        assert membership(T, A.without(i)) is None


def test_is_minimal_examples():
    x7 = SymmetricTensor.from_coeffs(2, 7, [1] + [0] * 35)
    assert not is_minimal(x7, PointSet.from_coords([(1, 0, 0), (0, 1, 0)]))
    dependent = PointSet.from_coords([(1, 0, 0), (1, 1, 0), (1, 2, 0)])
    T1 = synthesize(WeightedDecomposition(dependent, (1, 1, 1)), 1)
    assert not is_minimal(T1, dependent)
    with pytest.raises(NotInSpan):
        is_minimal(x7, PointSet.from_coords([(0, 1, 0)]))


def test_shape_checks():
    x7 = SymmetricTensor.from_coeffs(2, 7, [1] + [0] * 35)
    with pytest.raises(DimensionMismatch):
        membership(x7, PointSet.from_coords([(1, 0, 0, 0)]))
    with pytest.raises(DimensionMismatch):
        SymmetricTensor.from_coeffs(2, 2, [1, 2])
    with pytest.raises(ZeroWeight):
        WeightedDecomposition(PointSet.from_coords([(1, 0, 0)]), (0,))


def test_catalecticant_examples():
    _, T = septic_tensor()
    M = catalecticant_matrix(T, 3)
    assert (M.rows, M.cols) == (10, 15)
    assert catalecticant_rank(T, 3) == 10 == frank(M.tolist())
    x5y5 = SymmetricTensor.from_coeffs(1, 5, [1, 0, 0, 0, 0, 1])
    assert catalecticant_rank(x5y5, 2) == 2
    for s in (0, 5):
        with pytest.raises(DegreeOutOfRange):
            catalecticant_rank(x5y5, s)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3).filter(any), st.integers(2, 6), st.data())
def test_catalecticant_of_power_is_one(L, d, data):
    T = synthesize(WeightedDecomposition(PointSet.from_coords([L]), (3,)), d)
    assert catalecticant_rank(T, data.draw(st.integers(1, d - 1))) == 1


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(2, 6), st.data())
def test_catalecticant_lower_bound(rnd, d, data):
    A = random_point_set(rnd, 8)
    T = synthesize(WeightedDecomposition(A, tuple(rnd.choice([-2, 1, 3]) for _ in A)), d)
    s = data.draw(st.integers(1, d - 1))
    assert catalecticant_rank(T, s) <= min(comb(2 + s, s), comb(2 + d - s, d - s), len(A))


def test_json_round_trip():
    _, T = septic_tensor()
    doc = T.to_json()
    assert doc["order"] == "grlex" and doc["coeffs"][:2] == ["2191", "-849"]
    assert parse_tensor(json.loads(json.dumps(doc))) == T
    half = T.scale(Fraction(1, 2))
    assert parse_tensor(half.to_json()) == half
