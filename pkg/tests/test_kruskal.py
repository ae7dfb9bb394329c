import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import eval_rows, frank, kruskal_by_circuits
from strategies import point_sets, random_point_set
from waring_ident import PointSet
from waring_ident.kruskal import kruskal_criterion, kruskal_rank, max_kruskal_rank, partitions3


def test_plane_example_in_p3():
    # four points on the plane x3 = 0 with no three aligned, plus one off it
    A = PointSet.from_coords([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 0), (0, 0, 0, 1)])
    rep = kruskal_rank(A, 1)
    assert rep.rank == 3
    assert rep.witness == (0, 1, 2, 3)


def test_septic_ranks(septic_points):
    assert kruskal_rank(septic_points, 1).rank == 3
    # six of the points lie on a conic
    conic = kruskal_rank(septic_points, 2)
    assert conic.rank == 5 == kruskal_by_circuits([P.coords for P in septic_points], 2)
    assert frank(eval_rows([septic_points[i].coords for i in conic.witness], 2)) == 5
    rep = kruskal_rank(septic_points, 3)
    # 10 is the ceiling min(11, dim of cubics), so no witness is reported
    assert rep.rank == 10 and rep.witness is None


def test_collinear_triple():
    rep = kruskal_rank(PointSet.from_coords([(1, 0, 0), (1, 1, 0), (1, 2, 0)]), 1)
    assert (rep.rank, rep.witness) == (2, (0, 1, 2))
    assert rep.to_json() == {"d": 1, "k": 2, "witness": [0, 1, 2]}


def test_rank_at_ceiling_has_no_witness(six_general):
    rep = kruskal_rank(six_general, 2)
    assert rep.rank == max_kruskal_rank(six_general, 2) == 6
    assert rep.witness is None


def test_partitions3():
    assert partitions3(7) == [(5, 1, 1), (4, 2, 1), (3, 3, 1), (3, 2, 2)]
    assert partitions3(3) == [(1, 1, 1)]
    assert partitions3(2) == []


def test_septic_criterion_all_fail(septic_points):
    checks = kruskal_criterion(septic_points, 7)
    assert not any(c.passes for c in checks)
    widest = checks[0]
    assert widest.partition == (3, 3, 1)
    assert widest.ranks == (10, 10, 3)
    assert widest.bound == Fraction(21, 2)
    assert widest.to_json()["bound"] == "21/2"
    assert [c.bound for c in checks] == sorted((c.bound for c in checks), reverse=True)


def test_five_general_points_degree_five():
    A = PointSet.from_coords([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)])
    checks = {c.partition: c for c in kruskal_criterion(A, 5)}
    c = checks[(2, 2, 1)]
    assert c.ranks == (5, 5, 3) and c.passes and 2 * 5 <= 5 + 5 + 3 - 2
    assert kruskal_criterion(A, 4)[0].ranks == (5, 3, 3)
    assert kruskal_criterion(A, 4)[0].bound == Fraction(9, 2)


@pytest.mark.parametrize("d", [3, 4, 8])
def test_single_point_never_passes(d):
    checks = kruskal_criterion(PointSet.from_coords([(2, 3, 5)]), d)
    assert checks and all(c.ranks == (1, 1, 1) and c.bound == Fraction(1, 2) and not c.passes for c in checks)


def test_degree_below_three_is_inapplicable(six_general):
    assert kruskal_criterion(six_general, 2) == []


@settings(max_examples=80, deadline=None)
@given(point_sets(max_points=8), st.integers(1, 3))
def test_matches_circuit_oracle(A, d):
    rep = kruskal_rank(A, d)
    assert rep.rank == kruskal_by_circuits([P.coords for P in A], d)
    assert 1 <= rep.rank <= max_kruskal_rank(A, d)
    if rep.witness is not None:
        rows = eval_rows([P.coords for P in A], d)
        assert len(rep.witness) == rep.rank + 1
        assert frank([rows[i] for i in rep.witness]) <= rep.rank
        # lexicographically first among the dependent subsets of that size
        for S in combinations(range(len(A)), rep.rank + 1):
            if S == rep.witness:
                break
            assert frank([rows[i] for i in S]) == rep.rank + 1


@settings(max_examples=60, deadline=None)
@given(point_sets(max_points=9), st.integers(1, 3), st.randoms(use_true_random=False))
def test_subset_inequality(A, d, rnd):
    k = kruskal_rank(A, d).rank
    keep = sorted(rnd.sample(range(len(A)), rnd.randint(1, len(A))))
    sub = A.subset(keep)
    assert kruskal_rank(sub, d).rank >= min(len(sub), k)


def test_deterministic():
    rng = random.Random(3)
    for _ in range(30):
        A = random_point_set(rng, 10)
        d = rng.randint(1, 3)
        assert kruskal_rank(A, d) == kruskal_rank(A, d)


def test_rejects_degree_zero(six_general):
    with pytest.raises(ValueError):
        kruskal_rank(six_general, 0)
