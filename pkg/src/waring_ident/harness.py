"""Randomized harness: sample point sets, certify them, re-check the structural invariants."""

from __future__ import annotations

import random
from collections import Counter

from .cayley_bacharach import cb_check, gkr_audit
from .certify import certify
from .errors import InternalConsistencyError, UnknownGenerator
from .hilbert import grassmann_intersection_dim, hilbert_profile
from .projective import PointSet, normalize

DEFAULT_SEED = 20190101
DEFAULT_BOX = 20


def trial_rng(seed: int, trial: int) -> random.Random:
    # str seeds hash through sha512, so streams are stable across runs and platforms
    return random.Random(f"{seed}:{trial}")


def _distinct(rng, count, draw):
    seen, out = set(), []
    while len(out) < count:
        raw = draw()
        if not any(raw):
            continue
        P = normalize(raw)
        if P in seen:
            continue
        seen.add(P)
        out.append(raw)
    return out


def _box(rng, box, n=2):
    return [rng.randint(-box, box) for _ in range(n + 1)]


def _curve_points(rng, count, box, exponent):
    # positive parameters: on y^3 = x^2 z three points are collinear iff their t sum to 0
    hi = max(2 * box + 1, count)
    ts = rng.sample(range(1, hi + 1), count)
    return [(1, t, t ** exponent) for t in ts]


def _collinear_triple(rng, count, box):
    pts = _distinct(rng, count, lambda: _box(rng, box))
    seen = {normalize(p) for p in pts[:2] + pts[3:]}
    while True:
        a, b = rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([-3, -2, -1, 1, 2, 3])
        c = [a * x + b * y for x, y in zip(pts[0], pts[1])]
        if any(c) and normalize(c) not in seen:
            pts[2] = c
            return pts


GENERATORS = ("uniform-box", "on-conic", "on-cubic", "with-collinear-triple")


def sample_points(generator: str, rng: random.Random, count: int, box: int = DEFAULT_BOX) -> PointSet:
    """Draw ``count`` distinct integer points of P^2 from a named generator."""
    if generator == "uniform-box":
        rows = _distinct(rng, count, lambda: _box(rng, box))
    elif generator == "on-conic":
        rows = _curve_points(rng, count, box, 2)
    elif generator == "on-cubic":
        rows = _curve_points(rng, count, box, 3)
    elif generator == "with-collinear-triple":
        if count < 3:
            raise ValueError("a collinear triple needs at least three points")
        rows = _collinear_triple(rng, count, box)
    else:
        raise UnknownGenerator(f"unknown generator {generator!r}; choose from {', '.join(GENERATORS)}")
    return PointSet.from_coords(rows)


def check_invariants(Z: PointSet, d: int, rng: random.Random) -> list:
    """Structural properties every finite set must satisfy; returns violations as dicts."""
    out = []
    l = len(Z)
    d_max = max(l - 1, d)
    prof = hilbert_profile(Z, d_max)

    def bad(name, detail):
        out.append({"invariant": name, "detail": detail})

    # monotonicity under inclusion
    if l > 1:
        keep = sorted(rng.sample(range(l), rng.randint(1, l - 1)))
        sub = hilbert_profile(Z.subset(keep), d_max)
        if any(a > b for a, b in zip(sub.h, prof.h)) or any(a > b for a, b in zip(sub.dh, prof.dh)):
            bad("inclusion", {"subset": keep, "sub_dh": list(sub.dh), "dh": list(prof.dh)})

    # decay of the first difference
    dh = prof.dh
    for j in range(1, len(dh) - 1):
        if dh[j] <= j and dh[j] < dh[j + 1]:
            bad("nonincreasing", {"j": j, "dh": list(dh)})
        if dh[j] == 0 and any(dh[j:]):
            bad("zero-propagation", {"j": j, "dh": list(dh)})
    if sum(dh) != l:
        bad("stabilization", {"dh": list(dh)})

    # Grassmann formula against a direct span intersection
    if l > 1:
        idx = list(range(l))
        rng.shuffle(idx)
        cut = rng.randint(1, l - 1)
        A, B = Z.subset(sorted(idx[:cut])), Z.subset(sorted(idx[cut:]))
        deg = rng.randint(1, max(1, d))
        try:
            grassmann_intersection_dim(A, B, deg)
        except InternalConsistencyError as exc:
            bad("grassmann", {"A": sorted(idx[:cut]), "degree": deg, "message": str(exc)})

    # CB down-closure and the GKR inequalities for every CB(i) that holds
    holds = [cb_check(Z, i).holds for i in range(min(l, d + 1))]
    for i in range(1, len(holds)):
        if holds[i] and not holds[i - 1]:
            bad("cb-down-closure", {"degree": i, "holds": holds})
    for i, h in enumerate(holds):
        if h and not gkr_audit(Z, i):
            bad("gkr", {"degree": i, "dh": list(hilbert_profile(Z, i + 1).dh)})
    return out


def harness(seed: int = DEFAULT_SEED, trials: int = 100, generator: str = "uniform-box",
            count: int = 11, d: int = 7, box: int = DEFAULT_BOX, invariants: bool = True) -> dict:
    """Certify ``trials`` random point sets and tally which rule fired.

    Fully determined by its arguments. Violations (including internal
    consistency failures raised by the certifier) are collected with the
    offending points so the run can be replayed.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if generator not in GENERATORS:
        raise UnknownGenerator(f"unknown generator {generator!r}; choose from {', '.join(GENERATORS)}")
    rules = Counter()
    records, violations = [], []
    for t in range(trials):
        rng = trial_rng(seed, t)
        Z = sample_points(generator, rng, count, box)
        try:
            cert = certify(Z, d)
        except InternalConsistencyError as exc:
            violations.append({"trial": t, "invariant": "certificate", "detail": str(exc),
                               "points": Z.to_json()["points"]})
            continue
        rules[cert.rule or cert.verdict] += 1
        rec = {"trial": t, "verdict": cert.verdict, "rule": cert.rule,
               "kruskal_ranks": cert.evidence.get("kruskal_ranks", {})}
        if cert.rule is None:
            rec["diagnostics"] = cert.evidence["diagnostics"]
        records.append(rec)
        if invariants:
            for v in check_invariants(Z, d, rng):
                v.update(trial=t, points=Z.to_json()["points"])
                violations.append(v)
    return {
        "seed": seed, "trials": trials, "generator": generator, "points": count,
        "degree": d, "box": box,
        "rule_counts": {k: rules[k] for k in sorted(rules)},
        "violations": violations,
        "records": records,
    }
