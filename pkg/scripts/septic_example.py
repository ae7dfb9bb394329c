"""Reproduce the eleven-point septic example end to end and print the numbers."""

import json
from pathlib import Path

from waring_ident import certify_weighted, hilbert_profile, kruskal_criterion, kruskal_rank, parse_point_set
from waring_ident.tensor import WeightedDecomposition, catalecticant_rank, synthesize

DATA = Path(__file__).resolve().parent.parent / "data" / "example11.json"


def main():
    A = parse_point_set(json.loads(DATA.read_text()))
    print("points:", [list(p) for p in A.representatives])
    for d in (1, 2, 3):
        print(f"k{d} =", kruskal_rank(A, d).rank)
    print("Dh =", hilbert_profile(A).dh)
    for c in kruskal_criterion(A, 7):
        print(f"  partition {c.partition}: ranks {c.ranks}, bound {c.bound}, passes={c.passes}")
    T = synthesize(WeightedDecomposition(A, (1,) * len(A)), 7)
    print("T =", T.to_polynomial())
    print("catalecticant rank (s=3):", catalecticant_rank(T, 3))
    cert = certify_weighted(A, [1] * len(A), 7)
    print(f"verdict: {cert.verdict} via {cert.rule}; minimality {cert.assumptions[0]['status']}")


if __name__ == "__main__":
    main()
