"""Points (1, t, t^3) on the cuspidal cubic: certify d = 7 + 2q for several q and lengths.

At the critical length 3q + 10 the cubic-family rule fires; below it
Kruskal's criterion already applies.
"""

import argparse
import time

from waring_ident import PointSet, certify, hilbert_profile


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qmax", type=int, default=2)
    args = ap.parse_args()
    for q in range(-1, args.qmax + 1):
        d = 7 + 2 * q
        for r in (3 * q + 8, 3 * q + 9, 3 * q + 10):
            A = PointSet.from_coords([(1, t, t ** 3) for t in range(1, r + 1)])
            t0 = time.perf_counter()
            cert = certify(A, d)
            dt = time.perf_counter() - t0
            dh = hilbert_profile(A, q + 5).dh
            print(f"q={q:2d} d={d:2d} r={r:2d} Dh={dh} -> {cert.verdict:12s} {cert.rule or '-':14s} {dt:6.2f}s")


if __name__ == "__main__":
    main()
