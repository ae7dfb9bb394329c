"""Rule frequencies for each generator over a seeded batch of random point sets."""

import argparse

from waring_ident.harness import DEFAULT_SEED, GENERATORS, harness

SETTINGS = {"uniform-box": (11, 7), "on-conic": (11, 7), "on-cubic": (13, 9), "with-collinear-triple": (11, 7)}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--trials", type=int, default=20)
    args = ap.parse_args()
    for g in GENERATORS:
        count, d = SETTINGS[g]
        rep = harness(args.seed, args.trials, g, count, d)
        print(f"{g:22s} l={count} d={d}: {rep['rule_counts']}  violations={len(rep['violations'])}")


if __name__ == "__main__":
    main()
