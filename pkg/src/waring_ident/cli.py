"""Command-line front end. Every command writes exactly one JSON document.

Exit status: 0 on success (an INCONCLUSIVE certificate is a success), 1 on
input errors, 2 on usage errors, 3 when the harness finds an invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .cayley_bacharach import cb_check
from .certify import certify, certify_weighted
from .errors import MalformedInput, UnreadableFile, WaringError
from .exact_linalg import rank
from .harness import DEFAULT_BOX, DEFAULT_SEED, GENERATORS, harness
from .hilbert import hilbert_profile
from .kruskal import kruskal_rank
from .projective import parse_point_set
from .tensor import (
    WeightedDecomposition,
    format_rational,
    is_minimal,
    membership,
    parse_tensor,
    parse_weights,
    power_matrix,
    synthesize,
)

OUT_DIR_ENV = "WARING_IDENT_OUT_DIR"


@dataclass
class RunConfig:
    command: str
    input_path: Optional[str] = None
    degree: Optional[int] = None
    dmax: Optional[int] = None
    weights_path: Optional[str] = None
    tensor_path: Optional[str] = None
    seed: int = DEFAULT_SEED
    trials: int = 100
    generator: str = "uniform-box"
    count: int = 11
    box: int = DEFAULT_BOX
    output_path: Optional[str] = None


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UnreadableFile(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc})") from exc


def _need(value, flag):
    if value is None:
        raise MalformedInput(f"{flag} is required for this command")
    return value


def execute(cfg: RunConfig) -> tuple:
    """Run one command; returns ``(exit_status, document)``."""
    if cfg.command == "harness":
        report = harness(cfg.seed, cfg.trials, cfg.generator, cfg.count,
                         _need(cfg.degree, "--degree"), cfg.box)
        return (3 if report["violations"] else 0), report

    if cfg.command == "verify":
        T = parse_tensor(_load(_need(cfg.tensor_path, "--tensor")))
        A = parse_point_set(_load(_need(cfg.input_path, "--points")))
        w = membership(T, A)
        doc = {"in_span": w is not None,
               "weights": [format_rational(x) for x in w] if w is not None else None,
               "independent": rank(power_matrix(A, T.d)) == len(A),
               "minimal": is_minimal(T, A) if w is not None else None}
        return 0, doc

    A = parse_point_set(_load(_need(cfg.input_path, "points file")))
    if cfg.command == "hilbert":
        return 0, hilbert_profile(A, cfg.dmax).to_json()
    d = _need(cfg.degree, "--degree")
    if cfg.command == "kruskal-rank":
        return 0, kruskal_rank(A, d).to_json()
    if cfg.command == "cb-check":
        return 0, cb_check(A, d).to_json()
    weights = parse_weights(_load(cfg.weights_path)) if cfg.weights_path else None
    if cfg.command == "certify":
        cert = certify_weighted(A, weights, d) if weights is not None else certify(A, d)
        return 0, cert.to_json()
    if cfg.command == "synthesize":
        weights = weights if weights is not None else [1] * len(A)
        return 0, synthesize(WeightedDecomposition(A, tuple(weights)), d).to_json()
    raise MalformedInput(f"unknown command {cfg.command!r}")


def _summary(cfg: RunConfig, status: int, doc: dict) -> str:
    if "error" in doc:
        return f"{cfg.command}: error {doc['error']['code']}: {doc['error']['message']}"
    if cfg.command == "certify":
        return f"certify: {doc['verdict']} ({doc['rule'] or 'no rule applies'})"
    if cfg.command == "harness":
        return (f"harness: seed={doc['seed']} trials={doc['trials']} rules={doc['rule_counts']} "
                f"violations={len(doc['violations'])}")
    return f"{cfg.command}: ok"


def run(cfg: RunConfig) -> int:
    try:
        status, doc = execute(cfg)
    except WaringError as exc:
        status, doc = 1, {"error": {"code": exc.code, "message": str(exc)}}
    text = json.dumps(doc, indent=2) + "\n"
    out = cfg.output_path
    if out is None and os.environ.get(OUT_DIR_ENV):
        out = str(Path(os.environ[OUT_DIR_ENV]) / f"{cfg.command}.json")
    if out is not None:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
    sys.stdout.write(text)
    print(_summary(cfg, status, doc), file=sys.stderr)
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", dest="output_path", help="also write the JSON document here")

    p = argparse.ArgumentParser(prog="waring-ident", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hilbert", parents=[common], help="Hilbert function profile of a point set")
    h.add_argument("input_path", metavar="POINTS")
    h.add_argument("--dmax", type=int, help="last degree (default: number of points - 1)")

    for name, text in (("kruskal-rank", "d-th Kruskal rank"), ("cb-check", "Cayley-Bacharach CB(d)")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("input_path", metavar="POINTS")
        s.add_argument("--degree", "-d", type=int, required=True)

    for name, text in (("certify", "identifiability certificate"),
                       ("synthesize", "tensor of a weighted decomposition")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("input_path", metavar="POINTS")
        s.add_argument("--degree", "-d", type=int, required=True)
        s.add_argument("--weights", dest="weights_path", help="JSON array of nonzero rationals")

    v = sub.add_parser("verify", parents=[common], help="span membership and minimality")
    v.add_argument("--tensor", dest="tensor_path", required=True)
    v.add_argument("--points", dest="input_path", required=True)

    r = sub.add_parser("harness", parents=[common], help="randomized rule coverage and invariants")
    r.add_argument("--seed", type=int, default=DEFAULT_SEED)
    r.add_argument("--trials", type=int, default=100)
    r.add_argument("--generator", default="uniform-box", help=", ".join(GENERATORS))
    r.add_argument("--points", dest="count", type=int, default=11)
    r.add_argument("--degree", "-d", type=int, default=7)
    r.add_argument("--box", type=int, default=DEFAULT_BOX)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if v is not None or k == "output_path"})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
