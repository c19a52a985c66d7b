"""Command-line entry point: ``ngverify {verify,params,witness,hunt}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructions import HypothesisNotMet, ProofViolation, thm21_witness, thm22_witness
from .graph import INFINITE, complement, diameter, max_degree, min_degree, vertex_connectivity
from .graph6 import Graph6Error, from_graph6
from .verify import (
    DEFAULT_J,
    DEFAULT_K,
    CorpusSpec,
    Summary,
    hunt,
    parameter_table,
    verify_corpus,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def int_list(text: str) -> tuple[int, ...]:
    """``"3"``, ``"1,2,3"`` or ``"1-6"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty integer list {text!r}")
    return tuple(out)


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def cmd_verify(args) -> int:
    if args.file is None and args.n is None:
        print("verify: one of --n or --file is required", file=sys.stderr)
        return EXIT_USAGE
    spec = CorpusSpec(orders=args.n or (), iso=not args.labeled, path=args.file)
    summary = Summary()
    out = open(args.out, "w", encoding="utf-8") if args.out else None
    try:
        for rep in verify_corpus(spec, args.k, args.j, args.jobs, args.gamma_variant, summary):
            if out:
                out.write(json.dumps(rep.to_json()) + "\n")
    except OSError as exc:
        print(f"verify: cannot read corpus: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out:
            out.close()
    if args.out:
        Path(args.out).with_suffix(".summary.csv").write_text(summary.to_csv(), encoding="utf-8")
    for msg in summary.malformed:
        print(f"malformed: {msg}", file=sys.stderr)
    print(summary.table())
    return summary.exit_code


def _load_g6(text: str):
    try:
        return from_graph6(text)
    except Graph6Error as exc:
        print(f"invalid graph6: {exc}", file=sys.stderr)
        return None


def cmd_params(args) -> int:
    g = _load_g6(args.g6)
    if g is None:
        return EXIT_USAGE
    diam = diameter(g)
    out = {
        "graph6": args.g6,
        "n": g.n,
        "delta": min_degree(g),
        "Delta": max_degree(g),
        "kappa": vertex_connectivity(g),
        "diam": "INFINITE" if diam == INFINITE else int(diam),
    }
    out.update({k: r.to_json() for k, r in parameter_table(g, args.k, args.j).items()})
    if args.complement:
        out["complement"] = {k: r.to_json()
                             for k, r in parameter_table(complement(g), args.k, args.j).items()}
    _print_json(out)
    return EXIT_OK


def cmd_witness(args) -> int:
    g = _load_g6(args.g6)
    if g is None:
        return EXIT_USAGE
    try:
        if args.theorem == "2.1":
            cert = thm21_witness(g, args.k, args.j)
        else:
            cert = thm22_witness(g, args.k)
    except HypothesisNotMet as exc:
        _print_json({"error": "hypothesis-not-met", "message": str(exc)})
        return EXIT_USAGE
    except ProofViolation as exc:
        _print_json({"error": "proof-violation", "message": str(exc), "details": exc.details})
        return EXIT_FAIL
    _print_json(cert.to_json())
    return EXIT_OK


def cmd_hunt(args) -> int:
    try:
        result = hunt(args.n, args.trials, args.seed, args.target)
    except ValueError as exc:
        print(f"hunt: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _print_json(result)
    if result["found"] and any("proof_violation" in c for c in result["certificates"].values()):
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ngverify", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="sweep a corpus and check every bound")
    v.add_argument("--n", type=int_list, help="order(s): 7, 1-6 or 4,5")
    mode = v.add_mutually_exclusive_group()
    mode.add_argument("--iso", action="store_true", help="one graph per isomorphism class (default)")
    mode.add_argument("--labeled", action="store_true", help="all labelled graphs")
    v.add_argument("--file", help="graph6 corpus file")
    v.add_argument("--k", type=int_list, default=DEFAULT_K)
    v.add_argument("--j", type=int_list, default=DEFAULT_J)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out", help="JSON-lines report path; the CSV summary goes next to it")
    v.add_argument("--gamma-variant", choices=("literal", "repaired"), default="literal")
    v.set_defaults(func=cmd_verify)

    pa = sub.add_parser("params", help="parameter table of one graph as JSON")
    pa.add_argument("--g6", required=True)
    pa.add_argument("--k", type=int_list, default=DEFAULT_K)
    pa.add_argument("--j", type=int_list, default=DEFAULT_J)
    pa.add_argument("--complement", action="store_true")
    pa.set_defaults(func=cmd_params)

    w = sub.add_parser("witness", help="run a constructive bound and print the certificate")
    w.add_argument("--g6", required=True)
    w.add_argument("--theorem", choices=("2.1", "2.2"), required=True)
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--j", type=int, default=0)
    w.set_defaults(func=cmd_witness)

    h = sub.add_parser("hunt", help="random search for graphs meeting a hypothesis")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--trials", type=int, required=True)
    h.add_argument("--seed", type=int, required=True)
    h.add_argument("--target", default="T2.1", help="T2.1[:k[,j]] or T2.2[:k]")
    h.set_defaults(func=cmd_hunt)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
