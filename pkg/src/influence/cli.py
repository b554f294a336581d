"""Command-line front end.

Exit codes: 0 success / satisfied / valid, 1 not satisfied / invalid /
proof rejected, 2 bad input, 3 enumeration larger than ``--max-networks``.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .core import InfluenceError, check_agent_id, format_set, sorted_agents
from .decider import DEFAULT_MAX_NETWORKS, SizeGuardError, decide_validity
from .diffusion import diffusion_trace, satisfies
from .io import dumps, load_network, load_script, load_sociogram, network_to_json
from .proofkit import DerivationError, verify_derivation
from .syntax import parse_formula, pretty

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_TOO_BIG = 0, 1, 2, 3


def parse_seed(text: str) -> frozenset:
    """``"p,q"``, ``"{p,q}"``, ``""`` and ``"{}"`` are all accepted."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    names = [t.strip() for t in text.split(",")] if text.strip() else []
    return frozenset(check_agent_id(n) for n in names)


def cmd_diffuse(args) -> int:
    n = load_network(args.network)
    trace = diffusion_trace(n, parse_seed(args.seed))
    if args.json:
        print(dumps({"trace": [sorted_agents(s) for s in trace],
                     "closure": sorted_agents(trace[-1])}))
    else:
        for k, s in enumerate(trace):
            print(f"A^{k} = {format_set(s)}")
        print(f"A* = {format_set(trace[-1])}")
    return EXIT_OK


def cmd_check(args) -> int:
    n = load_network(args.network)
    f = parse_formula(args.formula, n.agents)
    ok = satisfies(n, f)
    if args.json:
        print(dumps({"formula": pretty(f), "satisfied": ok}))
    else:
        print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_NO


def cmd_decide(args) -> int:
    s = load_sociogram(args.sociogram)
    f = parse_formula(args.formula, s.agents)
    verdict = decide_validity(s, f, max_networks=args.max_networks, workers=args.workers)
    if args.json:
        if verdict.valid:
            print(dumps({"verdict": "VALID"}))
        else:
            print(dumps(network_to_json(verdict.witness)))
    else:
        print(verdict)
        if not verdict.valid:
            print("witness thresholds:")
            for a in sorted_agents(verdict.witness.agents):
                print(f"  {a} = {verdict.witness.threshold(a)}")
    return EXIT_OK if verdict.valid else EXIT_NO


def cmd_verify(args) -> int:
    script = load_script(args.proof)
    try:
        count = verify_derivation(script)
    except DerivationError as exc:
        if args.json:
            print(dumps({"ok": False, "line": exc.line, "reason": exc.reason}))
        else:
            print(f"FAIL at line {exc.line}: {exc.reason}")
        return EXIT_NO
    if args.json:
        print(dumps({"ok": True, "lines": count}))
    else:
        print(f"OK ({count} lines)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted both before and after the verb.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--max-networks", type=int, metavar="N", default=argparse.SUPPRESS,
                        help=f"size guard for 'decide' (default {DEFAULT_MAX_NETWORKS})")

    parser = argparse.ArgumentParser(
        prog="influence", parents=[common],
        description="Threshold diffusion, influence formulas and the Lighthouse proof system.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diffuse", parents=[common], help="trace diffusion from a seed set")
    p.add_argument("network", help="network JSON file")
    p.add_argument("seed", help='seed agents, e.g. "p,q", "{p,q}" or "" for none')
    p.set_defaults(func=cmd_diffuse)

    p = sub.add_parser("check", parents=[common], help="evaluate a formula in a network")
    p.add_argument("network")
    p.add_argument("formula")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decide", parents=[common],
                       help="decide validity of a formula over a sociogram")
    p.add_argument("sociogram")
    p.add_argument("formula")
    p.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", parents=[common], help="check a derivation script")
    p.add_argument("proof")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.max_networks = getattr(args, "max_networks", DEFAULT_MAX_NETWORKS)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}; raise --max-networks to proceed", file=sys.stderr)
        return EXIT_TOO_BIG
    except (InfluenceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
