"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or mismatch under --strict),
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Optional, Sequence

from .cyclic import build_cyclic_graph
from .errors import NotAssociative, SemigroupError, SizeCapExceeded
from .graph import connected_components, default_cap, to_dot, to_json
from .invariants import invariant_report
from .semigroup import exponent, idempotents, pi_set
from .specs import build_spec
from .verify import FAMILIES, family, run

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def cmd_build(args) -> int:
    s = build_spec(args.spec)
    comps = sorted((len(c) for c in connected_components(build_cyclic_graph(s))), reverse=True)
    summary = {
        "n": s.n,
        "idempotents": [s.labels[f] for f in sorted(idempotents(s))],
        "pi": sorted(pi_set(s)),
        "exponent": exponent(s),
        "component_sizes": comps,
    }
    with _output(args.out) as out:
        if args.format == "json":
            out.write(json.dumps(summary, sort_keys=True) + "\n")
        else:
            out.write(f"n = {summary['n']}\n")
            out.write(f"E(S) = {{{', '.join(summary['idempotents'])}}} ({len(summary['idempotents'])})\n")
            out.write(f"pi(S) = {{{', '.join(map(str, summary['pi']))}}}\n")
            out.write(f"exponent = {summary['exponent']}\n")
            out.write(f"component sizes = {' '.join(map(str, comps))}\n")
    return EXIT_OK


def cmd_graph(args) -> int:
    s = build_spec(args.spec)
    g = build_cyclic_graph(s)
    with _output(args.out) as out:
        out.write(to_dot(g, s.labels) if args.format == "dot" else to_json(g, s.labels) + "\n")
    return EXIT_OK


def cmd_invariants(args) -> int:
    s = build_spec(args.spec)
    report = invariant_report(s, cap=args.cap)
    with _output(args.out) as out:
        out.write(report.to_json() + "\n")
    if args.strict and report.mismatches():
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_order < 1 or args.count < 0:
        raise SemigroupError("--max-order must be >= 1 and --count >= 0")
    instances = family(args.family, max_order=args.max_order, seed=args.seed, count=args.count)
    passed = failed = diagnostics = 0
    with _output(args.out) as out:
        for outcome in run(instances, cap=args.cap, jobs=args.jobs):
            out.write(outcome.to_json() + "\n")
            if outcome.passed:
                passed += 1
            elif outcome.diagnostic:
                diagnostics += 1
            else:
                failed += 1
        out.write(json.dumps({"summary": {"passed": passed, "failed": failed, "diagnostics": diagnostics}},
                             sort_keys=True) + "\n")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclicgraph", description="Cyclic graphs of finite semigroups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--cap", type=int, default=None,
                        help=f"largest component the exact solvers accept (default {default_cap()}, env MONOGENIC_CAP)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="summarise a semigroup")
    p.add_argument("spec")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("graph", parents=[common], help="emit the cyclic graph")
    p.add_argument("spec")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("invariants", parents=[common], help="formula vs oracle invariant report (JSON)")
    p.add_argument("spec")
    p.add_argument("--strict", action="store_true", help="exit 1 when a formula disagrees with its oracle")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", parents=[common], help="check the theorems over a family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--max-order", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=25)
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is unaffected)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAssociative as exc:
        x, y, z = exc.witness
        print(f"error: not associative, witness triple {x} {y} {z}", file=sys.stderr)
        return EXIT_INPUT
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SemigroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
