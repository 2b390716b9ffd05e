"""Command line front end.

Exit codes: 0 success (or oracle agreement), 1 failed check or oracle
disagreement, 2 usage or input error, 3 enumeration budget exceeded.
Errors are written to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import combinations

from . import oracle
from .badleaf import solve_no_bad
from .connectivity import anticomponents_on
from .engine import certificate, is_skeletal, solve
from .errors import CapacityError, ContractError, DomainError, ParseError
from .io import (
    compact_ids,
    gen_hypergraph,
    load_hypergraph,
    partition_from_json,
    quasigraph_from_json,
    result_to_json,
    serialize_hypergraph,
    to_dot,
)
from .quasigraph import Quasigraph, find_quasicycle
from .sequence import build_plane_sequence

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _report_error("usage", message)
        sys.exit(EXIT_USAGE)


def _report_error(kind, message):
    sys.stderr.write(json.dumps({"error": kind, "message": str(message)}) + "\n")


def _dump(obj, path=None):
    text = json.dumps(obj, indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _unsigned(text):
    if not text.isdigit():
        raise argparse.ArgumentTypeError("seed must be an unsigned integer")
    return int(text)


def _load_json(path):
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc.msg}", exc.lineno) from None


def _load_quasigraph(H, path):
    if path is None:
        return Quasigraph.empty(H)
    return quasigraph_from_json(H, _load_json(path))


def cmd_solve(args):
    H = load_hypergraph(args.file, args.allow_parallel)
    if args.allow_switches:
        res = solve_no_bad(H, simple=args.simple_cycles)
        pi = compact_ids(res.quasigraph)
        P = res.partition
        out = pi.to_json()
        out["partition"] = P.to_lists()
        out["certificate"] = certificate(pi, P, args.simple_cycles)
        out["switches"] = [r.to_json() for r in res.switches]
        out["hypergraph"] = serialize_hypergraph(pi.host)
        seq = res.phases[-1].result.sequence
    else:
        res = solve(H, simple=args.simple_cycles)
        pi, P, seq = res.quasigraph, res.partition, res.sequence
        out = result_to_json(res, args.simple_cycles)
    if args.trace:
        _dump(seq.to_json(), args.trace)
    if args.dot:
        os.makedirs(args.dot, exist_ok=True)
        with open(os.path.join(args.dot, "input.dot"), "w") as fh:
            fh.write(to_dot(H))
        with open(os.path.join(args.dot, "result.dot"), "w") as fh:
            fh.write(to_dot(pi.host, pi, P))
    _dump(out)
    return EXIT_OK


def cmd_verify(args):
    H = load_hypergraph(args.file, args.allow_parallel)
    pi = _load_quasigraph(H, args.quasigraph)
    P = partition_from_json(H, _load_json(args.partition))
    ok = pi.is_acyclic() and oracle.skeletal_def(pi, P, args.simple_cycles)
    report = certificate(pi, P, args.simple_cycles)
    report["skeletal"] = ok
    _dump(report)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_trace(args):
    H = load_hypergraph(args.file, args.allow_parallel)
    pi = _load_quasigraph(H, args.quasigraph)
    _dump(build_plane_sequence(pi, args.simple_cycles).to_json())
    return EXIT_OK


def cmd_gen(args):
    H = gen_hypergraph(args.vertices, args.edges, args.seed, args.tri_prob)
    sys.stdout.write(serialize_hypergraph(H))
    return EXIT_OK


def _check_anticomponents(pi, simple):
    table = oracle.anticonnected_table(pi)
    bad = []
    V = list(pi.host.vertices)
    checked = 0
    for r in range(1, len(V) + 1):
        for X in combinations(V, r):
            fast = sorted(map(sorted, anticomponents_on(pi, X).classes))
            slow = [sorted(Y) for Y in oracle.anticomponents_def(pi, X, table=table)]
            checked += 1
            if fast != slow:
                bad.append({"X": list(X), "fast": fast, "oracle": slow})
    return {"checked": checked, "disagreements": bad}


def _check_quasicycles(pi, simple):
    C = pi.complement()
    fast = find_quasicycle(C, simple) is not None
    slow = oracle.quasicycle_exists_def(C, simple)
    return {"checked": 1, "fast": fast, "oracle": slow,
            "disagreements": [] if fast == slow else [{"fast": fast, "oracle": slow}]}


def _check_skeletal(pi, simple):
    P = build_plane_sequence(pi, simple).final
    fast = is_skeletal(pi, P, simple)
    slow = oracle.skeletal_def(pi, P, simple)
    return {"checked": 1, "partition": P.to_lists(), "fast": fast, "oracle": slow,
            "disagreements": [] if fast == slow else [{"fast": fast, "oracle": slow}]}


def _check_leading_set(pi, simple):
    seq = build_plane_sequence(pi, simple)
    bad, checked = [], 0
    for row in seq.rows:
        fast = sorted(seq.leading_witnesses(row.limit))
        slow = sorted(oracle.leading_set_def(seq, row.limit, simple))
        checked += 1
        if fast != slow:
            bad.append({"row": row.i, "fast": fast, "oracle": slow})
    return {"checked": checked, "disagreements": bad}


def _check_max_search(pi, simple):
    H = pi.host
    best, _ = oracle.max_search(H, simple)
    bad = []
    for s in best:
        if not (s.pi.is_acyclic() and oracle.skeletal_def(s.pi, s.final, simple)):
            bad.append({"quasigraph": s.pi.to_json()["edges"]})
    res = solve(H, simple=simple)
    return {"checked": len(best), "maximisers": len(best),
            "solve_is_maximal": any(s.pi == res.quasigraph for s in best),
            "disagreements": bad}


CHECKS = {
    "anticomponents": _check_anticomponents,
    "quasicycles": _check_quasicycles,
    "skeletal": _check_skeletal,
    "leading-set": _check_leading_set,
    "max-search": _check_max_search,
}


def cmd_oracle(args):
    H = load_hypergraph(args.file, args.allow_parallel)
    pi = _load_quasigraph(H, args.quasigraph)
    report = CHECKS[args.check](pi, args.simple_cycles)
    report["check"] = args.check
    report["agree"] = not report["disagreements"]
    _dump(report)
    return EXIT_OK if report["agree"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skeletal", description="Acyclic quasigraphs with skeletal partitions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common_flags(sp):
        sp.add_argument("--simple-cycles", action="store_true",
                        help="require cycles of length at least 3 (default: 2-cycles count)")
        sp.add_argument("--allow-parallel", action="store_true",
                        help="accept hyperedges with equal vertex sets (as produced by switches)")

    s = sub.add_parser("solve", help="construct an acyclic quasigraph and a skeletal partition")
    s.add_argument("file")
    s.add_argument("--trace", metavar="T.json", help="write the final plane sequence here")
    s.add_argument("--allow-switches", action="store_true", help="also remove bad leaves by switching")
    s.add_argument("--dot", metavar="DIR", help="write input.dot and result.dot into DIR")
    common_flags(s)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a quasigraph and partition with the brute-force oracle")
    v.add_argument("file")
    v.add_argument("--quasigraph", required=True, metavar="Q.json")
    v.add_argument("--partition", required=True, metavar="P.json")
    common_flags(v)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("trace", help="print the plane sequence of a quasigraph")
    t.add_argument("file")
    t.add_argument("--quasigraph", required=True, metavar="Q.json")
    common_flags(t)
    t.set_defaults(func=cmd_trace)

    g = sub.add_parser("gen", help="print a random instance")
    g.add_argument("--vertices", type=int, required=True)
    g.add_argument("--edges", type=int, required=True)
    g.add_argument("--seed", type=_unsigned, required=True)
    g.add_argument("--tri-prob", type=float, default=0.5)
    g.set_defaults(func=cmd_gen)

    o = sub.add_parser("oracle", help="compare a fast routine against its brute-force definition")
    o.add_argument("file")
    o.add_argument("--check", required=True, choices=sorted(CHECKS))
    o.add_argument("--quasigraph", metavar="Q.json", help="defaults to the empty quasigraph")
    common_flags(o)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        _report_error("budget", exc)
        return EXIT_BUDGET
    except (ParseError, DomainError, OSError) as exc:
        _report_error(type(exc).__name__, exc)
        return EXIT_USAGE
    except ContractError as exc:
        _report_error("contract", exc)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
