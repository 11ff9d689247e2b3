"""Command-line entry point.  Every command prints one canonical JSON
document (sorted keys) on stdout.  Exit status: 0 success, 1 domain error,
2 usage error."""

from __future__ import annotations

import argparse
import json
import sys

from .coords import AB_NAMES, to_ab_coords
from .divergence import classify_pld, default_workers, family_label, is_pld
from .families import family, glue, xx5, zigzag
from .graph import Graph, betti, canonical_key, connected_components
from .identities import selftest
from .period import ConvergenceRefused, estimate_period
from .pointcount import BudgetExceeded, count_projective, fit_count_polynomial, validate
from .poly import psi_det, psi_trees


class DomainError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_graph(src: str) -> Graph:
    text = sys.stdin.read() if src == "-" else open(src, encoding="utf-8").read()
    try:
        return Graph.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise DomainError(f"cannot read graph from {src}: {exc}") from exc


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..")
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    return out


def cmd_family(args):
    return family(args.name, args.params).to_json()


def cmd_betti(args):
    g = _read_graph(args.graph)
    return {"betti": betti(g), "components": connected_components(g),
            "edges": g.num_edges, "vertices": g.vertex_count}


def cmd_psi(args):
    g = _read_graph(args.graph)
    psi = psi_trees(g) if args.trees else psi_det(g)
    if not args.paper_coords:
        return psi.to_json()
    if g == zigzag(5):
        which = "zz5"
    elif g == xx5():
        which = "xx5"
    else:
        raise DomainError("A/B coordinates exist only for the labelled ZZ5 and XX5 graphs")
    out = to_ab_coords(psi, which).to_json()
    out["names"] = AB_NAMES
    return out


def cmd_pld(args):
    return is_pld(_read_graph(args.graph), method=args.method).to_json()


def cmd_classify(args):
    workers = args.workers or default_workers()
    reps = classify_pld(args.loops, experimental=args.experimental, workers=workers)
    return [{"graph": g.to_json(), "key": canonical_key(g).hex(), "label": family_label(g)}
            for g in reps]


def cmd_glue(args):
    g1, g2 = _read_graph(args.graph1), _read_graph(args.graph2)
    return glue(g1, args.edge1, g2, args.edge2, swap=args.swap).to_json()


def cmd_identities(args):
    report = selftest(sizes=_int_list(args.sizes), trials=args.trials, seed=args.seed)
    return {"all_passed": all(r["passed"] for r in report.values()), "checks": report}


def cmd_count(args):
    g = _read_graph(args.graph)
    psi = psi_det(g)
    qs = _int_list(args.q)
    recs = [count_projective(psi, q, graph_id=args.id, threads=args.threads, force=args.force)
            for q in qs]
    out = {"records": [r.to_json(args.timing) for r in recs]}
    if args.fit:
        fit = fit_count_polynomial(recs)
        out["fit"] = fit.to_json()
        if args.holdout:
            hold = [count_projective(psi, q, graph_id=args.id, threads=args.threads, force=args.force)
                    for q in _int_list(args.holdout)]
            out["holdout"] = {"records": [r.to_json(args.timing) for r in hold],
                              "predicted": validate(fit, hold)}
    return out


def cmd_period(args):
    g = _read_graph(args.graph)
    est = estimate_period(g, args.samples, args.seed, chart=args.chart,
                          exponent=args.exponent, graph_id=args.id, threads=args.threads)
    return est.to_json()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphyps", description="Graph hypersurface toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("family", help="build a named graph")
    s.add_argument("name", help="ws, gzz, zz, xx5, st5, k, cycle, path, triangle")
    s.add_argument("params", nargs="*", type=int)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("betti", help="first Betti number")
    s.add_argument("graph", help="graph JSON file, or - for stdin")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("psi", help="graph polynomial")
    s.add_argument("graph")
    how = s.add_mutually_exclusive_group()
    how.add_argument("--det", action="store_true", help="determinant of the loop matrix (default)")
    how.add_argument("--trees", action="store_true", help="sum over spanning trees")
    s.add_argument("--paper-coords", "--ab-coords", dest="paper_coords", action="store_true",
                   help="rewrite in A/B coordinates (labelled ZZ5 or XX5 only)")
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("pld", help="primitive log divergence test")
    s.add_argument("graph")
    s.add_argument("--method", choices=["vertex", "edges"], default="vertex")
    s.set_defaults(func=cmd_pld)

    s = sub.add_parser("classify", help="PLD graphs with a given loop number")
    s.add_argument("--loops", type=int, required=True)
    s.add_argument("--experimental", action="store_true", help="allow 6 loops")
    s.add_argument("--workers", type=int, default=None)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("glue", help="glue two graphs along an edge each")
    s.add_argument("graph1")
    s.add_argument("edge1", type=int)
    s.add_argument("graph2")
    s.add_argument("edge2", type=int)
    s.add_argument("--swap", action="store_true", help="identify endpoints crosswise")
    s.set_defaults(func=cmd_glue)

    s = sub.add_parser("identities", help="determinant identity checks")
    isub = s.add_subparsers(dest="action", required=True)
    t = isub.add_parser("selftest")
    t.add_argument("--sizes", default="2..6")
    t.add_argument("--trials", type=int, default=100)
    t.add_argument("--seed", type=int, default=0)
    t.set_defaults(func=cmd_identities)

    s = sub.add_parser("count", help="projective point counts over F_q")
    s.add_argument("graph")
    s.add_argument("--q", required=True, help="primes, e.g. 2,3,5")
    s.add_argument("--fit", action="store_true")
    s.add_argument("--holdout", default="")
    s.add_argument("--threads", type=int, default=None)
    s.add_argument("--force", action="store_true", help="ignore the work budget")
    s.add_argument("--timing", action="store_true", help="include wall times")
    s.add_argument("--id", default="")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("period", help="Monte Carlo period estimate")
    s.add_argument("graph")
    s.add_argument("--samples", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--chart", type=int, default=None)
    s.add_argument("--exponent", type=float, default=None)
    s.add_argument("--threads", type=int, default=None)
    s.add_argument("--id", default="")
    s.set_defaults(func=cmd_period)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except ConvergenceRefused as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, BudgetExceeded, ValueError, ArithmeticError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(_dump(result) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
