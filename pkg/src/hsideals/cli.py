"""Command-line interface.

Exit codes: 0 success, 1 property violated or counterexample found,
2 input error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import campaigns
from .errors import InputError, ResourceCapError
from .graphs import (
    DEFAULT_MAX_VERTICES,
    complement,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    dump_graph,
    edge_ideal,
    empty_graph,
    find_reversible_peo,
    is_chordal,
    is_proper_interval,
    parse_graph,
    path_graph,
    random_graph,
    random_tree,
)
from .linquot import DEFAULT_MAX_GENS, find_admissible_order, hs_linquot, is_admissible, parse_certificate
from .monomial import MonomialIdeal, dump_ideal, format_ideal, parse_ideal
from .reproduce import EXAMPLES, reproduce
from .resolution import DEFAULT_MAX_LATTICE, describe, hs_from_table, multigraded_betti

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class _Violation(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _load_ideal(args) -> MonomialIdeal:
    text = _read(args.input)
    if getattr(args, "graph", False):
        return edge_ideal(parse_graph(text))
    return parse_ideal(text)


def _k_range(spec: str, top: int) -> list:
    """``"2"``, ``"0-3"``, ``"1,3"`` or ``"all"`` (0 up to ``top``)."""
    if spec == "all":
        return list(range(top + 1))
    out = []
    for part in spec.split(","):
        part = part.strip()
        try:
            if "-" in part:
                a, b = part.split("-", 1)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise InputError(f"bad --k value {spec!r}") from None
    if any(k < 0 for k in out):
        raise InputError("k must be non-negative")
    return out


def _emit(args, human: str, data) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        sys.stdout.write(human)


# --- commands ---------------------------------------------------------------


def cmd_hs(args) -> int:
    ideal = _load_ideal(args)
    cert = None
    if args.route in ("auto", "linquot"):
        cert = find_admissible_order(ideal, max_gens=args.max_gens)
        if cert is None and args.route == "linquot":
            raise InputError("the ideal has no linear quotients; use --route betti")
    table = None
    if args.route == "betti" or cert is None:
        table = multigraded_betti(ideal, args.max_lattice)
    elif args.route == "auto":
        # cross-check when the lattice is small enough
        try:
            table = multigraded_betti(ideal, args.max_lattice)
        except ResourceCapError:
            table = None
    top = table.projective_dimension() if table is not None else max((len(s) for s in cert.sets), default=0)
    results = []
    for k in _k_range(args.k, top):
        via_lq = hs_linquot(ideal, cert, k) if cert is not None else None
        via_betti = hs_from_table(table, k) if table is not None else None
        if via_lq is not None and via_betti is not None and via_lq != via_betti:
            sys.stderr.write(
                f"internal error: routes disagree at k={k}\n  input: {format_ideal(ideal)}\n"
                f"  linquot: {format_ideal(via_lq)}\n  betti:   {format_ideal(via_betti)}\n"
            )
            raise _Violation
        h = via_lq if via_lq is not None else via_betti
        route = "linquot" if via_lq is not None else "betti"
        results.append((k, h, route, via_lq is not None and via_betti is not None))
    human = "".join(f"HS_{k} = {format_ideal(h) if not h.is_zero() else '0'}\n" for k, h, _, _ in results)
    data = {
        "n": ideal.n,
        "input": format_ideal(ideal),
        "certificate": cert.to_json() if cert is not None else None,
        "hs": [{"k": k, "gens": format_ideal(h), "route": r, "cross_checked": c} for k, h, r, c in results],
    }
    _emit(args, human, data)
    return EXIT_OK


def cmd_betti(args) -> int:
    ideal = _load_ideal(args)
    table = multigraded_betti(ideal, args.max_lattice)
    human = table.render()
    if args.multigraded:
        human += "\n" + describe(table)
    _emit(args, human, {"n": ideal.n, "triples": table.triples(), "graded": [[i, j, r] for (i, j), r in sorted(table.graded().items())]})
    return EXIT_OK


def cmd_order(args) -> int:
    ideal = _load_ideal(args)
    cert = find_admissible_order(ideal, max_gens=args.max_gens)
    if cert is None:
        _emit(args, "no admissible order: the ideal does not have linear quotients\n", {"valid": False})
        return EXIT_VIOLATION
    _emit(args, cert.to_text(), cert.to_json())
    return EXIT_OK


def cmd_graph(args) -> int:
    g = parse_graph(_read(args.input))
    checks = args.check or ["chordal", "cochordal", "proper-interval", "reversible"]
    report, lines = {}, []
    for c in checks:
        if c in ("chordal", "cochordal"):
            target = g if c == "chordal" else complement(g)
            r = is_chordal(target)
            if r:
                report[c] = {"verdict": True, "peo": list(r.ordering)}
                lines.append(f"{c}: yes  peo={' '.join(map(str, r.ordering))}")
            else:
                report[c] = {"verdict": False, "induced_cycle": list(r.cycle)}
                where = "" if c == "chordal" else " in the complement"
                lines.append(f"{c}: no   induced cycle{where}: {' '.join(map(str, r.cycle))}")
        elif c == "proper-interval":
            o = is_proper_interval(g, args.max_vertices)
            report[c] = {"verdict": o is not None, "ordering": list(o) if o else None}
            lines.append(f"{c}: yes  ordering={' '.join(map(str, o))}" if o else f"{c}: no   (no ordering has the window property)")
        elif c == "reversible":
            o = find_reversible_peo(g, args.max_vertices)
            report[c] = {"verdict": o is not None, "peo": list(o) if o else None}
            lines.append(f"{c}: yes  peo={' '.join(map(str, o))}" if o else f"{c}: no   (no reversible perfect elimination order)")
    _emit(args, "\n".join(lines) + "\n", report)
    return EXIT_OK


_BUILDERS = {
    "empty": (1, lambda a, s: empty_graph(a[0])),
    "complete": (1, lambda a, s: complete_graph(a[0])),
    "path": (1, lambda a, s: path_graph(a[0])),
    "cycle": (1, lambda a, s: cycle_graph(a[0])),
    "bipartite": (2, lambda a, s: complete_bipartite(a[0], a[1])),
    "multipartite": (None, lambda a, s: complete_multipartite(a)),
    "tree": (1, lambda a, s: random_tree(a[0], s)),
    "random": (2, lambda a, s: random_graph(a[0], a[1] / 100, s)),
}


def cmd_make_graph(args) -> int:
    arity, build = _BUILDERS[args.kind]
    if arity is not None and len(args.params) != arity:
        raise InputError(f"{args.kind} takes {arity} integer parameter(s)")
    g = build(args.params, args.seed)
    out = dump_graph(g)
    if args.complement:
        out = dump_graph(complement(g))
    if args.edge_ideal:
        out = dump_ideal(edge_ideal(parse_graph(out)))
    sys.stdout.write(out)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    ids = EXAMPLES if args.example == "all" else [args.example]
    results = [reproduce(e) for e in ids]
    if args.json:
        print(json.dumps([r.to_json() for r in results], sort_keys=True))
    else:
        for r in results:
            sys.stdout.write(r.render())
    return EXIT_OK if all(r.ok for r in results) else EXIT_VIOLATION


def cmd_fuzz(args) -> int:
    report = campaigns.run_campaign(args.theorem, args.count, args.seed, args.jobs)
    text = report.to_jsonl()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.json:
        sys.stdout.write(text)
    else:
        s = report.summary()
        print(f"{s['theorem']} seed={s['seed']}: {s['pass']}/{s['count']} pass, {s['fail']} fail, {s['capped']} capped -> {s['status']}")
        for r in report.failures():
            print(json.dumps(r, sort_keys=True))
    return report.exit_code


def cmd_verify(args) -> int:
    if args.what == "order":
        ideal = parse_ideal(_read(args.ideal))
        order, sets = parse_certificate(_read(args.certificate), ideal.n)
        res = is_admissible(ideal, order)
        if not res:
            _emit(args, f"invalid: colon ideal at position {res.position} is not linear\n", res.to_json())
            return EXIT_VIOLATION
        if sets and tuple(sets) != res.sets:
            _emit(args, "invalid: order is admissible but the listed sets are wrong\n", {"valid": False, "sets": [sorted(s) for s in res.sets]})
            return EXIT_VIOLATION
        _emit(args, "valid\n", res.to_json())
        return EXIT_OK
    # campaign records: recompute each one from its seed
    bad = 0
    for lineno, line in enumerate(_read(args.records).splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as e:
            raise InputError(f"line {lineno}: {e.msg}") from None
        if "summary" in rec:
            continue
        same, _ = campaigns.replay(rec)
        if not same:
            bad += 1
            print(f"line {lineno}: record {rec.get('seed')} does not replay")
    print("all records replay" if not bad else f"{bad} record(s) differ")
    return EXIT_OK if not bad else EXIT_VIOLATION


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hsideals", description="Homological shift ideals of monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def ideal_input(sp):
        sp.add_argument("input", help="ideal file ('-' for stdin)")
        sp.add_argument("--graph", action="store_true", help="read a graph file and use its edge ideal")
        sp.add_argument("--json", action="store_true", help="structured output")

    sp = sub.add_parser("hs", help="homological shift ideals HS_k")
    ideal_input(sp)
    sp.add_argument("--k", default="1", help="k, a range like 0-3, a list like 1,3, or 'all'")
    sp.add_argument("--route", choices=("auto", "linquot", "betti"), default="auto")
    sp.add_argument("--max-gens", type=int, default=DEFAULT_MAX_GENS)
    sp.add_argument("--max-lattice", type=int, default=DEFAULT_MAX_LATTICE)
    sp.set_defaults(func=cmd_hs)

    sp = sub.add_parser("betti", help="graded Betti table")
    ideal_input(sp)
    sp.add_argument("--multigraded", action="store_true", help="also list (i, multidegree, rank)")
    sp.add_argument("--max-lattice", type=int, default=DEFAULT_MAX_LATTICE)
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("order", help="find an admissible order (linear quotients certificate)")
    ideal_input(sp)
    sp.add_argument("--max-gens", type=int, default=DEFAULT_MAX_GENS)
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("graph", help="chordality and related checks on a graph file")
    sp.add_argument("input")
    sp.add_argument("--check", action="append", choices=("chordal", "cochordal", "proper-interval", "reversible"))
    sp.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("make-graph", help="write a graph file from a named family")
    sp.add_argument("kind", choices=sorted(_BUILDERS))
    sp.add_argument("params", type=int, nargs="*", help="sizes (random: n and edge percentage)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--complement", action="store_true")
    sp.add_argument("--edge-ideal", action="store_true", help="print the edge ideal instead")
    sp.set_defaults(func=cmd_make_graph)

    sp = sub.add_parser("reproduce", help="recompute a worked example against stored values")
    sp.add_argument("example", choices=EXAMPLES + ("all",))
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_reproduce)

    sp = sub.add_parser("fuzz", help="seeded property campaign")
    sp.add_argument("theorem", choices=sorted(campaigns.THEOREMS))
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true", help="print every record as JSON lines")
    sp.add_argument("--out", help="also write the JSON-lines report here")
    sp.set_defaults(func=cmd_fuzz)

    sp = sub.add_parser("verify", help="replay certificates or campaign records")
    vs = sp.add_subparsers(dest="what", required=True)
    v = vs.add_parser("order", help="check an admissible-order certificate")
    v.add_argument("ideal")
    v.add_argument("certificate")
    v.add_argument("--json", action="store_true")
    v = vs.add_parser("records", help="recompute campaign records from their seeds")
    v.add_argument("records")
    v.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    except ResourceCapError as e:
        sys.stderr.write(f"resource cap: {e}\n")
        return EXIT_CAP
    except _Violation:
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
