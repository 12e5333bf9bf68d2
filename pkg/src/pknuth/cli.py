"""Command line entry point: ``pknuth <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import insertion, knuth, symfunc, tableaux, verify
from .poset import (INF, InvalidPartition, UnitIntervalOrder, avoids_climbing_patterns,
                    enumerate_orders, find_climber)
from .words import format_word, is_permutation, parse_word, stats

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _int_list(text: str) -> list:
    text = text.strip().strip("()[]")
    return [int(x) for x in text.split(",") if x.strip()] if text else []


def load_order(args) -> UnitIntervalOrder:
    sources = [args.order is not None, args.order_file is not None, args.lam is not None or args.n is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one order source: --order JSON, --order-file PATH, or --lambda/--n")
    try:
        if args.order is not None:
            return UnitIntervalOrder.from_json(json.loads(args.order))
        if args.order_file is not None:
            with open(args.order_file) as fh:
                return UnitIntervalOrder.from_json(json.load(fh))
        if args.n is None:
            raise UsageError("--lambda needs --n")
        return UnitIntervalOrder(_int_list(args.lam or ""), args.n)
    except (ValueError, KeyError, TypeError, OSError) as exc:
        raise UsageError(f"bad order: {exc}") from exc


def _word(text: str, order: UnitIntervalOrder, perm: bool = False) -> tuple:
    try:
        w = parse_word(text)
    except ValueError as exc:
        raise UsageError(f"bad word {text!r}: {exc}") from exc
    if perm and not is_permutation(w, order.n):
        raise UsageError(f"{text!r} is not a permutation of [1,{order.n}]")
    return w


def _tableau(text: str) -> tuple:
    try:
        obj = json.loads(text)
        return tableaux.normalize(obj["columns"])
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad tableau JSON {text!r}: {exc}") from exc


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def _wstr(w) -> str:
    return format_word(w, "" if all(x != INF and x < 10 for x in w) else ",")


def _trace_lines(tr: insertion.StepTrace, alpha) -> list:
    m = len(alpha)
    lines = []
    for s in tr.steps:
        ap = alpha[m - s.p]
        head = f"  p={s.p} a_p={'inf' if ap == INF else ap}: case {s.case[0]}({s.case[1]})"
        if s.r is not None:
            head += f" r={s.r}"
        if s.hq is not None:
            head += f" (h,q)=({s.hq[0]},{s.hq[1]})"
        lines.append(f"{head} chain=({format_word(s.chain)})")
    return lines


# ---------------------------------------------------------------------------
# subcommands

def cmd_orders(args) -> int:
    if args.n is None or args.n < 1:
        raise UsageError("orders needs --n N with N >= 1")
    for order in enumerate_orders(args.n):
        if args.avoid_climbing and not avoids_climbing_patterns(order):
            continue
        obj = order.to_json()
        if args.format == "json":
            obj = {"schema_version": SCHEMA_VERSION, **obj}
        _emit(obj)
    return 0


def cmd_stats(args) -> int:
    order = load_order(args)
    w = _word(args.word, order, perm=True)
    st = stats(order, w)
    out = {"schema_version": SCHEMA_VERSION, "order": order.to_json(), "word": list(w),
           "des": st["des"], "ginv": [list(p) for p in st["ginv"]], "ght": st["ght"],
           "finv": [list(p) for p in st["finv"]], "finv_count": st["finv_count"]}
    climber = find_climber(order)
    if args.format == "json":
        _emit(out)
    else:
        print(f"order   {order!r}{'  (ladder-climbing)' if climber else ''}")
        print(f"word    {_wstr(w)}")
        print(f"des_P   {{{', '.join(map(str, st['des']))}}}")
        print(f"ginv_P  {{{', '.join(f'({a},{b})' for a, b in st['ginv'])}}}  ({len(st['ginv'])} pairs)")
        print(f"ght_P   {st['ght']}")
        print(f"finv_P  {{{', '.join(f'({a},{b})' for a, b in st['finv'])}}}  ({st['finv_count']} pairs)")
    return 0


def cmd_tableaux(args) -> int:
    order = load_order(args)
    lam = _int_list(args.shape) if args.shape else None
    if lam is not None and sum(lam) != order.n:
        raise UsageError(f"shape {lam} does not have size {order.n}")
    found = list(tableaux.enumerate_p_tableaux(order, lam))
    if args.format == "json":
        _emit({"schema_version": SCHEMA_VERSION, "order": order.to_json(),
               "shape": lam, "count": len(found),
               "tableaux": [{"columns": [list(c) for c in T], "shape": list(tableaux.shape(T)),
                             "reading_word": list(tableaux.reading_word(T)),
                             "finv": tableaux.finv_p_tab(order, T)} for T in found]})
    else:
        for T in found:
            print(f"{tableaux.format_rows(T):<24} shape={list(tableaux.shape(T))} "
                  f"rw={_wstr(tableaux.reading_word(T))} finv={tableaux.finv_p_tab(order, T)}")
        print(f"{len(found)} P-tableaux")
    return 0


def _vertex_sets(args, order) -> list:
    if args.component_of:
        w = _word(args.component_of, order, perm=True)
        return [tuple(sorted(knuth.equivalence_class(order, w)))]
    return knuth.components(order)


def cmd_graph(args) -> int:
    order = load_order(args)
    comps = _vertex_sets(args, order)
    verts = [w for c in comps for w in c]
    g = knuth.build_graph(order, verts)
    if args.format == "dot":
        sys.stdout.write(g.to_dot())
    elif args.format == "json":
        obj = g.to_json()
        obj["components"] = [[list(w) for w in c] for c in comps]
        if args.axioms:
            obj["axioms"] = [knuth.check_d_graph_axioms(knuth.build_graph(order, c)).to_json() for c in comps]
        _emit(obj)
    else:
        for c in comps:
            sub = knuth.build_graph(order, c)
            print(f"component of {_wstr(c[0])} ({len(c)} vertices)")
            for w in c:
                print(f"  {_wstr(w)}  des={{{','.join(map(str, sorted(sub.sigma[w])))}}}")
            for u, v, i in sub.edge_list():
                print(f"  {_wstr(u)} -- {_wstr(v)}  [{i}]")
            if args.axioms:
                rep = knuth.check_d_graph_axioms(sub)
                flags = " ".join(f"{k}={'ok' if p else 'FAIL'}" for k, (p, _) in rep.results.items())
                print(f"  axioms: {flags}; {rep.notes.get('dual_equivalence')}")
    return 0


def cmd_gamma(args) -> int:
    order = load_order(args)
    comps = _vertex_sets(args, order)
    rows = []
    for c in comps:
        q = symfunc.gamma(order, c)
        exp = symfunc.expand_in_schur(q)
        rows.append((c, q, exp))
    if args.format == "json":
        _emit({"schema_version": SCHEMA_VERSION, "order": order.to_json(),
               "components": [{"vertices": [list(w) for w in c],
                               "symmetric": symfunc.is_symmetric(q),
                               "schur_positive": symfunc.is_schur_positive(e),
                               "text": e.render(), **e.to_json()} for c, q, e in rows]})
    else:
        for c, q, e in rows:
            tail = "" if e.ok else "  (not Schur-expressible)"
            print(f"{_wstr(c[0])} [{len(c)}]: {e.render()}{tail}")
    return 0


def _print_insert(args, order, alpha, c, d, beta, tr) -> None:
    if args.format == "json":
        out = {"schema_version": SCHEMA_VERSION, "order": order.to_json(),
               "alpha": [_tok(x) for x in alpha], "c": list(c),
               "d": list(d), "beta": [_tok(x) for x in beta]}
        if tr is not None:
            out["trace"] = tr.to_json()
        _emit(out)
    else:
        print(f"d    = ({format_word(d)})")
        print(f"beta = ({format_word(beta)})")
        if tr is not None:
            print("trace:")
            print("\n".join(_trace_lines(tr, alpha)))


def _tok(x):
    return "inf" if x == INF else x


def cmd_phi(args) -> int:
    order = load_order(args)
    alpha = _word(args.word, order)
    c = _word(args.chain, order) if args.chain else ()
    try:
        d, beta, tr = insertion.phi(order, alpha, c, trace=True)
    except insertion.InsertionError as exc:
        raise UsageError(str(exc)) from exc
    _print_insert(args, order, alpha, c, d, beta, tr if args.trace else None)
    return 0


def cmd_psi(args) -> int:
    order = load_order(args)
    alpha = _word(args.word, order)
    c = _word(args.chain, order) if args.chain else ()
    X = set(_int_list(args.X)) if args.X else set()
    try:
        d, beta, tr = insertion.psi(order, X, alpha, c, trace=True)
    except insertion.InsertionError as exc:
        raise UsageError(str(exc)) from exc
    _print_insert(args, order, alpha, c, d, beta, tr if args.trace else None)
    return 0


def cmd_prs(args) -> int:
    order = load_order(args)
    if args.pt or args.qt:
        if not (args.pt and args.qt) or args.word:
            raise UsageError("inverse mode needs both --pt and --qt and no --word")
        try:
            w = insertion.inverse_prs(order, _tableau(args.pt), _tableau(args.qt))
        except insertion.InsertionError as exc:
            raise UsageError(str(exc)) from exc
        if args.format == "json":
            _emit({"schema_version": SCHEMA_VERSION, "order": order.to_json(), "word": list(w)})
        else:
            print(_wstr(w))
        return 0
    if not args.word:
        raise UsageError("prs needs --word (or --pt and --qt for the inverse)")
    w = _word(args.word, order)
    res = insertion.prs(order, w, trace=args.trace)
    if args.format == "json":
        out = res.to_json()
        out["order"] = order.to_json()
        out["word"] = [_tok(x) for x in w]
        _emit(out)
        return 0
    print("PT:")
    print(_indent(tableaux.render(res.pt_columns)))
    print("QT:")
    print(_indent(tableaux.render(res.qt_columns)))
    print(f"PT is a P-tableau: {'yes' if res.pt_valid else 'no'}")
    print(f"QT is standard:    {'yes' if res.qt_valid else 'no'}")
    if args.trace:
        cur = tuple(w)
        for k, tr in enumerate(res.traces, 1):
            print(f"column {k}: Phi(({format_word(cur)}), ())")
            print("\n".join(_trace_lines(tr, cur)))
            cur = insertion.phi(order, cur, ())[1]
    return 0


def _indent(text: str) -> str:
    return "\n".join("  " + line for line in text.splitlines())


def cmd_verify(args) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    rep = verify.run_suite(args.suite, n=args.n, jobs=args.jobs, seed=args.seed)
    if args.format == "json":
        out = rep.to_json()
        if not args.timings:
            out.pop("seconds")  # keeps the output byte-deterministic
        _emit({"schema_version": SCHEMA_VERSION, **out})
    else:
        for name, status in rep.details.get("parts", {}).items():
            if status != "pass" or not args.quiet:
                print(f"{status.upper():4}  {name}")
        tail = f" ({rep.seconds:.1f}s)" if args.timings else ""
        print(f"{args.suite}: {'PASS' if rep.passed else 'FAIL'}{tail}")
        for w in rep.witnesses:
            print(f"  witness: {json.dumps(verify._plain(w))}")
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pknuth", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    def order_opts(p, need=True):
        p.add_argument("--order", help='inline JSON, e.g. \'{"n": 4, "lambda": [2, 1]}\'')
        p.add_argument("--order-file", help="file holding the order JSON")
        p.add_argument("--lambda", dest="lam", help="partition as comma list, e.g. 2,1 (empty for none)")
        p.add_argument("--n", type=int, help="size of the ground set")

    def fmt(p, choices=("text", "json"), default="text"):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("orders", help="list natural unit interval orders on [1,n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid-climbing", action="store_true", help="only orders that are not ladder-climbing")
    fmt(p, default="json")
    p.set_defaults(func=cmd_orders)

    p = sub.add_parser("stats", help="des, ginv, ght and finv of a permutation")
    order_opts(p)
    p.add_argument("--word", required=True)
    fmt(p, default="json")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("tableaux", help="list P-tableaux")
    order_opts(p)
    p.add_argument("--shape", help="partition, e.g. 3,2 (all shapes when omitted)")
    fmt(p)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("graph", help="P-Knuth equivalence graph")
    order_opts(p)
    p.add_argument("--component-of", help="only the class of this permutation")
    p.add_argument("--axioms", action="store_true", help="also check the D graph axioms per class")
    fmt(p, ("text", "json", "dot"))
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("gamma", help="generating functions of classes in the Schur basis")
    order_opts(p)
    p.add_argument("--component-of", help="only the class of this permutation")
    fmt(p)
    p.set_defaults(func=cmd_gamma)

    for name, func in (("phi", cmd_phi), ("psi", cmd_psi)):
        p = sub.add_parser(name, help=f"column insertion {name.capitalize()}(alpha, c)")
        order_opts(p)
        p.add_argument("--word", required=True, help="alpha written left to right, 'inf' allowed")
        p.add_argument("--chain", help="c listed bottom to top, e.g. 6,5,1")
        if name == "psi":
            p.add_argument("--X", required=True, help="positions (1 = last letter), e.g. 5,8,9")
        p.add_argument("--trace", action="store_true")
        fmt(p)
        p.set_defaults(func=func)

    p = sub.add_parser("prs", help="P-Robinson-Schensted map, or its inverse with --pt/--qt")
    order_opts(p)
    p.add_argument("--word")
    p.add_argument("--pt", help='tableau JSON {"columns": [[bottom..top], ...]}')
    p.add_argument("--qt", help="standard tableau JSON, same layout")
    p.add_argument("--trace", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_prs)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("figures", "theorem", "conjecture", "oracles"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quiet", action="store_true", help="only print failing parts")
    p.add_argument("--timings", action="store_true", help="report elapsed seconds")
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, InvalidPartition) as exc:
        print(f"pknuth {args.cmd}: error: {exc}", file=sys.stderr)
        return 2
    except knuth.NotClosed as exc:
        print(f"pknuth {args.cmd}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
