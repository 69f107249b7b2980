"""``hk`` command line interface.

Exit status: 0 on success, 1 on a domain error (bad graph, failed
verification, ...), 2 on a usage error.  ``--json`` switches any
subcommand to JSON output.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import networkx as nx

from . import cycle
from .catalog import catalog
from .errors import HKError
from .graph import (
    OrientedGraph,
    components,
    cycle_graph,
    cycle_order,
    cyclic_core,
    is_pi,
    parse_graph,
    path_graph,
)
from .linalg import format_rational, parse_rational
from .matrix_type import (
    build_rep,
    c3_data,
    entry_token,
    evaluate_sandwich,
    extend_rep,
    format_data,
    load_data,
    verify_homomorphism,
)
from .rewriting import DEFAULT_BUDGET, are_equal, idempotents_acyclic, normalize
from .words import format_word, parse_word


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _lambda(text):
    try:
        value = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value == 0:
        raise argparse.ArgumentTypeError(
            "λ = 0 is not allowed: the induced homomorphism is the zero map"
        )
    return value


def _catalog_data(text):
    try:
        key, path = text.split("=", 1)
        j, i = (int(t) for t in key.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected J:I=FILE, got {text!r}") from None
    return j, i, path


def build_parser():
    p = argparse.ArgumentParser(prog="hk", description="Hecke-Kiselman monoids and their representations")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET,
                        help="saturation budget (visited words per query)")

    graph_src = argparse.ArgumentParser(add_help=False)
    graph_src.add_argument("-g", "--graph", dest="graph_opt", metavar="FILE", help="edge-list file")
    graph_src.add_argument("--cycle", type=int, metavar="N", help="use the oriented cycle C_N")
    graph_src.add_argument("--path", type=int, metavar="N", help="use the oriented path on N vertices")

    data_src = argparse.ArgumentParser(add_help=False)
    data_src.add_argument("--builtin", choices=["M0", "M1"], help="built-in C_3 sandwich data")
    data_src.add_argument("--data", metavar="FILE", help="sandwich-data file")
    data_src.add_argument("--lambda", dest="lam", type=_lambda, metavar="P/Q", help="nonzero rational λ")
    data_src.add_argument("--kmax", type=_positive_int, default=5, help="verification depth")

    def graph_cmd(name, help_):
        sp = sub.add_parser(name, parents=[common, graph_src], help=help_)
        sp.add_argument("graph", nargs="?", metavar="FILE", help="edge-list file")
        return sp

    graph_cmd("pi-check", "is the algebra PI?")
    graph_cmd("core", "cyclic core (arrows lying on an oriented cycle)")
    sp = graph_cmd("components", "components of the cyclic core")
    sp.add_argument("--raw", action="store_true", help="components of the graph itself")
    graph_cmd("idempotents", "idempotents of an acyclic graph or a cycle")
    sp = graph_cmd("catalog", "maximal ideals / irreducible representations")
    sp.add_argument("--data", dest="catalog_data", action="append", type=_catalog_data, default=[],
                    metavar="J:I=FILE", help="sandwich data for level I of every J-cycle")

    for name, nwords, help_ in [
        ("normalize", 1, "shortlex-least equivalent word"),
        ("equal", 2, "decide equality of two words"),
        ("fmap", 1, "affine map of a word in C_n"),
        ("support", 1, "support of the affine map of a word"),
        ("classify", 1, "certified ideal level of a word in C_n"),
    ]:
        sp = sub.add_parser(name, parents=[common, graph_src], help=help_)
        sp.add_argument("words", nargs=nwords, metavar="WORD", help="e.g. '3 1 2', or 'e'")

    for name, help_ in [
        ("sandwich", "sandwich matrix, optionally evaluated at λ"),
        ("rep", "representation ψ_λ"),
        ("verify", "check multiplicativity of ψ_λ"),
        ("extend", "extension of ψ_λ to integer exponents"),
    ]:
        sp = sub.add_parser(name, parents=[common, data_src], help=help_)
        if name == "extend":
            sp.add_argument("--p", type=int, default=0, help="exponent to display")
            sp.add_argument("--prange", type=_positive_int, default=3,
                            help="check exponents -R..R")
    return p


def _read(parser, path):
    p = Path(path)
    if not p.is_file():
        parser.error(f"input file not found: {path}")
    return p.read_text(encoding="utf-8")


def _graph(parser, args) -> OrientedGraph:
    sources = [s for s in (getattr(args, "graph", None), args.graph_opt) if s]
    chosen = len(sources) + (args.cycle is not None) + (args.path is not None)
    if chosen > 1:
        parser.error("give exactly one of FILE, --graph, --cycle, --path")
    if args.cycle is not None:
        return cycle_graph(args.cycle)
    if args.path is not None:
        return path_graph(args.path)
    if not sources:
        parser.error("no graph given (FILE, --graph, --cycle or --path)")
    return parse_graph(_read(parser, sources[0]))


def _data(parser, args):
    if (args.builtin is None) == (args.data is None):
        parser.error("give exactly one of --builtin or --data")
    if args.builtin:
        return c3_data(args.builtin)
    _read(parser, args.data)
    return load_data(args.data)


def _need_lambda(parser, args):
    if args.lam is None:
        parser.error(f"{args.command} requires --lambda")
    return args.lam


def _cycle_word(g, word):
    order = cycle_order(g)
    if order is None:
        raise HKError("this command needs an oriented cycle graph")
    pos = {v: k for k, v in enumerate(order, start=1)}
    return tuple(pos[i] for i in word)


def _emit(out, args, text, payload):
    if args.json:
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _matrix_lines(m):
    return str(m).splitlines()


def _run(parser, args, out):
    cmd = args.command
    if cmd in ("pi-check", "core", "components", "idempotents", "catalog",
               "normalize", "equal", "fmap", "support", "classify"):
        g = _graph(parser, args)

    if cmd == "pi-check":
        verdict = is_pi(g)
        _emit(out, args, f"PI: {'yes' if verdict else 'no'}", {"pi": verdict})
    elif cmd == "core":
        core = cyclic_core(g)
        _emit(out, args, core.to_text(),
              {"n": core.n, "arrows": [list(a) for a in core.sorted_arrows()]})
    elif cmd == "components":
        comps = components(g if args.raw else cyclic_core(g))
        text = "\n".join(f"{' '.join(map(str, v))}: {k}" for v, k in comps)
        _emit(out, args, text, [{"vertices": list(v), "kind": str(k)} for v, k in comps])
    elif cmd == "idempotents":
        order = cycle_order(g)
        if order is not None:
            rows = []
            for idem in cycle.all_idempotents(g.n):
                subset = sorted(order[i - 1] for i in idem.subset)
                rows.append((subset, tuple(order[i - 1] for i in idem.word)))
        elif nx.is_directed_acyclic_graph(g.to_networkx()):
            rows = [(sorted(w), w) for w in idempotents_acyclic(g)]
        else:
            raise HKError("idempotent listing needs an acyclic graph or an oriented cycle")
        text = "\n".join(
            "{" + ",".join(map(str, s)) + "}: " + format_word(w) for s, w in rows
        )
        _emit(out, args, text, [{"subset": s, "word": format_word(w)} for s, w in rows])
    elif cmd == "catalog":
        data = {}
        for j, i, path in args.catalog_data:
            _read(parser, path)
            data.setdefault(j, {})[i] = load_data(path, j, i)
        report = catalog(g, data)
        if args.json:
            out.write(report.dumps() + "\n")
        else:
            out.write(report.to_text())
    elif cmd in ("normalize", "equal", "fmap", "support", "classify"):
        words = [parse_word(w, g.n) for w in args.words]
        if cmd == "normalize":
            nf = normalize(words[0], g, args.budget)
            note = "" if nf.complete else "  (saturation incomplete)"
            _emit(out, args, format_word(nf.word) + note,
                  {"word": format_word(nf.word), "complete": nf.complete})
        elif cmd == "equal":
            v = are_equal(words[0], words[1], g, args.budget)
            payload = {"verdict": v.verdict.value}
            if v.chain is not None:
                payload["chain"] = [format_word(w) for w in v.chain]
            if v.witness is not None:
                kind, a, b = v.witness
                payload["witness"] = {"kind": kind, "left": _render(a), "right": _render(b)}
            _emit(out, args, str(v), payload)
        else:
            w = _cycle_word(g, words[0])
            fm = cycle.f_map(w, g.n)
            if cmd == "fmap":
                _emit(out, args, str(fm), {"source": list(fm.source), "offset": list(fm.offset)})
            elif cmd == "support":
                supp = sorted(cycle.support(fm))
                _emit(out, args, "{" + ",".join(map(str, supp)) + "}", supp)
            else:
                lvl = cycle.classify_level(w, g.n)
                _emit(out, args, f"level {lvl}",
                      {"level": "top" if lvl.is_top else lvl.level,
                       "support_size": lvl.support_size})
    else:
        d = _data(parser, args)
        if cmd == "sandwich":
            if args.lam is None:
                text = format_data(d)
                payload = {
                    "size": d.size,
                    "row_labels": list(d.row_labels),
                    "col_labels": list(d.col_labels),
                    "entries": [[entry_token(e) for e in r] for r in d.sandwich],
                }
                _emit(out, args, text, payload)
            else:
                m = evaluate_sandwich(d, args.lam)
                text = "\n".join(_matrix_lines(m) + [f"rank: {m.rank()}"])
                _emit(out, args, text, {"lambda": format_rational(args.lam),
                                        "matrix": m.to_strings(), "rank": m.rank()})
        elif cmd == "rep":
            rep = build_rep(d, _need_lambda(parser, args))
            if args.json:
                out.write(rep.dumps() + "\n")
            else:
                lines = [f"lambda: {format_rational(rep.lam)}", f"dim: {rep.dim}"]
                for g_ in rep.to_json()["generators"]:
                    lines.append(f"{g_['element']}:")
                    lines += ["  [" + " ".join(r) + "]" for r in g_["matrix"]]
                out.write("\n".join(lines) + "\n")
        elif cmd == "verify":
            rep = build_rep(d, _need_lambda(parser, args))
            ok = verify_homomorphism(rep, d, args.kmax)
            _emit(out, args,
                  f"homomorphism (dim {rep.dim}, kmax {args.kmax}): {'verified' if ok else 'FAILED'}",
                  {"lambda": format_rational(rep.lam), "dim": rep.dim, "kmax": args.kmax,
                   "verified": ok})
            if not ok:
                return 1
        elif cmd == "extend":
            rep = build_rep(d, _need_lambda(parser, args))
            ext = extend_rep(rep, d)
            span = range(-args.prange, args.prange + 1)
            ok = ext.verify(span)
            img = ext.image(args.p, 1, 1)
            text = "\n".join(
                ["idempotent e:"] + ["  " + ln for ln in _matrix_lines(ext.e)]
                + [f"image of ({d.generator}^{args.p}; 1, 1):"] + ["  " + ln for ln in _matrix_lines(img)]
                + [f"multiplicative for p, q in {-args.prange}..{args.prange}: {'yes' if ok else 'NO'}"]
            )
            _emit(out, args, text, {
                "lambda": format_rational(rep.lam), "dim": rep.dim,
                "e": ext.e.to_strings(), "p": args.p, "image": img.to_strings(),
                "prange": args.prange, "multiplicative": ok,
            })
            if not ok:
                return 1
    return 0


def _render(obj):
    if isinstance(obj, tuple):
        return format_word(obj)
    return str(obj)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(parser, args, out)
    except SystemExit as exc:
        return int(exc.code or 0)
    except HKError as exc:
        print(f"hk: error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
