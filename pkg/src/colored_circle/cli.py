"""Command-line interface.

Exit status: 0 on success, 1 when a verification finds violations or the
evaluators disagree, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from . import bisection, line, measures, symbols, trees
from .colors import NEG_INF, POS_INF, ColorSet
from .errors import ColoredCircleError


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _colors(args) -> ColorSet:
    if not args.colors:
        raise UsageError("--colors is required")
    return ColorSet.parse(args.colors)


def _word(colors: ColorSet, text: str):
    return colors.parse_word(text)


def cmd_enumerate(args, out) -> int:
    colors = _colors(args)
    kind = args.kind
    if kind == "trees":
        items = trees.enumerate_directed_trees(colors, allow_large=args.allow_large)
        render = trees.format_tree
    elif kind == "obs":
        items = bisection.enumerate_obs(colors, allow_large=args.allow_large)
        render = bisection.format_obs
    elif kind == "unoriented":
        if colors.n < 2:
            raise UsageError("unoriented structures need at least two colors")
        items = bisection.enumerate_unoriented(colors, allow_large=args.allow_large)
        render = lambda u: "\n".join(" ".join(map(str, r)) for r in u.rows) + "\n"  # noqa: E731
    else:
        items = line.enumerate_extended(colors, allow_large=args.allow_large)
        render = lambda e: "\n".join(" ".join(map(str, r)) for r in e.rows) + "\n"  # noqa: E731
    out.write(f"{len(items)}\n")
    if args.list:
        for item in items:
            out.write("\n" + render(item))
    return 0


def _load_tree(args):
    if args.tree:
        return trees.parse_tree(_read(args.tree))
    raise UsageError("--tree is required")


def cmd_eval(args, out) -> int:
    if args.pointed:
        pointed = line.parse_pointed(_read(args.pointed))
        colors = pointed.tree.colors
        w = _word(colors, args.word)
        value = line.eval_line_measure(pointed, args.a, args.b, w)
        if args.a in (NEG_INF, POS_INF) or args.b in (NEG_INF, POS_INF):
            out.write(f"line={value}\n")
            return 0
        tree = pointed.tree
    else:
        tree = _load_tree(args)
        colors = tree.colors
        w = _word(colors, args.word)
        if args.a in (NEG_INF, POS_INF) or args.b in (NEG_INF, POS_INF):
            raise UsageError("infinite endpoints need a pointed tree (--pointed)")
        value = None
    sym = measures.tree_symbol(tree)
    closed = measures.eval_closed_form(tree, args.a, args.b, w)
    rec = measures.eval_recursive(sym, args.a, args.b, w)
    prod = measures.eval_product(sym, args.a, args.b, w)
    prefix = "" if value is None else f"line={value} "
    out.write(f"{prefix}closed={closed} recursive={rec} product={prod}\n")
    values = {closed, rec, prod} | ({value} if value is not None else set())
    if len(values) != 1:
        sys.stderr.write("evaluators disagree\n")
        return 1
    return 0


def cmd_classify(args, out) -> int:
    tree = _load_tree(args)
    cls = measures.classify_word(tree, args.a, args.b, _word(tree.colors, args.word))
    out.write(f"{cls}\n")
    return 0


def cmd_universal(args, out) -> int:
    colors = _colors(args)
    vec = measures.universal_measure(colors, args.a, args.b, _word(colors, args.word), allow_large=args.allow_large)
    for row in vec.lines():
        out.write(row + "\n")
    return 0


def _emit_report(out, label: str, violations: List, limit: int = 20) -> None:
    for v in violations[:limit]:
        out.write(f"  {label}: {v}\n")
    if len(violations) > limit:
        out.write(f"  ... {len(violations) - limit} more\n")


def cmd_verify(args, out) -> int:
    if args.target == "line":
        return _verify_line(args, out)
    if args.all_trees:
        tree_list = trees.enumerate_directed_trees(_colors(args), allow_large=args.allow_large)
    else:
        tree_list = [_load_tree(args)]
    total = 0
    checks = 0
    for tree in tree_list:
        sym = measures.tree_symbol(tree)
        label = trees.format_tree(tree).replace("\n", "; ").strip("; ")
        if args.target == "symbols":
            report = symbols.check_symbol_axioms(sym)
            found = list(report.violations)
            checks += tree.n ** 4
            recovered = symbols.obs_from_symbol(sym) if report.ok else None
            if recovered is not None and symbols.symbol_from_obs(recovered) != sym:
                found.append("structure recovered from the symbol does not reproduce it")
        else:
            report = measures.verify_measure_axioms(sym, args.max_len)
            found = report.violations
            checks += report.checked
        if found:
            _emit_report(out, label, found)
        total += len(found)
    out.write(f"{len(tree_list)} trees, {checks} checks, {total} violations\n")
    return 1 if total else 0


def _verify_line(args, out) -> int:
    if args.all_trees:
        structures = line.enumerate_extended(_colors(args), allow_large=args.allow_large)
    elif args.pointed:
        structures = [line.extended_from_pointed(line.parse_pointed(_read(args.pointed)))]
    else:
        raise UsageError("verify line needs --all-trees with --colors, or --pointed")
    max_len = args.max_len if args.max_len is not None else 4
    total = 0
    checks = 0
    for ext in structures:
        found = list(line.check_line_symbol_axioms(line.line_symbol(ext)).violations)
        report = line.verify_line_measure_axioms(ext, max_len)
        found += report.violations
        checks += report.checked
        if found:
            _emit_report(out, str(ext.rows), found)
        total += len(found)
    out.write(f"{len(structures)} structures, {checks} checks, {total} violations\n")
    return 1 if total else 0


def cmd_export_dot(args, out) -> int:
    out.write(trees.to_dot(_load_tree(args)))
    return 0


def cmd_table(args, out) -> int:
    out.write(bisection.format_table(bisection.obs_from_tree(_load_tree(args))))
    return 0


def cmd_symbol(args, out) -> int:
    out.write(symbols.format_symbol(measures.tree_symbol(_load_tree(args))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colored-circle",
        description="Trees, bisection structures, symbols and measures for the colored circle and line.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def colors_opt(p, required=False):
        p.add_argument("--colors", required=required, help="comma-separated color tokens, e.g. a,b,c")
        p.add_argument("--allow-large", action="store_true", help="raise the enumeration cap by one")

    def endpoints(p):
        p.add_argument("--from", dest="a", required=True, help="left endpoint color (or -inf)")
        p.add_argument("--to", dest="b", required=True, help="right endpoint color (or +inf)")
        p.add_argument("--word", default="", help="letters, concatenated or comma-separated")

    p = sub.add_parser("enumerate", help="count (and optionally list) structures")
    p.add_argument("kind", choices=["trees", "obs", "unoriented", "extended"])
    colors_opt(p, required=True)
    p.add_argument("--list", action="store_true", help="print every item after the count")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("eval", help="evaluate a measure three ways")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tree")
    group.add_argument("--pointed")
    endpoints(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("classify", help="classify (a, b, w) against a tree")
    p.add_argument("--tree", required=True)
    endpoints(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("universal", help="value of an interval class under every tree measure")
    colors_opt(p, required=True)
    endpoints(p)
    p.set_defaults(func=cmd_universal)

    p = sub.add_parser("verify", help="run axiom suites")
    p.add_argument("target", choices=["symbols", "measures", "line"])
    colors_opt(p)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--all-trees", action="store_true")
    source.add_argument("--tree")
    source.add_argument("--pointed")
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="print a tree as a DOT digraph")
    p.add_argument("--tree", required=True)
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("table", help="print the oriented structure of a tree")
    p.add_argument("--tree", required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("symbol", help="print the symbol of a tree, one matrix per letter")
    p.add_argument("--tree", required=True)
    p.set_defaults(func=cmd_symbol)
    return parser


def _attach_dash_values(argv: Sequence[str]) -> List[str]:
    # "--from -inf" would otherwise be read as an unknown option.
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--from", "--to", "--word"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_dash_values(argv))
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    if getattr(args, "target", None) in ("symbols", "measures") and args.pointed:
        sys.stderr.write("error: --pointed only applies to 'verify line'\n")
        return 2
    if getattr(args, "all_trees", False) and not args.colors:
        sys.stderr.write("error: --all-trees needs --colors\n")
        return 2
    try:
        return args.func(args, out)
    except (UsageError, ColoredCircleError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
