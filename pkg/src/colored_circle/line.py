"""Measures for the colored line: endpoints may also be ``-inf`` or ``+inf``.

An extended structure adds two columns to an oriented structure, stored as
``rows[c][n]`` (toward ``-inf``) and ``rows[c][n + 1]`` (toward ``+inf``).
Column keys ``0..n-1`` are colors, so the symbol formula
``eta[a][b](c) = rows[c][a] - rows[c][b] - delta(b, c)`` applies uniformly to
left endpoints ``a`` in ``colors + [-inf]`` and right endpoints ``b`` in
``colors + [+inf]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .bisection import ObStructure, star_violation, tree_from_obs
from .colors import NEG_INF, POS_INF, ColorSet, check_cap, enumeration_cap
from .errors import ColoredCircleError, FormatError, InvalidStructureError, StructureError
from .measures import MeasureReport, check_measure_axioms
from .symbols import SymbolReport, SymbolViolation
from .trees import DirectedLabeledTree, canonical_numbering, format_tree, parse_tree_lines, build_tree

DEFAULT_LINE_MAX_N = 3


def _key_name(colors: ColorSet, k: int) -> str:
    n = colors.n
    if k < n:
        return colors.colors[k]
    return NEG_INF if k == n else POS_INF


def _line_condition_violation(rows, n: int, columns) -> Optional[Tuple[int, int, int]]:
    """First ``(a, b, c)`` with ``a != b`` where both ``S[a][b] == S[a][c]`` and ``S[b][a] == S[b][c]`` fail."""
    for a, b in itertools.permutations(range(n), 2):
        for c in columns:
            if rows[a][b] != rows[a][c] and rows[b][a] != rows[b][c]:
                return (a, b, c)
    return None


@dataclass(frozen=True)
class ExtendedStructure:
    """An oriented structure plus its ``-inf`` and ``+inf`` columns."""

    colors: ColorSet
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = self.colors.n
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != n or any(len(r) != n + 2 for r in rows):
            raise InvalidStructureError(f"expected {n} rows of {n + 2} entries (colors, -inf, +inf)")
        if any(v not in (0, 1) for r in rows for v in r):
            raise InvalidStructureError("entries must be 0 or 1")
        # Validates the diagonal and the betweenness condition on the colors.
        ObStructure(self.colors, tuple(r[:n] for r in rows))
        bad = _line_condition_violation(rows, n, (n, n + 1))
        if bad is not None:
            names = tuple(_key_name(self.colors, k) for k in bad)
            a, b, c = names
            raise InvalidStructureError(
                f"neither S[{a}][{b}] = S[{a}][{c}] nor S[{b}][{a}] = S[{b}][{c}]", witness=names
            )

    @property
    def n(self) -> int:
        return self.colors.n

    @property
    def restriction(self) -> ObStructure:
        n = self.n
        return ObStructure(self.colors, tuple(r[:n] for r in self.rows))

    @property
    def minus_column(self) -> Tuple[int, ...]:
        return tuple(r[self.n] for r in self.rows)

    @property
    def plus_column(self) -> Tuple[int, ...]:
        return tuple(r[self.n + 1] for r in self.rows)

    def __call__(self, a: str, b: str) -> int:
        return self.rows[self.colors.index(a)][_endpoint_key(self.colors, b, allow=(NEG_INF, POS_INF))]


def validate_extended(colors: ColorSet, rows) -> ExtendedStructure:
    """Accept ``rows`` (colors, then ``-inf``, then ``+inf`` columns) or raise with a witness."""
    return ExtendedStructure(colors, rows)


@dataclass(frozen=True)
class PointedTree:
    """A directed tree with marked vertices ``x`` (for ``+inf``) and ``y`` (for ``-inf``)."""

    tree: DirectedLabeledTree
    x: int
    y: int

    def __post_init__(self):
        for name, v in (("x", self.x), ("y", self.y)):
            if not 0 <= v < self.tree.vertex_count:
                raise StructureError(f"{name} = {v} is not a vertex of the tree")

    def canonical(self) -> "PointedTree":
        number = canonical_numbering(self.tree.edges)
        edges = tuple((number[t], number[h]) for t, h in self.tree.edges)
        return PointedTree(DirectedLabeledTree(self.tree.colors, edges), number[self.x], number[self.y])


def enumerate_pointed_trees(trees: Sequence[DirectedLabeledTree]) -> List[PointedTree]:
    return [PointedTree(t, x, y) for t in trees for x in range(t.vertex_count) for y in range(t.vertex_count)]


def extended_from_pointed(pointed: PointedTree) -> ExtendedStructure:
    """``S[a][+inf] = 1`` iff edge ``a`` points toward ``x``; likewise ``-inf`` with ``y``."""
    tree = pointed.tree
    n = tree.n
    rows = []
    for c in range(n):
        side = tree.head_sides[c]
        row = [0 if c == d else tree.points_toward_index(c, d) for d in range(n)]
        row.append(1 if pointed.y in side else 0)
        row.append(1 if pointed.x in side else 0)
        rows.append(tuple(row))
    return ExtendedStructure(tree.colors, tuple(rows))


def _locate(tree: DirectedLabeledTree, column: Tuple[int, ...], label: str) -> int:
    for v in range(tree.vertex_count):
        if all((v in tree.head_sides[c]) == bool(column[c]) for c in range(tree.n)):
            return v
    raise InvalidStructureError(f"the {label} column {column} matches no vertex of the tree", witness=(label,))


def pointed_from_extended(ext: ExtendedStructure) -> PointedTree:
    """Recover ``(T, x, y)``: ``T`` from the color block, ``x``/``y`` as the vertices the columns point to."""
    tree = tree_from_obs(ext.restriction)
    return PointedTree(tree, _locate(tree, ext.plus_column, POS_INF), _locate(tree, ext.minus_column, NEG_INF))


def enumerate_extended(colors: ColorSet, allow_large: bool = False) -> List[ExtendedStructure]:
    """Brute-force filter over every zero-diagonal table with the two extra columns."""
    n = colors.n
    check_cap(n, enumeration_cap(DEFAULT_LINE_MAX_N, allow_large), "extended structure enumeration")
    candidates = [
        [bits[:x] + (0,) + bits[x:] for bits in itertools.product((0, 1), repeat=n + 1)] for x in range(n)
    ]
    found = []
    for rows in itertools.product(*candidates):
        if star_violation([r[:n] for r in rows]) is not None:
            continue
        if _line_condition_violation(rows, n, (n, n + 1)) is not None:
            continue
        found.append(ExtendedStructure(colors, rows))
    return found


def line_count(n: int) -> int:
    """``(2n + 2)**n``."""
    return (2 * n + 2) ** n


# -- symbols and measures ------------------------------------------------------


def _endpoint_key(colors: ColorSet, token: str, allow: Tuple[str, ...]) -> int:
    if token in allow:
        return colors.n if token == NEG_INF else colors.n + 1
    if token in (NEG_INF, POS_INF):
        raise ColoredCircleError(f"{token} cannot be used in this position")
    return colors.index(token)


@dataclass(frozen=True)
class LineSymbol:
    """``eta[a][b][c]`` for left keys ``a``, right keys ``b`` and colors ``c``.

    Keys ``0..n-1`` are colors, ``n`` is ``-inf`` and ``n + 1`` is ``+inf``.
    Entries with ``a = +inf`` or ``b = -inf`` are stored but meaningless.
    """

    colors: ColorSet
    eta: Tuple[Tuple[Tuple[int, ...], ...], ...]

    def __call__(self, a: str, b: str, c: str) -> int:
        ka = _endpoint_key(self.colors, a, (NEG_INF,))
        kb = _endpoint_key(self.colors, b, (POS_INF,))
        kc = _endpoint_key(self.colors, c, ())
        return self.eta[ka][kb][kc]

    @property
    def lefts(self) -> List[int]:
        return list(range(self.colors.n + 1))

    @property
    def rights(self) -> List[int]:
        return list(range(self.colors.n)) + [self.colors.n + 1]


def line_symbol(ext: ExtendedStructure) -> LineSymbol:
    """``eta[a][b](c) = S[c][a] - S[c][b] - delta(b, c)`` with the infinite columns read from ``ext``."""
    rows = ext.rows
    n = ext.n
    eta = tuple(
        tuple(tuple(rows[c][a] - rows[c][b] - (1 if b == c else 0) for c in range(n)) for b in range(n + 2))
        for a in range(n + 2)
    )
    return LineSymbol(ext.colors, eta)


def nu_line(eta, a: int, b: int, w: Sequence[int]) -> int:
    value = 1
    for k in range(len(w) - 1, -1, -1):
        step = eta[a][b][w[k]]
        if step == 0:
            return 0
        value *= step
        b = w[k]
    return value


def eval_line_measure(pointed: PointedTree, a: str, b: str, w: Sequence[str]) -> int:
    """``nu[a,b](w)`` for the pointed tree, by the last-letter recursion.

    ``a`` may be ``-inf`` and ``b`` may be ``+inf``; letters must be colors.
    """
    colors = pointed.tree.colors
    ka = _endpoint_key(colors, a, (NEG_INF,))
    kb = _endpoint_key(colors, b, (POS_INF,))
    kw = tuple(_endpoint_key(colors, c, ()) for c in w)
    return nu_line(line_symbol(extended_from_pointed(pointed)).eta, ka, kb, kw)


def check_line_symbol_axioms(symbol: LineSymbol) -> SymbolReport:
    """Product rule over all left ``a``, right ``b`` and colors ``c, d``; splitting rule with ``d`` a color."""
    n = symbol.colors.n
    e = symbol.eta
    name = lambda k: _key_name(symbol.colors, k)  # noqa: E731
    report = SymbolReport()
    for a in symbol.lefts:
        for b in symbol.rights:
            for c, d in itertools.product(range(n), repeat=2):
                lhs = e[a][b][c] * e[c][b][d]
                rhs = e[a][b][d] * e[a][d][c]
                if lhs != rhs:
                    report.violations.append(SymbolViolation("product", (name(a), name(b), name(c), name(d)), lhs, rhs))
                lhs = e[a][b][c]
                rhs = e[a][d][c] + e[d][b][c] + (1 if c == d else 0)
                if lhs != rhs:
                    report.violations.append(SymbolViolation("splitting", (name(a), name(b), name(c), name(d)), lhs, rhs))
    return report


def verify_line_measure_axioms(ext: ExtendedStructure, max_len: int = 4) -> MeasureReport:
    """Multiplicative and splitting axioms with endpoints from the extended alphabet."""
    symbol = line_symbol(ext)
    n = ext.n
    return check_measure_axioms(
        lambda a, b, w: nu_line(symbol.eta, a, b, w),
        symbol.lefts,
        symbol.rights,
        list(range(n)),
        max_len,
        lambda k: _key_name(ext.colors, k),
    )


# -- text format -----------------------------------------------------------------


def parse_pointed(text: str) -> PointedTree:
    """Tree format plus ``x: <vertex>`` and ``y: <vertex>`` lines."""
    colors, vertices, edges, rest = parse_tree_lines(text)
    marks = {}
    for lineno, line in rest:
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in ("x", "y"):
            raise FormatError(f"unrecognized line {line!r}", lineno)
        if key in marks:
            raise FormatError(f"duplicate {key} line", lineno)
        try:
            marks[key] = int(value.strip())
        except ValueError:
            raise FormatError(f"{key} must be a vertex index, got {value.strip()!r}", lineno) from None
    for key in ("x", "y"):
        if key not in marks:
            raise FormatError(f"missing '{key}:' line")
    return PointedTree(build_tree(colors, vertices, edges), marks["x"], marks["y"])


def format_pointed(pointed: PointedTree) -> str:
    canon = pointed.canonical()
    return format_tree(canon.tree) + f"x: {canon.x}\ny: {canon.y}\n"
