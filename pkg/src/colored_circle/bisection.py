"""Oriented and unoriented bisection structures and their bijection with trees.

An oriented structure is a zero-diagonal {0,1} table ``S`` over the colors.
Row ``x`` splits the other colors into the side ``x`` points toward
(``S[x][y] = 1``) and the side it points away from. Validity is the
betweenness condition: for every ordered triple of distinct colors
``(a, b, c)``, ``(S[a][b] - S[a][c]) * (S[b][a] - S[b][c]) == 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .colors import ColorSet, check_cap, enumeration_cap
from .errors import FormatError, InvalidStructureError
from .trees import DirectedLabeledTree, canonical_form

Table = Tuple[Tuple[int, ...], ...]


def _as_table(colors: ColorSet, rows) -> Table:
    n = colors.n
    table = tuple(tuple(int(v) for v in row) for row in rows)
    if len(table) != n or any(len(row) != n for row in table):
        raise InvalidStructureError(f"expected a {n}x{n} table")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if v not in (0, 1):
                raise InvalidStructureError(
                    f"entry ({colors.colors[i]}, {colors.colors[j]}) is {v}, not 0 or 1",
                    witness=(colors.colors[i], colors.colors[j]),
                )
    return table


def star_violation(table: Sequence[Sequence[int]]) -> Optional[Tuple[int, int, int]]:
    """First ordered distinct triple breaking the betweenness condition, or None."""
    n = len(table)
    for a, b, c in itertools.permutations(range(n), 3):
        if (table[a][b] - table[a][c]) * (table[b][a] - table[b][c]) != 0:
            return (a, b, c)
    return None


def failure_count(table: Sequence[Sequence[int]], x: int, y: int, z: int) -> int:
    """How many of ``S_x(y)=S_x(z)``, ``S_y(x)=S_y(z)``, ``S_z(x)=S_z(y)`` fail."""
    return (
        (table[x][y] != table[x][z])
        + (table[y][x] != table[y][z])
        + (table[z][x] != table[z][y])
    )


@dataclass(frozen=True)
class ObStructure:
    """An oriented bisection structure; construction validates it."""

    colors: ColorSet
    table: Table

    def __post_init__(self):
        table = _as_table(self.colors, self.table)
        object.__setattr__(self, "table", table)
        for i in range(self.colors.n):
            if table[i][i] != 0:
                c = self.colors.colors[i]
                raise InvalidStructureError(f"diagonal entry ({c}, {c}) must be 0", witness=(c, c))
        bad = star_violation(table)
        if bad is not None:
            names = tuple(self.colors.colors[i] for i in bad)
            a, b, c = names
            raise InvalidStructureError(
                f"betweenness condition fails at ({a}, {b}, {c}): "
                f"(S[{a}][{b}] - S[{a}][{c}]) * (S[{b}][{a}] - S[{b}][{c}]) != 0",
                witness=names,
            )

    @property
    def n(self) -> int:
        return self.colors.n

    def __call__(self, a: str, b: str) -> int:
        return self.table[self.colors.index(a)][self.colors.index(b)]


def validate_obs(colors: ColorSet, rows) -> ObStructure:
    """Return the structure if ``rows`` is valid; raise with a witness otherwise."""
    return ObStructure(colors, rows)


def obs_from_tree(tree: DirectedLabeledTree) -> ObStructure:
    """``S[c][d] = 1`` iff edge ``c`` points toward edge ``d``; zero diagonal."""
    n = tree.n
    table = tuple(
        tuple(0 if c == d else tree.points_toward_index(c, d) for d in range(n)) for c in range(n)
    )
    return ObStructure(tree.colors, table)


def tree_from_obs(obs: ObStructure) -> DirectedLabeledTree:
    """Rebuild the unique directed tree inducing ``obs``, in canonical form.

    Half-edges ``(x, side)`` are glued when ``x`` and ``y`` are adjacent
    (no third color separates them) and each lies on the recorded side of the
    other. The glued classes are the vertices; edge ``x`` runs from the class
    of ``(x, 0)`` to the class of ``(x, 1)``.
    """
    S = obs.table
    n = obs.n
    parent = list(range(2 * n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, y in itertools.combinations(range(n), 2):
        if all(S[z][x] == S[z][y] for z in range(n) if z != x and z != y):
            parent[find(2 * x + S[x][y])] = find(2 * y + S[y][x])

    roots = {}
    for node in range(2 * n):
        roots.setdefault(find(node), len(roots))
    edges = tuple((roots[find(2 * x)], roots[find(2 * x + 1)]) for x in range(n))
    return canonical_form(DirectedLabeledTree(obs.colors, edges))


def _candidate_rows(n: int, x: int) -> List[Tuple[int, ...]]:
    return [bits[:x] + (0,) + bits[x:] for bits in itertools.product((0, 1), repeat=n - 1)]


def _compatible(n: int, x: int, rx, y: int, ry) -> bool:
    for c in range(n):
        if c != x and c != y and (rx[y] - rx[c]) * (ry[x] - ry[c]) != 0:
            return False
    return True


def _backtrack(n: int, choices: List[List[Tuple[int, ...]]]) -> List[Table]:
    # The condition only couples rows pairwise, so rows can be fixed one at a time.
    out: List[Table] = []
    rows: List[Tuple[int, ...]] = []

    def extend(x):
        if x == n:
            out.append(tuple(rows))
            return
        for r in choices[x]:
            if all(_compatible(n, y, rows[y], x, r) and _compatible(n, x, r, y, rows[y]) for y in range(x)):
                rows.append(r)
                extend(x + 1)
                rows.pop()

    extend(0)
    return out


def enumerate_obs(colors: ColorSet, allow_large: bool = False) -> List[ObStructure]:
    """All oriented bisection structures, in lexicographic table order."""
    n = colors.n
    check_cap(n, enumeration_cap(allow_large=allow_large), "oriented structure enumeration")
    tables = _backtrack(n, [_candidate_rows(n, x) for x in range(n)])
    return [ObStructure(colors, t) for t in tables]


def brute_force_obs_count(n: int) -> int:
    """Filter all ``2**(n*(n-1))`` zero-diagonal tables directly (small ``n`` only)."""
    count = 0
    for rows in itertools.product(*[_candidate_rows(n, x) for x in range(n)]):
        if star_violation(rows) is None:
            count += 1
    return count


# -- unoriented structures ---------------------------------------------------


def _normalize_row(row: Sequence[int], x: int) -> Tuple[int, ...]:
    first = next((j for j in range(len(row)) if j != x), None)
    if first is not None and row[first] == 1:
        return tuple(0 if j == x else 1 - v for j, v in enumerate(row))
    return tuple(row)


@dataclass(frozen=True)
class UnorientedBisection:
    """A bisection structure stored as orientation-normalized {0,1} rows.

    Row ``x`` encodes the partition of the other colors into at most two
    blocks; the first color other than ``x`` always sits in block 0, and a
    constant row means a single block.
    """

    colors: ColorSet
    rows: Table

    def __post_init__(self):
        rows = _as_table(self.colors, self.rows)
        object.__setattr__(self, "rows", rows)
        for x, row in enumerate(rows):
            if row[x] != 0 or _normalize_row(row, x) != row:
                raise InvalidStructureError(f"row {self.colors.colors[x]} is not normalized")
        bad = star_violation(rows)
        if bad is not None:
            names = tuple(self.colors.colors[i] for i in bad)
            raise InvalidStructureError(f"more than one relation fails on {set(names)}", witness=names)

    def related(self, x: str, y: str, z: str) -> bool:
        """``R_x(y, z)``: ``y`` and ``z`` lie in the same block once ``x`` is removed."""
        ix, iy, iz = (self.colors.index(c) for c in (x, y, z))
        if ix in (iy, iz):
            raise ValueError("R_x is a relation on the colors other than x")
        return self.rows[ix][iy] == self.rows[ix][iz]

    def blocks(self, x: str) -> Tuple[Tuple[str, ...], ...]:
        ix = self.colors.index(x)
        out = []
        for side in (0, 1):
            block = tuple(c for j, c in enumerate(self.colors) if j != ix and self.rows[ix][j] == side)
            if block:
                out.append(block)
        return tuple(out)


def forget_orientation(obs: ObStructure) -> UnorientedBisection:
    return UnorientedBisection(obs.colors, tuple(_normalize_row(row, x) for x, row in enumerate(obs.table)))


def enumerate_unoriented(colors: ColorSet, allow_large: bool = False) -> List[UnorientedBisection]:
    """All bisection structures on the colors; defined for ``n >= 2``."""
    n = colors.n
    if n < 2:
        raise ValueError("unoriented structures are enumerated for n >= 2 only")
    check_cap(n, enumeration_cap(allow_large=allow_large), "unoriented structure enumeration")
    choices = [[r for r in _candidate_rows(n, x) if _normalize_row(r, x) == r] for x in range(n)]
    return [UnorientedBisection(colors, t) for t in _backtrack(n, choices)]


def unoriented_count(n: int) -> int:
    """``(n + 1)**(n - 2)`` for ``n >= 2``."""
    if n < 2:
        raise ValueError("formula holds for n >= 2")
    return (n + 1) ** (n - 2)


# -- text formats ------------------------------------------------------------


def parse_obs(text: str) -> ObStructure:
    """Parse ``colors: ...`` followed by one row of space-separated bits per color."""
    colors = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("colors:"):
            if colors is not None:
                raise FormatError("duplicate colors line", lineno)
            try:
                colors = ColorSet(tuple(line[len("colors:"):].split()))
            except ValueError as exc:
                raise FormatError(str(exc), lineno) from None
            continue
        if colors is None:
            raise FormatError("rows before the colors line", lineno)
        toks = line.split()
        if len(toks) != colors.n or any(t not in ("0", "1") for t in toks):
            raise FormatError(f"expected {colors.n} bits, got {line!r}", lineno)
        rows.append(tuple(int(t) for t in toks))
    if colors is None:
        raise FormatError("missing 'colors:' line")
    if len(rows) != colors.n:
        raise FormatError(f"expected {colors.n} rows, got {len(rows)}")
    return ObStructure(colors, tuple(rows))


def format_obs(obs: ObStructure) -> str:
    lines = [f"colors: {' '.join(obs.colors)}"]
    lines += [" ".join(str(v) for v in row) for row in obs.table]
    return "\n".join(lines) + "\n"


def format_table(obs: ObStructure) -> str:
    """Labeled grid: a header of column colors, then one labeled row per color."""
    width = max(len(c) for c in obs.colors)
    header = " " * width + " " + " ".join(c.rjust(width) for c in obs.colors)
    lines = [header.rstrip()]
    for c, row in zip(obs.colors, obs.table):
        lines.append(c.ljust(width) + " " + " ".join(str(v).rjust(width) for v in row))
    return "\n".join(lines) + "\n"
