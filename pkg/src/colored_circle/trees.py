"""Directed trees whose edges are labeled bijectively by a color set.

Vertices are anonymous integers ``0..n``; only edge labels and edge
directions carry meaning. Two trees are isomorphic when a vertex bijection
maps each labeled edge onto the identically labeled edge with the same
direction, and :func:`canonical_form` picks one representative per class.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .colors import ColorSet, check_cap, enumeration_cap
from .errors import FormatError, LabelError, StructureError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class DirectedLabeledTree:
    """A tree on ``n + 1`` vertices with one directed edge per color.

    ``edges[i]`` is the ``(tail, head)`` pair of the edge labeled
    ``colors.colors[i]``.
    """

    colors: ColorSet
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        object.__setattr__(self, "edges", edges)
        _check_tree(self.colors.n, edges)

    @classmethod
    def from_mapping(cls, colors: ColorSet, edges: Dict[str, Edge]) -> "DirectedLabeledTree":
        missing = [c for c in colors if c not in edges]
        extra = [c for c in edges if c not in colors]
        if missing or extra:
            raise LabelError(f"edge labels must match the colors exactly (missing {missing}, unexpected {extra})")
        return cls(colors, tuple(edges[c] for c in colors))

    @property
    def n(self) -> int:
        return self.colors.n

    @property
    def vertex_count(self) -> int:
        return self.colors.n + 1

    def edge(self, color: str) -> Edge:
        return self.edges[self.colors.index(color)]

    def edge_map(self) -> Dict[str, Edge]:
        return dict(zip(self.colors, self.edges))

    @cached_property
    def head_sides(self) -> Tuple[frozenset, ...]:
        """For each edge, the vertices in the component its arrow points into once it is deleted."""
        return tuple(_component_without(self.edges, i, self.edges[i][1]) for i in range(self.n))

    @cached_property
    def _paths(self) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        return _all_edge_paths(self.edges)

    def path_indices(self, a: int, b: int) -> Tuple[int, ...]:
        """Geodesic between edge indices ``a`` and ``b``, inclusive."""
        return self._paths[a, b]

    def points_toward_index(self, c: int, d: int) -> int:
        # d's two endpoints lie on the same side of c, so one suffices.
        return 1 if self.edges[d][0] in self.head_sides[c] else 0


def _check_tree(n: int, edges: Sequence[Edge]) -> None:
    if len(edges) != n:
        raise LabelError(f"expected {n} edges, one per color, got {len(edges)}")
    seen = set()
    parent = list(range(n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for t, h in edges:
        for v in (t, h):
            if not 0 <= v <= n:
                raise StructureError(f"vertex {v} outside 0..{n}")
        if t == h:
            raise StructureError(f"loop at vertex {t}")
        key = (min(t, h), max(t, h))
        if key in seen:
            raise StructureError(f"parallel edges between {key[0]} and {key[1]}")
        seen.add(key)
        rt, rh = find(t), find(h)
        if rt == rh:
            raise StructureError(f"edge {t}-{h} closes a cycle")
        parent[rt] = rh
    # n acyclic edges on n + 1 vertices are automatically connected.


def _incidence(edges: Sequence[Edge]) -> List[List[int]]:
    inc: List[List[int]] = [[] for _ in range(len(edges) + 1)]
    for i, (t, h) in enumerate(edges):
        inc[t].append(i)
        inc[h].append(i)
    return inc


def _component_without(edges: Sequence[Edge], removed: int, start: int) -> frozenset:
    inc = _incidence(edges)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for e in inc[v]:
            if e == removed:
                continue
            t, h = edges[e]
            u = h if t == v else t
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return frozenset(seen)


def _all_edge_paths(edges: Sequence[Edge]) -> Dict[Tuple[int, int], Tuple[int, ...]]:
    # Shortest paths in the line graph of a tree are exactly its edge geodesics.
    n = len(edges)
    inc = _incidence(edges)
    adj = [sorted({f for v in edges[e] for f in inc[v] if f != e}) for e in range(n)]
    paths = {}
    for a in range(n):
        prev = {a: None}
        queue = deque([a])
        while queue:
            e = queue.popleft()
            for f in adj[e]:
                if f not in prev:
                    prev[f] = e
                    queue.append(f)
        for b in range(n):
            path = [b]
            while path[-1] != a:
                path.append(prev[path[-1]])
            paths[a, b] = tuple(reversed(path))
    return paths


def canonical_numbering(edges: Sequence[Edge]) -> Dict[int, int]:
    """Old vertex -> canonical vertex: root at the tail of edge 0, BFS expanding edges in color order."""
    inc = _incidence(edges)
    for lst in inc:
        lst.sort()
    root = edges[0][0]
    number = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for e in inc[v]:
            t, h = edges[e]
            u = h if t == v else t
            if u not in number:
                number[u] = len(number)
                queue.append(u)
    return number


def _canonical_edges(edges: Sequence[Edge]) -> Tuple[Edge, ...]:
    number = canonical_numbering(edges)
    return tuple((number[t], number[h]) for t, h in edges)


def canonical_form(tree: DirectedLabeledTree) -> DirectedLabeledTree:
    """Vertex-renumbered representative; equal for two trees iff they are isomorphic.

    The root is the tail of the edge with the least color, and vertices are
    numbered in breadth-first discovery order with incident edges expanded in
    color order. A single edge therefore always comes out as ``0 -> 1``.
    """
    return DirectedLabeledTree(tree.colors, _canonical_edges(tree.edges))


def is_canonical(tree: DirectedLabeledTree) -> bool:
    return _canonical_edges(tree.edges) == tree.edges


def permute_vertices(tree: DirectedLabeledTree, perm: Sequence[int]) -> DirectedLabeledTree:
    """Apply the vertex relabeling ``v -> perm[v]``."""
    if sorted(perm) != list(range(tree.vertex_count)):
        raise ValueError("perm must be a permutation of the vertex indices")
    return DirectedLabeledTree(tree.colors, tuple((perm[t], perm[h]) for t, h in tree.edges))


# -- enumeration -------------------------------------------------------------


def prufer_decode(seq: Sequence[int], vertex_count: int) -> List[Tuple[int, int]]:
    """Undirected edge list of the vertex-labeled tree with Prüfer sequence ``seq``."""
    if vertex_count < 2:
        raise ValueError("a tree with an edge needs at least two vertices")
    if len(seq) != vertex_count - 2:
        raise ValueError("Prüfer sequence must have length vertex_count - 2")
    degree = [1] * vertex_count
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(vertex_count) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(vertex_count) if degree[x] == 1)
    edges.append((u, w))
    return edges


def vertex_labeled_trees(vertex_count: int) -> Iterable[List[Tuple[int, int]]]:
    """All ``vertex_count ** (vertex_count - 2)`` trees on labeled vertices (Cayley)."""
    for seq in itertools.product(range(vertex_count), repeat=vertex_count - 2):
        yield prufer_decode(seq, vertex_count)


def _undirected_key(edges: Sequence[Edge]) -> Tuple[Edge, ...]:
    # Either endpoint of edge 0 may serve as root; keep the smaller encoding.
    flipped = [(edges[0][1], edges[0][0])] + list(edges[1:])
    best = None
    for variant in (edges, flipped):
        key = tuple((min(t, h), max(t, h)) for t, h in _canonical_edges(variant))
        if best is None or key < best:
            best = key
    return best


def enumerate_undirected_classes(n: int) -> List[Tuple[Edge, ...]]:
    """Isomorphism classes of edge-labeled (undirected) trees with ``n`` edges.

    Each class is returned as a sorted-pair edge tuple indexed by color.
    """
    classes = set()
    for tree in vertex_labeled_trees(n + 1):
        for labels in itertools.permutations(range(n)):
            labeled = [None] * n
            for pos, lab in enumerate(labels):
                labeled[lab] = tree[pos]
            classes.add(_undirected_key(labeled))
    return sorted(classes)


def enumerate_directed_trees(colors: ColorSet, allow_large: bool = False) -> List[DirectedLabeledTree]:
    """Every isomorphism class of directed color-labeled trees, as sorted canonical forms.

    Vertex-labeled trees come from Prüfer sequences; each gets every edge
    labeling and is reduced to its undirected class, and every class then gets
    all ``2**n`` orientations before the final canonicalization.
    """
    n = colors.n
    check_cap(n, enumeration_cap(allow_large=allow_large), "directed tree enumeration")
    found = set()
    for base in enumerate_undirected_classes(n):
        for mask in range(1 << n):
            directed = tuple((h, t) if mask >> i & 1 else (t, h) for i, (t, h) in enumerate(base))
            found.add(_canonical_edges(directed))
    return [DirectedLabeledTree(colors, edges) for edges in sorted(found)]


def directed_tree_count(n: int) -> int:
    """Closed form ``2**n * (n + 1)**(n - 2)``; equals 1 at ``n = 1``."""
    if n == 1:
        return 1
    return 2**n * (n + 1) ** (n - 2)


# -- path queries ------------------------------------------------------------


def geodesic(tree: DirectedLabeledTree, a: str, b: str) -> Tuple[str, ...]:
    """Colors of the edges on the shortest path from edge ``a`` to edge ``b``, both included."""
    ia, ib = tree.colors.index(a), tree.colors.index(b)
    return tuple(tree.colors.colors[i] for i in tree.path_indices(ia, ib))


def points_toward(tree: DirectedLabeledTree, c: str, d: str) -> int:
    """1 if edge ``c`` points toward the component holding edge ``d`` once ``c`` is removed."""
    ic, id_ = tree.colors.index(c), tree.colors.index(d)
    if ic == id_:
        raise ValueError("points_toward needs two distinct edges")
    return tree.points_toward_index(ic, id_)


# -- text formats ------------------------------------------------------------


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {tok!r}", lineno) from None


def parse_tree_lines(text: str) -> Tuple[ColorSet, int, Dict[str, Edge], List[Tuple[int, str]]]:
    """Split a tree document into colors, vertex count, edges, and unrecognized lines."""
    colors: Optional[ColorSet] = None
    vertices: Optional[int] = None
    edges: Dict[str, Edge] = {}
    rest = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("colors:"):
            if colors is not None:
                raise FormatError("duplicate colors line", lineno)
            toks = line[len("colors:"):].split()
            if not toks:
                raise FormatError("colors line lists no colors", lineno)
            try:
                colors = ColorSet(tuple(toks))
            except ValueError as exc:
                raise FormatError(str(exc), lineno) from None
        elif line.startswith("vertices:"):
            if vertices is not None:
                raise FormatError("duplicate vertices line", lineno)
            vertices = _parse_int(line[len("vertices:"):].strip(), lineno, "vertex count")
        elif line.startswith("edge "):
            head, sep, body = line[len("edge "):].partition(":")
            label = head.strip()
            parts = body.split("->")
            if not sep or not label or len(parts) != 2:
                raise FormatError(f"expected 'edge <color>: <tail> -> <head>', got {raw.strip()!r}", lineno)
            tail = _parse_int(parts[0].strip(), lineno, "tail")
            tip = _parse_int(parts[1].strip(), lineno, "head")
            if label in edges:
                raise LabelError(f"line {lineno}: color {label!r} labels more than one edge")
            edges[label] = (tail, tip)
        else:
            rest.append((lineno, line))
    if colors is None:
        raise FormatError("missing 'colors:' line")
    if vertices is None:
        raise FormatError("missing 'vertices:' line")
    return colors, vertices, edges, rest


def parse_tree(text: str) -> DirectedLabeledTree:
    """Parse the tree file format and validate that the result is a tree.

    Raises :class:`FormatError` for malformed lines, :class:`StructureError`
    when the edges are not a tree on the declared vertices, and
    :class:`LabelError` when the labels are not exactly the colors.
    """
    colors, vertices, edges, rest = parse_tree_lines(text)
    if rest:
        lineno, line = rest[0]
        raise FormatError(f"unrecognized line {line!r}", lineno)
    return build_tree(colors, vertices, edges)


def build_tree(colors: ColorSet, vertices: int, edges: Dict[str, Edge]) -> DirectedLabeledTree:
    for c in edges:
        if c not in colors:
            raise LabelError(f"edge label {c!r} is not one of the colors")
    missing = [c for c in colors if c not in edges]
    if missing:
        raise LabelError(f"no edge labeled {missing}")
    for c, (t, h) in edges.items():
        for v in (t, h):
            if not 0 <= v < vertices:
                raise StructureError(f"edge {c}: vertex {v} outside 0..{vertices - 1}")
    if vertices != colors.n + 1:
        raise StructureError(f"a tree with {colors.n} edges has {colors.n + 1} vertices, not {vertices}")
    return DirectedLabeledTree.from_mapping(colors, edges)


def format_tree(tree: DirectedLabeledTree) -> str:
    """Serialize the canonical form, edges in color order."""
    canon = canonical_form(tree)
    lines = [f"colors: {' '.join(tree.colors)}", f"vertices: {tree.vertex_count}"]
    for c, (t, h) in zip(tree.colors, canon.edges):
        lines.append(f"edge {c}: {t} -> {h}")
    return "\n".join(lines) + "\n"


def to_dot(tree: DirectedLabeledTree, name: str = "T") -> str:
    canon = canonical_form(tree)
    lines = [f"digraph {name} {{"]
    for v in range(canon.vertex_count):
        lines.append(f"  v{v};")
    for c, (t, h) in zip(canon.colors, canon.edges):
        label = c.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  v{t} -> v{h} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
