"""Evaluating measures ``nu[a,b](w)`` from symbols and from trees.

Three evaluators must agree on every tree-derived symbol:

* :func:`eval_recursive` peels the last letter,
  ``nu[a,b](w) = eta[a,b](w_n) * nu[a,w_n](w_1..w_{n-1})``;
* :func:`eval_product` multiplies ``eta[w_{i-1}, w_{i+1}](w_i)`` along the
  word padded with ``w_0 = a`` and ``w_{n+1} = b``;
* :func:`eval_closed_form` reads a sign straight off the tree.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .bisection import obs_from_tree
from .colors import ColorSet
from .symbols import SigmaSymbol, symbol_from_obs
from .trees import DirectedLabeledTree, enumerate_directed_trees, format_tree

GOOD = "good"
NOT_MONOTONIC = "not_monotonic"
REPEATED_NEGATIVE = "repeated_negative"


def _indices(colors: ColorSet, word: Iterable[str]) -> Tuple[int, ...]:
    return tuple(colors.index(c) for c in word)


# -- symbol based evaluators -------------------------------------------------


def nu_recursive(eta, a: int, b: int, w: Sequence[int]) -> int:
    """Index-level recursion on a raw ``eta[a][b][c]`` cube."""
    value = 1
    for k in range(len(w) - 1, -1, -1):
        step = eta[a][b][w[k]]
        if step == 0:
            return 0
        value *= step
        b = w[k]
    return value


def nu_product(eta, a: int, b: int, w: Sequence[int]) -> int:
    padded = (a, *w, b)
    value = 1
    for i in range(1, len(padded) - 1):
        value *= eta[padded[i - 1]][padded[i + 1]][padded[i]]
        if value == 0:
            return 0
    return value


def eval_recursive(symbol: SigmaSymbol, a: str, b: str, w: Sequence[str]) -> int:
    """``nu[a,b](w)`` by the last-letter recursion; the empty word gives 1."""
    idx = symbol.colors.index
    return nu_recursive(symbol.eta, idx(a), idx(b), _indices(symbol.colors, w))


def eval_product(symbol: SigmaSymbol, a: str, b: str, w: Sequence[str]) -> int:
    """``prod_i eta[w_{i-1}, w_{i+1}](w_i)`` with ``w_0 = a``, ``w_{n+1} = b``."""
    idx = symbol.colors.index
    return nu_product(symbol.eta, idx(a), idx(b), _indices(symbol.colors, w))


# -- closed form from the tree -------------------------------------------------


@dataclass(frozen=True)
class WordClass:
    tag: str
    m: Optional[int] = None

    @property
    def epsilon(self) -> Optional[int]:
        if self.tag != GOOD:
            return None
        return -1 if self.m % 2 else 1

    def __str__(self) -> str:
        if self.tag == GOOD:
            return f"good m={self.m} epsilon={self.epsilon}"
        return self.tag


def _positive(tree: DirectedLabeledTree, a: int, b: int, e: int) -> bool:
    """Whether path edge ``e`` points away from ``a`` and toward ``b``."""
    if a == b:
        return True
    if e == a:
        return tree.points_toward_index(a, b) == 1
    if e == b:
        return tree.points_toward_index(b, a) == 0
    return tree.points_toward_index(e, b) == 1


def classify_indices(tree: DirectedLabeledTree, a: int, b: int, w: Sequence[int]) -> WordClass:
    path = tree.path_indices(a, b)
    position = {e: k for k, e in enumerate(path)}
    padded = (a, *w, b)
    last = 0
    for letter in padded:
        pos = position.get(letter)
        if pos is None or pos < last:
            return WordClass(NOT_MONOTONIC)
        last = pos
    counts: Dict[int, int] = {}
    for letter in padded:
        counts[letter] = counts.get(letter, 0) + 1
    for letter, count in counts.items():
        if count > 1 and not _positive(tree, a, b, letter):
            return WordClass(REPEATED_NEGATIVE)
    m = sum(1 for letter in w if _positive(tree, a, b, letter))
    return WordClass(GOOD, m)


def classify_word(tree: DirectedLabeledTree, a: str, b: str, w: Sequence[str]) -> WordClass:
    """Decide whether ``(a, b, w)`` is good.

    The padded word ``a w_1 .. w_n b`` must walk the geodesic from ``a`` to
    ``b`` without stepping back (``not_monotonic`` otherwise), and any letter
    appearing twice in it must be positively oriented (``repeated_negative``
    otherwise). For good words ``m`` counts the positively oriented interior
    letters.
    """
    idx = tree.colors.index
    return classify_indices(tree, idx(a), idx(b), _indices(tree.colors, w))


def eval_closed_form(tree: DirectedLabeledTree, a: str, b: str, w: Sequence[str]) -> int:
    """``(-1)**m`` for good words, 0 for everything else."""
    cls = classify_word(tree, a, b, w)
    return cls.epsilon if cls.tag == GOOD else 0


def tree_symbol(tree: DirectedLabeledTree) -> SigmaSymbol:
    return symbol_from_obs(obs_from_tree(tree))


# -- axiom verification --------------------------------------------------------


@dataclass(frozen=True)
class MeasureViolation:
    rule: str  # "multiplicative" or "splitting"
    a: str
    b: str
    c: str
    w: Tuple[str, ...]
    w_prime: Tuple[str, ...]
    lhs: int
    rhs: int

    def __str__(self) -> str:
        w = "".join(self.w) or "()"
        if self.rule == "multiplicative":
            wp = "".join(self.w_prime) or "()"
            return (
                f"multiplicative: a={self.a} b={self.b} w={w} c={self.c} w'={wp}: "
                f"{self.lhs} != {self.rhs}"
            )
        return f"splitting: a={self.a} b={self.b} c={self.c} w={w}: {self.lhs} != {self.rhs}"


@dataclass
class MeasureReport:
    checked: int = 0
    violations: List[MeasureViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_measure_axioms(
    nu: Callable[[int, int, Tuple[int, ...]], int],
    lefts: Sequence[int],
    rights: Sequence[int],
    letters: Sequence[int],
    max_len: int,
    name: Callable[[int], str],
) -> MeasureReport:
    """Exhaustively test the multiplicative and splitting axioms for ``nu``.

    ``lefts``/``rights`` are the admissible left/right endpoint keys and
    ``letters`` the keys usable inside words (and as split points). Words of
    length up to ``max_len`` are covered; for the multiplicative axiom that
    bounds the length of ``w c w'``.
    """
    cache: Dict[Tuple[int, int, Tuple[int, ...]], int] = {}

    def value(a, b, w):
        key = (a, b, w)
        if key not in cache:
            cache[key] = nu(a, b, w)
        return cache[key]

    report = MeasureReport()
    words = [w for k in range(max_len + 1) for w in itertools.product(letters, repeat=k)]
    for a in lefts:
        for b in rights:
            for u in words:
                # nu[a,b](w c w') = nu[a,b](w w') * nu[w_r, w'_1](c)
                for p in range(len(u)):
                    w, c, wp = u[:p], u[p], u[p + 1:]
                    left = w[-1] if w else a
                    right = wp[0] if wp else b
                    lhs = value(a, b, u)
                    rhs = value(a, b, w + wp) * value(left, right, (c,))
                    report.checked += 1
                    if lhs != rhs:
                        report.violations.append(
                            MeasureViolation("multiplicative", name(a), name(b), name(c),
                                             tuple(map(name, w)), tuple(map(name, wp)), lhs, rhs)
                        )
                # nu[a,b](w) = sum_i nu[a,c](w[1,i]) nu[c,b](w(i,n]) + sum_{w_i=c} nu[a,c](w[1,i)) nu[c,b](w(i,n])
                n = len(u)
                for c in letters:
                    rhs = sum(value(a, c, u[:i]) * value(c, b, u[i:]) for i in range(n + 1))
                    rhs += sum(value(a, c, u[: i - 1]) * value(c, b, u[i:]) for i in range(1, n + 1) if u[i - 1] == c)
                    lhs = value(a, b, u)
                    report.checked += 1
                    if lhs != rhs:
                        report.violations.append(
                            MeasureViolation("splitting", name(a), name(b), name(c), tuple(map(name, u)), (), lhs, rhs)
                        )
    return report


def default_max_len(n: int) -> int:
    return 4 if n <= 3 else 3


def verify_measure_axioms(symbol: SigmaSymbol, max_len: Optional[int] = None) -> MeasureReport:
    """Check the measure axioms for the measure the symbol generates by recursion."""
    n = symbol.colors.n
    if max_len is None:
        max_len = default_max_len(n)
    eta = symbol.eta
    names = symbol.colors.colors
    keys = list(range(n))
    return check_measure_axioms(
        lambda a, b, w: nu_recursive(eta, a, b, w), keys, keys, keys, max_len, names.__getitem__
    )


# -- universal measure -----------------------------------------------------------


@lru_cache(maxsize=None)
def _trees(colors: ColorSet, allow_large: bool) -> Tuple[DirectedLabeledTree, ...]:
    return tuple(enumerate_directed_trees(colors, allow_large=allow_large))


def tree_id(index: int, tree: DirectedLabeledTree) -> str:
    digest = hashlib.sha256(format_tree(tree).encode("utf-8")).hexdigest()[:12]
    return f"{index}:{digest}"


@dataclass(frozen=True)
class UniversalVector:
    """Values of one interval class under every tree measure, in enumeration order."""

    trees: Tuple[DirectedLabeledTree, ...]
    values: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def as_dict(self) -> Dict[DirectedLabeledTree, int]:
        return dict(zip(self.trees, self.values))

    def lines(self) -> List[str]:
        return [f"{tree_id(i, t)} {v}" for i, (t, v) in enumerate(zip(self.trees, self.values))]


def universal_measure(colors: ColorSet, a: str, b: str, w: Sequence[str], allow_large: bool = False) -> UniversalVector:
    """Evaluate ``nu[a,b](w)`` under the measure of every directed tree."""
    ia, ib = colors.index(a), colors.index(b)
    iw = _indices(colors, w)
    trees = _trees(colors, allow_large)
    values = []
    for tree in trees:
        cls = classify_indices(tree, ia, ib, iw)
        values.append(cls.epsilon if cls.tag == GOOD else 0)
    return UniversalVector(trees, tuple(values))
