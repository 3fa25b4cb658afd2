"""Integer symbols ``eta[a][b][c]`` and their correspondence with oriented structures."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, Union

from .bisection import ObStructure
from .colors import ColorSet
from .errors import SymbolError

Cube = Tuple[Tuple[Tuple[int, ...], ...], ...]


def _delta(i: int, j: int) -> int:
    return 1 if i == j else 0


@dataclass(frozen=True)
class SigmaSymbol:
    """A dense ``n x n x n`` integer table indexed ``eta[a][b][c]``.

    Construction only checks the shape; :func:`check_symbol_axioms` decides
    whether the table actually satisfies the symbol identities.
    """

    colors: ColorSet
    eta: Cube

    def __post_init__(self):
        n = self.colors.n
        eta = tuple(tuple(tuple(int(v) for v in row) for row in plane) for plane in self.eta)
        if len(eta) != n or any(len(p) != n or any(len(r) != n for r in p) for p in eta):
            raise ValueError(f"symbol table must be {n}x{n}x{n}")
        object.__setattr__(self, "eta", eta)

    def __call__(self, a: str, b: str, c: str) -> int:
        idx = self.colors.index
        return self.eta[idx(a)][idx(b)][idx(c)]

    def replace(self, a: int, b: int, c: int, value: int) -> "SigmaSymbol":
        """Copy with one entry (by indices) overwritten."""
        cube = [[list(row) for row in plane] for plane in self.eta]
        cube[a][b][c] = value
        return SigmaSymbol(self.colors, cube)

    def matrices(self) -> List[Tuple[str, Tuple[Tuple[int, ...], ...]]]:
        """One ``a x b`` matrix per fixed argument ``c``, in color order."""
        n = self.colors.n
        return [
            (c, tuple(tuple(self.eta[a][b][k] for b in range(n)) for a in range(n)))
            for k, c in enumerate(self.colors)
        ]


def symbol_from_obs(obs: ObStructure) -> SigmaSymbol:
    """``eta[a][b][c] = S[c][a] - S[c][b] - delta(b, c)``."""
    S = obs.table
    n = obs.n
    eta = tuple(
        tuple(tuple(S[c][a] - S[c][b] - _delta(b, c) for c in range(n)) for b in range(n))
        for a in range(n)
    )
    return SigmaSymbol(obs.colors, eta)


@dataclass(frozen=True)
class SymbolViolation:
    rule: str  # "product" or "splitting"
    indices: Tuple[str, str, str, str]
    lhs: int
    rhs: int

    def __str__(self) -> str:
        a, b, c, d = self.indices
        if self.rule == "product":
            eq = f"eta[{a},{b}]({c})*eta[{c},{b}]({d}) = eta[{a},{b}]({d})*eta[{a},{d}]({c})"
        else:
            eq = f"eta[{a},{b}]({c}) = eta[{a},{d}]({c}) + eta[{d},{b}]({c}) + delta({c},{d})"
        return f"{self.rule}: {eq} fails ({self.lhs} != {self.rhs})"


@dataclass
class SymbolReport:
    violations: List[SymbolViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_symbol_axioms(symbol: Union[SigmaSymbol, Tuple[ColorSet, Sequence]]) -> SymbolReport:
    """Check both symbol identities over every quadruple ``(a, b, c, d)``.

    Product rule: ``eta_ab(c) eta_cb(d) = eta_ab(d) eta_ad(c)``.
    Splitting rule: ``eta_ab(c) = eta_ad(c) + eta_db(c) + delta_cd``.
    Every failure is recorded with both sides.
    """
    if not isinstance(symbol, SigmaSymbol):
        symbol = SigmaSymbol(*symbol)
    e = symbol.eta
    names = symbol.colors.colors
    n = symbol.colors.n
    report = SymbolReport()
    for a, b, c, d in itertools.product(range(n), repeat=4):
        lhs = e[a][b][c] * e[c][b][d]
        rhs = e[a][b][d] * e[a][d][c]
        if lhs != rhs:
            report.violations.append(SymbolViolation("product", (names[a], names[b], names[c], names[d]), lhs, rhs))
        lhs = e[a][b][c]
        rhs = e[a][d][c] + e[d][b][c] + _delta(c, d)
        if lhs != rhs:
            report.violations.append(SymbolViolation("splitting", (names[a], names[b], names[c], names[d]), lhs, rhs))
    return report


def obs_from_symbol(symbol: SigmaSymbol) -> ObStructure:
    """Recover the unique structure with ``symbol_from_obs(S) == symbol``.

    ``S[a][b] = -eta[a][b][a]`` off the diagonal. Over the integers the only
    idempotents are 0 and 1, so every such entry must be 0 or -1.
    """
    n = symbol.colors.n
    names = symbol.colors.colors
    e = symbol.eta
    for a, b in itertools.permutations(range(n), 2):
        if e[a][b][a] not in (0, -1):
            raise SymbolError(
                f"eta[{names[a]},{names[b]}]({names[a]}) = {e[a][b][a]} is not 0 or -1; "
                "no structure over a connected ring realizes it"
            )
    report = check_symbol_axioms(symbol)
    if not report.ok:
        raise SymbolError(f"not a symbol: {report.violations[0]}")
    table = tuple(tuple(0 if a == b else -e[a][b][a] for b in range(n)) for a in range(n))
    obs = ObStructure(symbol.colors, table)
    if symbol_from_obs(obs) != symbol:
        raise SymbolError("symbol is not determined by its recovered structure")
    return obs


def format_symbol(symbol: SigmaSymbol) -> str:
    """Text block per fixed ``c``: rows indexed by ``a``, columns by ``b``."""
    names = symbol.colors.colors
    width = max(max(len(x) for x in names), 2)
    out = []
    for c, mat in symbol.matrices():
        out.append(f"c = {c}")
        out.append(" " * width + " " + " ".join(b.rjust(width) for b in names))
        for a, row in zip(names, mat):
            out.append(a.ljust(width) + " " + " ".join(str(v).rjust(width) for v in row))
    return "\n".join(out) + "\n"
