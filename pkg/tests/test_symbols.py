import itertools

import pytest
from hypothesis import given

from colored_circle.bisection import ObStructure, enumerate_obs, obs_from_tree
from colored_circle.colors import ColorSet
from colored_circle.errors import SymbolError
from colored_circle.symbols import (
    SigmaSymbol,
    check_symbol_axioms,
    format_symbol,
    obs_from_symbol,
    symbol_from_obs,
)

from oracles import SAMPLE_TABLE, oracle_geodesic, oracle_points_toward, random_trees

SIX = ColorSet.letters(6)


def _all_structures(max_n):
    for n in range(1, max_n + 1):
        yield from enumerate_obs(ColorSet.letters(n))


def test_diagonal_endpoint_values():
    for obs in _all_structures(3):
        eta = symbol_from_obs(obs).eta
        n = obs.n
        for a, c in itertools.product(range(n), repeat=2):
            assert eta[a][a][c] == -(a == c)
        for a, b in itertools.permutations(range(n), 2):
            assert eta[a][b][a] in (0, -1)


def test_sample_values():
    eta = symbol_from_obs(ObStructure(SIX, SAMPLE_TABLE))
    assert eta("b", "d", "c") == -1
    assert eta("d", "f", "f") == -1


@given(random_trees(min_n=2))
def test_values_follow_tree_geometry(tree):
    eta = symbol_from_obs(obs_from_tree(tree)).eta
    edges = tree.edges
    for a, b in itertools.permutations(range(tree.n), 2):
        assert eta[a][b][a] == (-1 if oracle_points_toward(edges, a, b) else 0)
        assert eta[a][b][b] == (-1 if not oracle_points_toward(edges, b, a) else 0)
        path = oracle_geodesic(edges, a, b)
        for c in range(tree.n):
            if c in (a, b):
                continue
            if c not in path:
                expected = 0
            elif oracle_points_toward(edges, c, b):
                expected = -1
            else:
                expected = 1
            assert eta[a][b][c] == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_structures_give_symbols(n):
    for obs in enumerate_obs(ColorSet.letters(n)):
        assert check_symbol_axioms(symbol_from_obs(obs)).ok


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_round_trip(n):
    for obs in enumerate_obs(ColorSet.letters(n)):
        sym = symbol_from_obs(obs)
        assert obs_from_symbol(sym) == obs


def test_sample_symbol_recovers_table():
    assert obs_from_symbol(symbol_from_obs(ObStructure(SIX, SAMPLE_TABLE))).table == SAMPLE_TABLE


def test_unrealizable_value_is_rejected():
    sym = symbol_from_obs(ObStructure(ColorSet(("a", "b")), ((0, 0), (0, 0))))
    with pytest.raises(SymbolError):
        obs_from_symbol(sym.replace(0, 1, 0, 2))


def test_axiom_violation_is_rejected():
    sym = symbol_from_obs(ObStructure(ColorSet(("a", "b", "c")), ((0, 0, 0), (0, 0, 0), (0, 0, 0))))
    bad = sym.replace(0, 1, 2, 1)
    assert not check_symbol_axioms(bad).ok
    with pytest.raises(SymbolError):
        obs_from_symbol(bad)


def test_all_zero_table_breaks_splitting_rule():
    for n in (1, 2, 3):
        colors = ColorSet.letters(n)
        zero = SigmaSymbol(colors, [[[0] * n for _ in range(n)] for _ in range(n)])
        report = check_symbol_axioms(zero)
        splitting = [v for v in report.violations if v.rule == "splitting"]
        assert splitting
        assert all(v.indices[2] == v.indices[3] for v in splitting)
        assert all((v.lhs, v.rhs) == (0, 1) for v in splitting)


def test_positive_diagonal_is_flagged():
    colors = ColorSet(("a", "b"))
    sym = symbol_from_obs(ObStructure(colors, ((0, 1), (0, 0))))
    bad = sym.replace(0, 0, 0, 1)
    report = check_symbol_axioms(bad)
    assert any(v.rule == "splitting" and v.indices[:3] == ("a", "a", "a") for v in report.violations)


def test_raw_table_input():
    colors = ColorSet(("a",))
    assert check_symbol_axioms((colors, [[[-1]]])).ok
    assert not check_symbol_axioms((colors, [[[1]]])).ok


def test_derived_identities_exhaustive():
    for obs in _all_structures(4):
        e = symbol_from_obs(obs).eta
        n = obs.n
        for a, b, c in itertools.product(range(n), repeat=3):
            if a != b:
                assert e[c][b][a] * e[c][a][b] == 0
        for a, b, c, d in itertools.product(range(n), repeat=4):
            assert e[a][c][b] * e[a][d][c] == e[a][c][b] * e[b][d][c]


def test_format_symbol():
    sym = symbol_from_obs(ObStructure(ColorSet(("a", "b")), ((0, 1), (0, 0))))
    text = format_symbol(sym)
    assert text.splitlines()[0] == "c = a"
    assert text.count("c = ") == 2
    assert sym.matrices()[0][1] == ((-1, -1), (0, 0))
