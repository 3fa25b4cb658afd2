import itertools

import pytest

from colored_circle.bisection import star_violation
from colored_circle.colors import NEG_INF, POS_INF, ColorSet
from colored_circle.errors import ColoredCircleError, FormatError, InvalidStructureError, StructureError
from colored_circle.line import (
    ExtendedStructure,
    PointedTree,
    check_line_symbol_axioms,
    enumerate_extended,
    enumerate_pointed_trees,
    eval_line_measure,
    extended_from_pointed,
    format_pointed,
    line_count,
    line_symbol,
    parse_pointed,
    pointed_from_extended,
    validate_extended,
    verify_line_measure_axioms,
)
from colored_circle.measures import eval_closed_form
from colored_circle.trees import DirectedLabeledTree, enumerate_directed_trees

A = ColorSet(("a",))
AB = ColorSet(("a", "b"))
EDGE = DirectedLabeledTree(A, ((0, 1),))


def _pointed(n):
    return enumerate_pointed_trees(enumerate_directed_trees(ColorSet.letters(n)))


def test_single_edge_columns():
    ext = extended_from_pointed(PointedTree(EDGE, 1, 0))
    assert (ext("a", POS_INF), ext("a", NEG_INF)) == (1, 0)
    ext = extended_from_pointed(PointedTree(EDGE, 1, 1))
    assert ext.rows == ((0, 1, 1),)


def test_sample_tree_pointed_at_inner_vertex(sample_tree):
    # Vertex 3 sits between edges c and d.
    ext = extended_from_pointed(PointedTree(sample_tree, 3, 3))
    assert ext.plus_column == ext.minus_column == (1, 0, 1, 1, 0, 0)
    assert ext.restriction.table == tuple(r[:6] for r in ext.rows)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pointed_round_trip(n):
    for p in _pointed(n):
        ext = extended_from_pointed(p)
        assert pointed_from_extended(ext) == p
    for ext in enumerate_extended(ColorSet.letters(n)):
        assert extended_from_pointed(pointed_from_extended(ext)) == ext


def test_tail_vertex_recovered():
    ext = validate_extended(A, ((0, 0, 0),))
    assert pointed_from_extended(ext) == PointedTree(EDGE, 0, 0)


def test_unrealizable_column_is_reported():
    # Validation would reject this table, so build it without running the checks.
    ext = object.__new__(ExtendedStructure)
    object.__setattr__(ext, "colors", AB)
    object.__setattr__(ext, "rows", ((0, 1, 0, 0), (0, 0, 0, 1)))
    with pytest.raises(InvalidStructureError) as info:
        pointed_from_extended(ext)
    assert info.value.witness == (POS_INF,)
    with pytest.raises(InvalidStructureError):
        ExtendedStructure(AB, ext.rows)


def test_invalid_two_color_table():
    with pytest.raises(InvalidStructureError) as info:
        validate_extended(AB, ((0, 1, 0, 0), (1, 0, 0, 0)))
    assert info.value.witness[:2] == ("a", "b")
    assert info.value.witness[2] in (NEG_INF, POS_INF)


def test_one_color_tables_all_valid():
    for bits in itertools.product((0, 1), repeat=2):
        validate_extended(A, ((0, *bits),))


def test_shape_errors():
    with pytest.raises(InvalidStructureError):
        validate_extended(A, ((0, 1),))
    with pytest.raises(InvalidStructureError):
        validate_extended(A, ((0, 2, 0),))
    with pytest.raises(InvalidStructureError):
        validate_extended(A, ((1, 0, 0),))


@pytest.mark.parametrize("n", [2, 3])
def test_star_implies_line_condition_on_colors(n):
    for bits in itertools.product((0, 1), repeat=n * (n - 1)):
        it = iter(bits)
        t = [[0 if i == j else next(it) for j in range(n)] for i in range(n)]
        if star_violation(t) is not None:
            continue
        for a, b in itertools.permutations(range(n), 2):
            for c in range(n):
                assert t[a][b] == t[a][c] or t[b][a] == t[b][c]


@pytest.mark.parametrize("n, kept", [(1, 4), (2, 36), (3, 512)])
def test_extended_counts(n, kept):
    found = enumerate_extended(ColorSet.letters(n))
    assert len(found) == kept == line_count(n)
    assert kept == (n + 1) ** 2 * len(enumerate_directed_trees(ColorSet.letters(n)))
    assert len(set(found)) == kept
    assert 2 ** (n * (n + 1)) == {1: 4, 2: 64, 3: 4096}[n]


def test_line_symbol_values():
    sym = line_symbol(extended_from_pointed(PointedTree(EDGE, 1, 0)))
    assert sym(NEG_INF, POS_INF, "a") == -1
    for p in _pointed(2):
        ext = extended_from_pointed(p)
        sym = line_symbol(ext)
        for a, c in itertools.product(ext.colors, repeat=2):
            assert sym(a, a, c) == -(a == c)
        for a in ext.colors:
            assert sym(NEG_INF, a, a) == ext(a, NEG_INF) - 1
            assert sym(a, POS_INF, a) == -ext(a, POS_INF)


def test_line_measure_examples():
    p = PointedTree(EDGE, 1, 0)
    assert eval_line_measure(p, NEG_INF, POS_INF, ()) == 1
    assert eval_line_measure(p, NEG_INF, POS_INF, "a") == -1
    values = sorted(eval_line_measure(q, NEG_INF, POS_INF, "a") for q in enumerate_pointed_trees([EDGE]))
    assert values == [-1, 0, 0, 1]


def test_endpoint_misuse():
    p = PointedTree(EDGE, 1, 0)
    with pytest.raises(ColoredCircleError):
        eval_line_measure(p, NEG_INF, POS_INF, [POS_INF])
    with pytest.raises(ColoredCircleError):
        eval_line_measure(p, POS_INF, "a", ())
    with pytest.raises(ColoredCircleError):
        eval_line_measure(p, "a", NEG_INF, ())
    with pytest.raises(StructureError):
        PointedTree(EDGE, 2, 0)


@pytest.mark.parametrize("n", [1, 2])
def test_line_axioms(n):
    for ext in enumerate_extended(ColorSet.letters(n)):
        assert check_line_symbol_axioms(line_symbol(ext)).ok
        report = verify_line_measure_axioms(ext, 4)
        assert report.ok and report.checked > 0


def test_line_axioms_catch_bad_column():
    ext = object.__new__(ExtendedStructure)
    object.__setattr__(ext, "colors", AB)
    object.__setattr__(ext, "rows", ((0, 1, 0, 0), (0, 0, 0, 1)))
    assert not check_line_symbol_axioms(line_symbol(ext)).ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_finite_endpoints_match_circle(n):
    colors = ColorSet.letters(n)
    for p in _pointed(n):
        for a, b in itertools.product(colors, repeat=2):
            for w in colors.words_up_to(3):
                assert eval_line_measure(p, a, b, w) == eval_closed_form(p.tree, a, b, w)


def test_pointed_format(sample_path):
    text = sample_path.read_text() + "x: 3\ny: 0\n"
    p = parse_pointed(text)
    assert (p.x, p.y) == (3, 0)
    out = format_pointed(p)
    again = parse_pointed(out)
    assert again == p.canonical()
    assert format_pointed(again) == out
    assert extended_from_pointed(again) == extended_from_pointed(p)
    for bad in ("x: 3\n", "x: 3\ny: 0\ny: 1\n", "x: three\ny: 0\n", "z: 1\nx: 3\ny: 0\n"):
        with pytest.raises(FormatError):
            parse_pointed(sample_path.read_text() + bad)
    with pytest.raises(StructureError):
        parse_pointed(sample_path.read_text() + "x: 9\ny: 0\n")
