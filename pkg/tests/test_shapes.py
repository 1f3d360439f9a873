import pytest

from orbitree import catalog
from orbitree.orbit_tree import build_orbit_tree
from orbitree.shapes import (
    EventuallyRegular,
    Explicit,
    FullRegular,
    LamplighterA,
    LamplighterB,
    Line,
    Sushchansky,
    match_shape,
    parse_shape,
)

L = catalog.lamplighter()


def tree(gen, depth):
    return build_orbit_tree(L, [L.word(gen)], depth)


def test_lamplighter_shapes():
    assert match_shape(tree("a", 12), LamplighterA())
    assert match_shape(tree("b", 10), LamplighterB())


def test_swapped_lamplighter_shapes_mismatch():
    verdict = match_shape(tree("b", 6), LamplighterA())
    assert not verdict
    assert (verdict.level, verdict.expected, verdict.actual) == (0, 1, 2)
    verdict = match_shape(tree("a", 6), LamplighterB())
    assert not verdict and verdict.level == 0


def test_deep_mismatch_is_located():
    # agrees with LamplighterA except below level 7, where an extra split is expected
    verdict = match_shape(tree("a", 9), Explicit(((1,), (1,), (2,), (1, 1), (2, 2), (2,) * 4, (2,) * 8, (2,) * 16)))
    assert not verdict and verdict.level == 7


def test_line_and_full():
    A = catalog.adding_machine()
    assert match_shape(build_orbit_tree(A, A.generators(), 8), Line())
    R = catalog.root_swap()
    verdict = match_shape(build_orbit_tree(R, R.generators(), 6), Line())
    assert not verdict and verdict.level == 1 and verdict.actual == 2
    U = catalog.universal_grigorchuk()
    assert match_shape(build_orbit_tree(U, U.generators(), 3), FullRegular(3))


def test_sushchansky_three():
    S = catalog.sushchansky(3)
    assert match_shape(build_orbit_tree(S.automaton, S.generators, 4), Sushchansky(3))
    assert not match_shape(build_orbit_tree(S.automaton, S.generators, 4), Sushchansky(2))


def test_eventually_regular():
    R = catalog.root_swap()
    t = build_orbit_tree(R, R.generators(), 5)
    assert match_shape(t, EventuallyRegular(1, 2))
    verdict = match_shape(t, EventuallyRegular(0, 2))
    assert not verdict and verdict.level == 0


def test_explicit_row_length_mismatch():
    t = tree("a", 4)
    assert match_shape(t, Explicit(((1,), (1,), (2,), (1, 1))))
    assert not match_shape(t, Explicit(((1,), (1,), (2,), (1, 1, 1))))


def test_verdict_text_mentions_depth():
    assert "depth 6" in str(match_shape(tree("b", 6), LamplighterB()))
    bad = match_shape(tree("b", 6), LamplighterA())
    assert "level 0" in str(bad) and "depth 6" in str(bad)
    assert bad.as_dict()["ok"] is False


@pytest.mark.parametrize(
    "text, shape",
    [
        ("line", Line()),
        ("full:3", FullRegular(3)),
        ("lamplighter-a", LamplighterA()),
        ("Lamplighter-B", LamplighterB()),
        ("sushchansky:5", Sushchansky(5)),
        ("eventually:2:4", EventuallyRegular(2, 4)),
        ("explicit:1;2;1,1", Explicit(((1,), (2,), (1, 1)))),
    ],
)
def test_parse_shape(text, shape):
    assert parse_shape(text) == shape


@pytest.mark.parametrize("text", ["circle", "full:x", "full:0", "eventually:1", "sushchansky:1"])
def test_parse_shape_errors(text):
    with pytest.raises(ValueError):
        parse_shape(text)
