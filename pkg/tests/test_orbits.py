import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import bfs_orbits, word_index
from orbitree import catalog, orbits
from orbitree.automaton import decode_vertex, iter_level_permutations
from orbitree.orbits import (
    DisjointSet,
    compute_level_orbits,
    iter_level_orbits,
    orbit_of_vertex,
    orbit_size_histogram,
)

SMALL = [
    ("lamplighter a", catalog.lamplighter, ["a"], 8),
    ("lamplighter b", catalog.lamplighter, ["b"], 8),
    ("lamplighter", catalog.lamplighter, None, 8),
    ("ll2", catalog.ll2, None, 8),
    ("ll2 ac", catalog.ll2, ["a c"], 8),
    ("adding", catalog.adding_machine, None, 8),
    ("rootswap", catalog.root_swap, None, 8),
    ("universal", catalog.universal_grigorchuk, None, 3),
    ("sushchansky 3", lambda: catalog.sushchansky(3).automaton, ["A", "B"], 4),
]


def _setup(factory, gens):
    A = factory()
    if gens is None:
        return A, A.generators()
    return A, [A.word(*g.split()) for g in gens]


def _as_partition(lo):
    d = lo.degree
    by_id = {}
    for v in range(d**lo.level):
        by_id.setdefault(int(lo.orbit_id[v]), set()).add(decode_vertex(v, lo.level, d))
    return sorted((frozenset(s) for s in by_id.values()), key=min)


@pytest.mark.parametrize("label, factory, gens, depth", SMALL, ids=[s[0] for s in SMALL])
def test_matches_breadth_first_oracle(label, factory, gens, depth):
    A, words = _setup(factory, gens)
    for lo in iter_level_orbits(A, words, depth):
        assert _as_partition(lo) == bfs_orbits(A, words, lo.level)


@pytest.mark.parametrize("label, factory, gens, depth", SMALL, ids=[s[0] for s in SMALL])
def test_union_find_and_sparse_paths_agree(label, factory, gens, depth, monkeypatch):
    A, words = _setup(factory, gens)
    monkeypatch.setattr(orbits, "SMALL_JOIN", 10**9)
    python_path = [lo.orbit_id.copy() for lo in iter_level_orbits(A, words, depth)]
    monkeypatch.setattr(orbits, "SMALL_JOIN", -1)
    sparse_path = [lo.orbit_id.copy() for lo in iter_level_orbits(A, words, depth)]
    for a, b in zip(python_path, sparse_path):
        assert np.array_equal(a, b)


@pytest.mark.parametrize("label, factory, gens, depth", SMALL, ids=[s[0] for s in SMALL])
def test_partition_equivariance_and_parent_coherence(label, factory, gens, depth):
    A, words = _setup(factory, gens)
    d = A.degree
    levels = list(iter_level_orbits(A, words, depth))
    for (n, perms), lo in zip(iter_level_permutations(A, words, depth), levels):
        ids = lo.orbit_id
        # canonical id is the orbit minimum, and sizes add up
        assert all(ids[oid] == oid for oid in lo.sizes)
        assert np.all(ids <= np.arange(d**n))
        assert sum(lo.sizes.values()) == d**n
        for p in perms:
            assert np.array_equal(ids[p], ids)
        if n:
            parents = levels[n - 1].orbit_id[np.arange(d**n) // d]
            for oid in lo.sizes:
                assert len(set(parents[ids == oid].tolist())) == 1


def test_frozen_lamplighter_levels():
    L = catalog.lamplighter()
    got = [lo.summary() for lo in iter_level_orbits(L, [L.word("a")], 4)]
    assert got == [
        {"level": 0, "orbits": 1, "sizes": {1: 1}},
        {"level": 1, "orbits": 1, "sizes": {2: 1}},
        {"level": 2, "orbits": 1, "sizes": {4: 1}},
        {"level": 3, "orbits": 2, "sizes": {4: 2}},
        {"level": 4, "orbits": 2, "sizes": {8: 2}},
    ]


def test_json_line():
    U = catalog.universal_grigorchuk()
    line = compute_level_orbits(U, U.generators(), 2).to_json_line()
    assert json.loads(line) == {"level": 2, "orbits": 9, "sizes": {"4": 9}}


def test_orbit_of_vertex():
    L = catalog.lamplighter()
    lo = compute_level_orbits(L, [L.word("a")], 3)
    oid, size = orbit_of_vertex(lo, (1, 1, 1))
    assert size == 4 and oid == int(lo.orbit_id[word_index((1, 1, 1), 2)])
    assert lo.members(oid).tolist() == sorted(lo.members(oid).tolist())
    with pytest.raises(ValueError):
        orbit_of_vertex(lo, (1, 1))


def test_histogram_sorted_by_size():
    S = catalog.sushchansky(3)
    lo = compute_level_orbits(S.automaton, S.generators, 3)
    hist = orbit_size_histogram(lo)
    assert list(hist) == sorted(hist)
    assert sum(size * count for size, count in hist.items()) == 27


def test_no_generators_gives_singletons():
    L = catalog.lamplighter()
    lo = compute_level_orbits(L, [], 3)
    assert lo.count == 8 and set(lo.sizes.values()) == {1}


@given(st.lists(st.tuples(st.integers(0, 19), st.integers(0, 19)), max_size=40))
def test_disjoint_set_matches_naive_closure(pairs):
    dsu = DisjointSet(20)
    for a, b in pairs:
        dsu.union(a, b)
    roots = dsu.roots()
    label = list(range(20))
    changed = True
    while changed:
        changed = False
        for a, b in pairs:
            m = min(label[a], label[b])
            if label[a] != m or label[b] != m:
                label[a] = label[b] = m
                changed = True
    for i in range(20):
        for j in range(20):
            assert (roots[i] == roots[j]) == (label[i] == label[j])
    assert all(dsu.find(i) == roots[i] for i in range(20))
