"""Orbits of a finitely generated group on the levels of the tree."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .automaton import (
    check_budget,
    cycle_minima,
    encode_vertex,
    iter_level_permutations,
)


class DisjointSet:
    """Union-find over ``0..n-1`` with union by size and path compression."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True

    def roots(self):
        """Fully compressed root of every element, as an array."""
        parent = np.asarray(self.parent, dtype=np.int64)
        while True:
            nxt = parent[parent]
            if np.array_equal(nxt, parent):
                return parent
            parent = nxt


@dataclass(frozen=True)
class LevelOrbits:
    """Partition of level ``n`` into orbits.

    ``orbit_id[v]`` is the smallest vertex index in the orbit of ``v``;
    ``sizes`` maps each orbit id to its size, in increasing id order.
    """

    level: int
    degree: int
    orbit_id: np.ndarray = field(repr=False)
    sizes: dict = field(repr=False)

    @property
    def representatives(self):
        return list(self.sizes)

    @property
    def count(self):
        return len(self.sizes)

    def __len__(self):
        return len(self.sizes)

    def members(self, orbit):
        return np.flatnonzero(self.orbit_id == orbit)

    def orbit_of_index(self, index):
        oid = int(self.orbit_id[index])
        return oid, self.sizes[oid]

    def histogram(self):
        return orbit_size_histogram(self)

    def summary(self):
        return {"level": self.level, "orbits": self.count, "sizes": self.histogram()}

    def to_json_line(self):
        summary = self.summary()
        summary["sizes"] = {str(k): v for k, v in summary["sizes"].items()}
        return json.dumps(summary, sort_keys=False)


# edge count below which the pure-Python union-find is used
SMALL_JOIN = 4096


def _orbit_ids(perms, size):
    """Canonical orbit labels for the group generated by ``perms``."""
    if not perms:
        return np.arange(size, dtype=np.int64)
    # each generator alone: label = minimum over its cycle
    labels = [cycle_minima(p).astype(np.int64) for p in perms]
    base = labels[0]
    if len(labels) == 1:
        return base
    # v lies in the cycle of base[v] for generator 0 and in the cycle of
    # labels[i][v] for generator i, so uniting those two cycle minima for
    # every v joins the per-generator partitions
    keys = []
    for lab in labels[1:]:
        diff = base != lab
        keys.append(base[diff] * size + lab[diff])
    edges = np.unique(np.concatenate(keys))
    src, dst = edges // size, edges % size
    if len(edges) <= SMALL_JOIN:
        dsu = DisjointSet(size)
        for a, b in zip(src.tolist(), dst.tolist()):
            dsu.union(a, b)
        roots = dsu.roots()[base]
    else:
        graph = coo_matrix((np.ones(len(edges), dtype=np.int8), (src, dst)), shape=(size, size))
        _, component = connected_components(graph, directed=False)
        roots = component[base]
    minimum = np.full(size, size, dtype=np.int64)
    np.minimum.at(minimum, roots, np.arange(size, dtype=np.int64))
    return minimum[roots]


def _level_orbits(n, d, perms):
    size = d**n
    ids = _orbit_ids(perms, size)
    counts = np.bincount(ids, minlength=size)
    reps = np.flatnonzero(counts)
    sizes = {int(r): int(counts[r]) for r in reps}
    ids.setflags(write=False)
    return LevelOrbits(n, d, ids, sizes)


def iter_level_orbits(automaton, gens, depth, budget=None):
    """Yield :class:`LevelOrbits` for levels ``0..depth``.

    Generator permutations are built incrementally level by level.
    """
    d = automaton.degree
    for n, perms in iter_level_permutations(automaton, list(gens), depth, budget):
        yield _level_orbits(n, d, perms)


def compute_level_orbits(automaton, gens, n, budget=None):
    """Orbits of ``<gens>`` on level ``n``.

    Each generator permutes the finite level, so closing under the
    generators alone (no inverses) already gives the group orbits.
    """
    check_budget(automaton.degree, n, budget)
    for orbits in iter_level_orbits(automaton, gens, n, budget):
        if orbits.level == n:
            return orbits


def orbit_of_vertex(orbits, v):
    """``(orbit id, orbit size)`` of the word ``v``."""
    if len(v) != orbits.level:
        raise ValueError(f"vertex of length {len(v)} queried on level {orbits.level}")
    return orbits.orbit_of_index(encode_vertex(v, orbits.degree))


def orbit_size_histogram(orbits):
    """``{orbit size: number of orbits}``, sizes ascending."""
    hist = {}
    for s in orbits.sizes.values():
        hist[s] = hist.get(s, 0) + 1
    return dict(sorted(hist.items()))
