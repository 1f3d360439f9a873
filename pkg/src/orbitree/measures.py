"""Invariant measures on the tree boundary, represented by exact cylinder
weights up to a finite depth.

An :class:`InvariantMeasurePrefix` stores one weight per orbit: the mass
``mu(C_v)`` of the cylinder of any single vertex ``v`` of that orbit.
Constancy on orbits is therefore structural; what remains to check is
non-negativity, total mass one, and refinement (a vertex's mass equals the
sum over its children).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .automaton import decode_vertex, encode_vertex, iter_level_permutations
from .orbits import iter_level_orbits


@dataclass(frozen=True)
class InvariantMeasurePrefix:
    """``levels[n]`` maps orbit id -> per-vertex weight on level ``n``."""

    depth: int
    levels: tuple

    def __post_init__(self):
        levels = tuple(
            {int(k): Fraction(v) for k, v in level.items()} for level in self.levels
        )
        object.__setattr__(self, "levels", levels)
        if len(levels) != self.depth + 1:
            raise ValueError(f"expected {self.depth + 1} levels, got {len(levels)}")

    def weight(self, level, orbit_id):
        return self.levels[level][orbit_id]

    def cylinder(self, tree, word):
        """``mu(C_v)`` for the vertex ``word``."""
        n = len(word)
        if n > self.depth:
            raise ValueError(f"vertex of length {n} is below measure depth {self.depth}")
        return self.levels[n][tree.orbit_of_index(n, encode_vertex(word, tree.degree))]

    def vertex_weight(self, tree, level, index):
        return self.levels[level][tree.orbit_of_index(level, index)]

    def to_vertex_measure(self, tree):
        return VertexMeasure(
            self.depth,
            tuple(
                tuple(self.levels[n][int(o)] for o in tree.orbits[n].orbit_id)
                for n in range(self.depth + 1)
            ),
        )

    def to_json(self):
        return json.dumps(
            {
                "depth": self.depth,
                "levels": [
                    {"orbits": {str(k): f"{w.numerator}/{w.denominator}" for k, w in level.items()}}
                    for level in self.levels
                ],
            }
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        levels = tuple(
            {int(k): Fraction(v) for k, v in level["orbits"].items()} for level in data["levels"]
        )
        return cls(int(data["depth"]), levels)


@dataclass(frozen=True)
class VertexMeasure:
    """Per-vertex cylinder weights, ``levels[n][index]``.  Not necessarily
    invariant; used to exercise the decomposition check on arbitrary input."""

    depth: int
    levels: tuple

    def vertex_weight(self, tree, level, index):
        return self.levels[level][index]

    def cylinder(self, tree, word):
        return self.levels[len(word)][encode_vertex(word, tree.degree)]

    def replace(self, level, index, value):
        row = list(self.levels[level])
        row[index] = Fraction(value)
        levels = list(self.levels)
        levels[level] = tuple(row)
        return VertexMeasure(self.depth, tuple(levels))


def _check_depth(tree, depth):
    if depth > tree.depth:
        raise ValueError(f"depth {depth} exceeds orbit tree depth {tree.depth}")


def psi_prefix(tree, word):
    """Orbit-tree nodes of the prefixes of ``word`` (root first)."""
    n = len(word)
    _check_depth(tree, n)
    d = tree.degree
    index = encode_vertex(word, d)
    chain = []
    for k in range(n + 1):
        prefix = index // d ** (n - k)
        chain.append(tree.node(k, tree.orbit_of_index(k, prefix)))
    return chain


def ray_from_node(tree, level, orbit_id):
    """The chain of ancestors ending at the given node (root first)."""
    node = tree.node(level, orbit_id)
    chain = [node]
    while node.parent is not None:
        node = tree.levels[node.level - 1][node.parent]
        chain.append(node)
    chain.reverse()
    return chain


def ergodic_cylinder_value(tree, ray, word):
    """``mu_eta(C_v)``: ``1/|O|`` if ``v`` lies in the ray's level-``|v|`` orbit ``O``, else 0."""
    n = len(word)
    if n >= len(ray):
        raise ValueError(f"vertex of length {n} is below the ray prefix (length {len(ray) - 1})")
    target = ray[n]
    oid = tree.orbit_of_index(n, encode_vertex(word, tree.degree))
    return Fraction(1, target.size) if oid == target.orbit_id else Fraction(0)


def ray_measure(tree, ray):
    """The ergodic measure of a ray prefix, as an :class:`InvariantMeasurePrefix`."""
    depth = len(ray) - 1
    _check_depth(tree, depth)
    levels = []
    for n in range(depth + 1):
        target = ray[n]
        levels.append(
            {
                node.orbit_id: Fraction(1, node.size) if node.orbit_id == target.orbit_id else Fraction(0)
                for node in tree.levels[n]
            }
        )
    return InvariantMeasurePrefix(depth, tuple(levels))


def uniform_measure(tree, depth=None):
    depth = tree.depth if depth is None else depth
    _check_depth(tree, depth)
    d = tree.degree
    return InvariantMeasurePrefix(
        depth,
        tuple(
            {node.orbit_id: Fraction(1, d**n) for node in tree.levels[n]}
            for n in range(depth + 1)
        ),
    )


def random_invariant_measure(tree, depth=None, seed=None, max_weight=16):
    """Sample an invariant measure top-down with exact rational weights.

    Each parent orbit splits its per-vertex mass among its child orbits in
    proportion to random integers in ``[1, max_weight]``; a child orbit
    ``O'`` below ``O`` holds ``|O'|/|O|`` children of every vertex of ``O``.
    """
    depth = tree.depth if depth is None else depth
    _check_depth(tree, depth)
    rng = random.Random(seed)
    levels = [{tree.root.orbit_id: Fraction(1)}]
    for n in range(depth):
        nxt = {}
        for i, node in enumerate(tree.levels[n]):
            w = levels[n][node.orbit_id]
            kids = [tree.levels[n + 1][k] for k in tree.children(n, i)]
            draws = [rng.randint(1, max_weight) for _ in kids]
            total = sum(draws)
            for kid, c in zip(kids, draws):
                nxt[kid.orbit_id] = Fraction(
                    w.numerator * c * node.size, w.denominator * total * kid.size
                )
        levels.append(dict(sorted(nxt.items())))
    return InvariantMeasurePrefix(depth, tuple(levels))


def verify_decomposition(tree, mu, word):
    """Exact check of ``mu(C_v) = sum_w mu(C_w) * mu_psi(w)(C_v)`` over the level of ``v``.

    The integrand ``xi -> mu_psi(xi)(C_v)`` is constant on level-``|v|``
    cylinders, so the integral is a finite sum.  ``mu`` may be an
    :class:`InvariantMeasurePrefix` or a :class:`VertexMeasure`.
    """
    n = len(word)
    if n > mu.depth:
        raise ValueError(f"vertex of length {n} is below measure depth {mu.depth}")
    d = tree.degree
    lhs = mu.cylinder(tree, word)
    rhs = Fraction(0)
    for w in range(d**n):
        ray = psi_prefix(tree, decode_vertex(w, n, d))
        rhs += mu.vertex_weight(tree, n, w) * ergodic_cylinder_value(tree, ray, word)
    return lhs == rhs


def decomposition_failures(tree, mu, levels=None):
    """All ``(level, vertex index)`` where the decomposition identity fails.

    Evaluates both sides for every vertex of each level at once by summing
    ``mu(C_w)`` over each orbit.
    """
    levels = range(mu.depth + 1) if levels is None else levels
    failures = []
    for n in levels:
        lo = tree.orbits[n]
        ids = lo.orbit_id
        if isinstance(mu, InvariantMeasurePrefix):
            # w == count * w / size, compared on numerators over the common denominator
            counts = np.bincount(ids, minlength=len(ids))
            bad = [
                oid
                for oid, size in lo.sizes.items()
                if mu.levels[n][oid].numerator * size != int(counts[oid]) * mu.levels[n][oid].numerator
            ]
            for oid in bad:
                failures.extend((n, int(v)) for v in lo.members(oid))
        else:
            row = mu.levels[n]
            mass = {}
            for v, oid in enumerate(ids.tolist()):
                mass[oid] = mass.get(oid, 0) + row[v]
            for v, oid in enumerate(ids.tolist()):
                if row[v] != mass[oid] / lo.sizes[oid]:
                    failures.append((n, v))
    return failures


def _orbits_invariant(automaton, gens, level_orbits, depth, budget):
    for n, perms in iter_level_permutations(automaton, list(gens), depth, budget):
        ids = level_orbits[n].orbit_id
        if any(not np.array_equal(ids[p], ids) for p in perms):
            return False
    return True


def check_invariance(automaton, gens, mu, tree=None, budget=None):
    """Exact check that ``mu`` is a ``<gens>``-invariant probability measure.

    Verifies that every generator preserves the orbit labels (so per-vertex
    weights are invariant), that the measure's orbits are those labels,
    that weights are non-negative with total mass one, and that each
    vertex's mass equals the sum over its children.  With ``tree`` given,
    the generator check is done once per tree and reused.
    """
    d = automaton.degree
    if tree is not None:
        level_orbits = tree.orbits[: mu.depth + 1]
        cache = tree._invariance_cache
        key = (automaton, tuple(gens), mu.depth)
        if key not in cache:
            cache[key] = _orbits_invariant(automaton, gens, level_orbits, mu.depth, budget)
        labels_ok = cache[key]
    else:
        level_orbits = list(iter_level_orbits(automaton, gens, mu.depth, budget))
        labels_ok = _orbits_invariant(automaton, gens, level_orbits, mu.depth, budget)
    if not labels_ok or mu.levels[0] != {0: Fraction(1)}:
        return False
    for n in range(mu.depth + 1):
        lo = level_orbits[n]
        weights = mu.levels[n]
        if set(weights) != set(lo.sizes) or any(w < 0 for w in weights.values()):
            return False
        if n == 0:
            continue
        ids = lo.orbit_id.reshape(-1, d)
        for parent, w in mu.levels[n - 1].items():
            if sum(weights[int(o)] for o in ids[parent]) != w:
                return False
    return True


def ergodic_component_count(tree, level):
    return len(tree.levels[level])


def ergodic_coefficients(tree, mu, level):
    """Convex coefficients of ``mu`` over the level's orbit-uniform measures:
    the total mass ``|O| * w_O`` of each orbit."""
    return {
        node.orbit_id: node.size * mu.levels[level][node.orbit_id] for node in tree.levels[level]
    }


def reconstruct_level(tree, coefficients, level):
    """Per-orbit weights of ``sum_O c_O * uniform_O`` on ``level``."""
    return {
        node.orbit_id: coefficients[node.orbit_id] / node.size for node in tree.levels[level]
    }
