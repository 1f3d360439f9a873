"""The orbit tree: the quotient of the rooted tree by a group action."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .automaton import check_budget
from .orbits import iter_level_orbits


@dataclass(frozen=True)
class OrbitNode:
    level: int
    orbit_id: int
    size: int
    parent: int | None  # index into the previous level's node list
    parent_id: int | None

    @property
    def name(self):
        return f"L{self.level}O{self.orbit_id}"


class OrbitTree:
    """Orbit tree truncated at ``depth``.

    ``levels[n]`` lists the nodes of level ``n`` in increasing orbit-id
    order; ``orbits[n]`` keeps the underlying :class:`LevelOrbits`.
    """

    def __init__(self, degree, level_orbits):
        self.degree = degree
        self.orbits = list(level_orbits)
        self.depth = len(self.orbits) - 1
        self.levels = []
        self._index = []
        for n, lo in enumerate(self.orbits):
            nodes = []
            for oid, size in lo.sizes.items():
                if n == 0:
                    parent = parent_id = None
                else:
                    parent_id = int(self.orbits[n - 1].orbit_id[oid // degree])
                    parent = self._index[n - 1][parent_id]
                nodes.append(OrbitNode(n, oid, size, parent, parent_id))
            self.levels.append(nodes)
            self._index.append({node.orbit_id: i for i, node in enumerate(nodes)})
        self._children = [[[] for _ in nodes] for nodes in self.levels]
        self._invariance_cache = {}
        for n in range(1, self.depth + 1):
            for i, node in enumerate(self.levels[n]):
                self._children[n - 1][node.parent].append(i)

    def __repr__(self):
        return f"OrbitTree(depth={self.depth}, nodes per level={self.level_sizes()})"

    @property
    def root(self):
        return self.levels[0][0]

    def node(self, level, orbit_id):
        return self.levels[level][self._index[level][orbit_id]]

    def node_index(self, level, orbit_id):
        return self._index[level][orbit_id]

    def children(self, level, index):
        """Indices (into ``levels[level + 1]``) of the children of a node."""
        return self._children[level][index]

    def child_counts(self, level):
        return [len(c) for c in self._children[level]]

    def level_sizes(self):
        return [len(nodes) for nodes in self.levels]

    def num_nodes(self):
        return sum(self.level_sizes())

    def num_edges(self):
        return self.num_nodes() - 1

    def orbit_of_index(self, level, index):
        return int(self.orbits[level].orbit_id[index])


def build_orbit_tree(automaton, gens, depth, budget=None):
    """Orbit tree of ``<gens>`` truncated at ``depth``."""
    check_budget(automaton.degree, depth, budget)
    return OrbitTree(automaton.degree, iter_level_orbits(automaton, gens, depth, budget))


class Transitivity(NamedTuple):
    transitive: bool
    failing_level: int | None
    depth: int

    def __bool__(self):
        return self.transitive


def is_level_transitive(automaton, gens, depth, budget=None):
    """Whether every level up to ``depth`` is a single orbit.

    Stops at the first level with more than one orbit.  A positive
    answer only certifies the levels that were checked.
    """
    check_budget(automaton.degree, depth, budget)
    for lo in iter_level_orbits(automaton, gens, depth, budget):
        if lo.count != 1:
            return Transitivity(False, lo.level, depth)
    return Transitivity(True, None, depth)


def stabilized_branching(tree, start):
    """True iff every node on levels ``start..depth-1`` has ``d`` children."""
    if not 0 <= start < tree.depth:
        raise ValueError(f"start level {start} must be below the tree depth {tree.depth}")
    return all(
        c == tree.degree for n in range(start, tree.depth) for c in tree.child_counts(n)
    )


def to_dot(tree, name="orbit_tree"):
    """Graphviz source.  Nodes are named ``L{level}O{orbit id}``, labeled by size."""
    lines = [f"digraph {name} {{"]
    for nodes in tree.levels:
        for node in nodes:
            lines.append(f'  {node.name} [label="{node.size}"];')
    for n in range(1, tree.depth + 1):
        prev = tree.levels[n - 1]
        for node in tree.levels[n]:
            lines.append(f"  {prev[node.parent].name} -> {node.name};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_text(tree):
    """One line per node, ``level orbit_id size parent_id child_count``,
    indented by level, in depth-first order."""
    lines = []

    def visit(level, index):
        node = tree.levels[level][index]
        parent = "-" if node.parent_id is None else str(node.parent_id)
        kids = tree.children(level, index) if level < tree.depth else []
        count = len(kids) if level < tree.depth else "-"
        lines.append(f"{'  ' * level}{level} {node.orbit_id} {node.size} {parent} {count}")
        for k in kids:
            visit(level + 1, k)

    visit(0, 0)
    return "\n".join(lines) + "\n"
