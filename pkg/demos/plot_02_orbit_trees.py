"""
Orbit trees
===========

Orbits of a cyclic group on each level, arranged as a tree, then compared
with the expected shapes.
"""

from orbitree import catalog, build_orbit_tree, match_shape, to_text
from orbitree.shapes import LamplighterA, LamplighterB, Line
from orbitree.orbits import iter_level_orbits

L = catalog.lamplighter()

for lo in iter_level_orbits(L, [L.word("a")], 6):
    print(lo.to_json_line())

# single children sit exactly on levels 2**n - 1
tree_a = build_orbit_tree(L, [L.word("a")], 16)
print([n for n in range(16) if tree_a.child_counts(n) == [1] * len(tree_a.levels[n])])
print(match_shape(tree_a, LamplighterA()))

# the tree of b splits at the root into a copy of itself and a copy of tree_a
tree_b = build_orbit_tree(L, [L.word("b")], 14)
print(match_shape(tree_b, LamplighterB()))
print(match_shape(tree_b, LamplighterA()))

# the adding machine is level transitive: its orbit tree is a line
A = catalog.adding_machine()
print(to_text(build_orbit_tree(A, A.generators(), 4)))
print(match_shape(build_orbit_tree(A, A.generators(), 10), Line()))
