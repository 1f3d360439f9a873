"""
Sushchansky groups
==================

Orbit trees for p = 3 under several orders on pairs of letters.
"""

from orbitree import build_orbit_tree, match_shape
from orbitree.catalog import SushchanskyOrder, sushchansky
from orbitree.shapes import Sushchansky

for seed in range(3):
    order = SushchanskyOrder.random(3, seed)
    S = sushchansky(order)
    tree = build_orbit_tree(S.automaton, S.generators, 5)
    print(order.format(), tree.level_sizes(), match_shape(tree, Sushchansky(3)))

# below level 1 one branch is a line, the others are full ternary trees
print([tree.child_counts(n) for n in range(3)])

# for p = 2 the generator A already acts on level 2 as a 4-cycle
S2 = sushchansky(2)
tree2 = build_orbit_tree(S2.automaton, S2.generators, 5)
print(tree2.level_sizes(), match_shape(tree2, Sushchansky(2)))
