"""
Orders of ac in the rank-two example
====================================

The order of ac on level n never decreases; it keeps doubling.
"""

import numpy as np

from orbitree import catalog, orbit_matrix, matrix_to_ascii
from orbitree.automaton import permutation_order_at_level

G = catalog.ll2()
ac = G.word("a", "c")
orders = [permutation_order_at_level(G, ac, n) for n in range(1, 17)]
print(orders)
print(np.all(np.diff(orders) >= 0))

M = orbit_matrix((0,) * 64, ac, 24, automaton=G)
print(matrix_to_ascii(M))
