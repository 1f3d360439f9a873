"""
Orbit matrices and the Sierpinski triangle
==========================================

Binary words are GF(2) power series; b multiplies by 1 + t.  Stacking
the orbit of 1 0^31 gives Pascal's triangle mod 2.
"""

import numpy as np

from orbitree import catalog, matrix_to_ascii, matrix_to_pbm, orbit_matrix
from orbitree.series import act_b, word_to_series, series_to_word, orb10, verify_block_decomposition

f = word_to_series((1, 0, 0, 0))
print(f, "->", act_b(f), series_to_word(act_b(f)))

L = catalog.lamplighter()
M = orbit_matrix((1,) + (0,) * 31, L.word("b"), 32, automaton=L)
print(matrix_to_ascii(M))
print("set pixels:", int(M.sum()))

# the 2**(n+1) square splits into three copies of the 2**n square
print([verify_block_decomposition(n) for n in range(5)])

# orbit sizes of 1 0^k
print([orb10(k) for k in range(1, 9)])

# a random start word gives an irregular pattern; PBM keeps it diffable
rng = np.random.default_rng(0)
v = tuple(int(x) for x in rng.integers(0, 2, 64))
pbm = matrix_to_pbm(orbit_matrix(v, "b", 64))
print(pbm[:40])
