"""
Invariant measures
==================

Sample exact invariant measures on an orbit tree, split them into
ergodic parts, and check the decomposition identity vertex by vertex.
"""

from orbitree import catalog, build_orbit_tree, random_invariant_measure, verify_decomposition
from orbitree.measures import (
    check_invariance,
    decomposition_failures,
    ergodic_coefficients,
    psi_prefix,
    ray_measure,
)

U = catalog.universal_grigorchuk()
gens = U.generators()
tree = build_orbit_tree(U, gens, 4)

mu = random_invariant_measure(tree, seed=1)
print(mu.cylinder(tree, (0, 2)), mu.cylinder(tree, (3, 5)))   # same orbit, same weight
print(check_invariance(U, gens, mu, tree=tree))

coeffs = ergodic_coefficients(tree, mu, 2)
print(sum(coeffs.values()), len(coeffs))

# each boundary point picks a ray; the ray's measure is uniform on its orbits
ray = psi_prefix(tree, (0, 4, 2, 1))
print([node.size for node in ray])
print(ray_measure(tree, ray).cylinder(tree, (3, 1, 5, 4)))

print(verify_decomposition(tree, mu, (1, 2)))
print(decomposition_failures(tree, mu))
