"""Independent brute-force reference implementations used by the tests.

These avoid the numpy level-permutation machinery entirely: everything is
computed letter by letter from the automaton's transition and output
tables, or from first principles.
"""
import itertools
from collections import deque


def apply_state(automaton, q, word, inverse=False):
    """Apply one state (or its inverse) by walking the Mealy machine."""
    out = []
    for x in word:
        perm = automaton.outputs[q].images
        if inverse:
            y = perm.index(x)
            out.append(y)
            q = automaton.transitions[q][y]
        else:
            out.append(perm[x])
            q = automaton.transitions[q][x]
    return tuple(out)


def apply_word(automaton, g, word):
    for state, sign in reversed(g.factors):
        word = apply_state(automaton, state, word, inverse=sign < 0)
    return word


def bfs_orbits(automaton, gens, n):
    """Partition of level ``n`` as a sorted list of frozensets of words."""
    d = automaton.degree
    seen = {}
    orbits = []
    for start in itertools.product(range(d), repeat=n):
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for g in gens:
                for img in (apply_word(automaton, g, w), apply_word(automaton, g.inverse(), w)):
                    if img not in orbit:
                        orbit.add(img)
                        queue.append(img)
        for w in orbit:
            seen[w] = len(orbits)
        orbits.append(frozenset(orbit))
    return sorted(orbits, key=min)


def word_index(word, d):
    i = 0
    for x in word:
        i = i * d + x
    return i


def brute_orbit_size(step, start):
    x, k = step(start), 1
    while x != start:
        x, k = step(x), k + 1
    return k


def series_times_one_plus_t(bits, m):
    """Coefficientwise ``(1 + t) f mod t**m`` over GF(2) on a coefficient list."""
    return [bits[0]] + [(bits[i] + bits[i - 1]) % 2 for i in range(1, m)] if m else []
