"""
Automata and their action on words
==================================

Build the lamplighter automaton from its wreath recursion, act on words,
and take sections.
"""

from orbitree import catalog, parse_automaton, format_group_word
from orbitree.automaton import act_word, section, level_permutation, cycle_lengths

L = catalog.lamplighter()
a, b = L.word("a"), L.word("b")

# a flips the first letter and continues as b after a 0, as a after a 1
print(act_word(L, a, (0, 0)))          # (1, 0)
print(act_word(L, b, (1, 0)))          # (1, 1)
print(format_group_word(section(L, a, (0,)), L))

# a word g = f1 f2 ... fk applies fk first
ab = L.word("a", "b")
print(act_word(L, ab, (0, 1, 1, 0)))

# the same automaton, written as text
src = """
alphabet 0 1
state a -> (b, a) perm [1, 0]
state b -> (b, a)
"""
print(parse_automaton(src) == L)

# the action on a whole level is a permutation of 2**n indices
perm = level_permutation(L, a, 3)
print(perm, cycle_lengths(perm))
