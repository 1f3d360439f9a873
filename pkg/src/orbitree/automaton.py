"""Invertible Mealy automata and the tree automorphisms they define.

Conventions used throughout the package:

* A level-``n`` vertex is a tuple of ``n`` letter indices.  It is encoded as
  an integer in ``[0, d**n)`` with the *first* letter as the most
  significant digit, so prefix order equals numeric order.
* A :class:`GroupWord` ``f_1 f_2 ... f_k`` acts as the composition
  ``f_1 o f_2 o ... o f_k``: the rightmost factor is applied first.
* A wreath recursion ``g = (g_0, ..., g_{d-1}) tau`` means
  ``g(x w) = tau(x) g_x(w)``.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterator

import numpy as np

from .errors import ResourceLimitError

DEFAULT_VERTEX_BUDGET = 2**24
BUDGET_ENV = "ORBITREE_VERTEX_BUDGET"


def vertex_budget(budget=None):
    """Per-level vertex cap: explicit value, else the env override, else 2**24."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_VERTEX_BUDGET


def check_budget(d, n, budget=None):
    limit = vertex_budget(budget)
    if d**n > limit:
        raise ResourceLimitError(
            f"level {n} has {d}**{n} = {d**n} vertices, budget is {limit}"
        )


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple

    def __post_init__(self):
        symbols = tuple(str(s) for s in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if len(symbols) < 2:
            raise ValueError("an alphabet needs at least two symbols")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"alphabet symbols are not distinct: {symbols}")

    @classmethod
    def of_size(cls, d):
        return cls(tuple(str(i) for i in range(d)))

    @property
    def size(self):
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def index(self, symbol):
        return self.symbols.index(symbol)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{0..d-1}``; ``images[i]`` is the image of ``i``."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {list(images)}")

    @classmethod
    def identity(cls, d):
        return cls(tuple(range(d)))

    @classmethod
    def from_cycles(cls, d, *cycles):
        images = list(range(d))
        for cycle in cycles:
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    def __call__(self, x):
        return self.images[x]

    def __len__(self):
        return len(self.images)

    def __mul__(self, other):
        # (self * other)(x) = self(other(x))
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    def order(self):
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)


@dataclass(frozen=True)
class GroupWord:
    """A formal product of automaton states and their inverses.

    ``factors`` holds ``(state_index, sign)`` pairs with ``sign`` in
    ``{+1, -1}``; the empty tuple is the identity.  No free reduction is
    performed.
    """

    factors: tuple = ()

    def __post_init__(self):
        factors = tuple((int(s), int(e)) for s, e in self.factors)
        for _, sign in factors:
            if sign not in (1, -1):
                raise ValueError(f"factor sign must be +1 or -1, got {sign}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def state(cls, index, sign=1):
        return cls(((index, sign),))

    @classmethod
    def identity(cls):
        return cls(())

    def __mul__(self, other):
        return GroupWord(self.factors + other.factors)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return GroupWord(self.factors * k)

    def __len__(self):
        return len(self.factors)

    def inverse(self):
        return GroupWord(tuple((s, -e) for s, e in reversed(self.factors)))


def encode_vertex(word, d):
    """Mixed-radix index of ``word``; the first letter is most significant."""
    index = 0
    for x in word:
        index = index * d + x
    return index


def decode_vertex(index, n, d):
    letters = [0] * n
    for i in range(n - 1, -1, -1):
        index, letters[i] = divmod(index, d)
    return tuple(letters)


class MealyAutomaton:
    """A finite invertible Mealy automaton ``(Q, Sigma, pi, lambda)``.

    Parameters
    ----------
    alphabet : Alphabet
    states : sequence of str
        State names, in declaration order.
    transitions : sequence of sequences of int
        ``transitions[q][x]`` is the index of the state ``pi(q, x)``.
    outputs : sequence of Permutation
        ``outputs[q]`` is the permutation ``lambda(q, .)``.

    Instances are immutable.  Inverse states are materialized lazily in a
    doubled table: row ``q`` is state ``q``, row ``Q + q`` is ``q^-1``.
    """

    def __init__(self, alphabet, states, transitions, outputs):
        self.alphabet = alphabet
        self.states = tuple(states)
        self.transitions = tuple(tuple(int(t) for t in row) for row in transitions)
        self.outputs = tuple(
            p if isinstance(p, Permutation) else Permutation(tuple(p)) for p in outputs
        )
        d = alphabet.size
        nq = len(self.states)
        if nq == 0:
            raise ValueError("an automaton needs at least one state")
        if len(set(self.states)) != nq:
            raise ValueError("state names are not distinct")
        if len(self.transitions) != nq or len(self.outputs) != nq:
            raise ValueError("transitions and outputs must have one entry per state")
        for q, row in enumerate(self.transitions):
            if len(row) != d:
                raise ValueError(f"state {self.states[q]!r} has {len(row)} sections, expected {d}")
            for t in row:
                if not 0 <= t < nq:
                    raise ValueError(f"state {self.states[q]!r} has invalid transition target {t}")
        for q, perm in enumerate(self.outputs):
            if len(perm) != d:
                raise ValueError(f"state {self.states[q]!r} has a permutation of the wrong size")

    @classmethod
    def from_recursion(cls, alphabet, recursion):
        """Build from ``{name: (section_names, permutation_or_None)}``.

        Keys are taken in insertion order.  A ``None`` permutation is the
        identity.
        """
        if isinstance(alphabet, int):
            alphabet = Alphabet.of_size(alphabet)
        names = list(recursion)
        index = {name: i for i, name in enumerate(names)}
        transitions, outputs = [], []
        for name in names:
            sections, perm = recursion[name]
            transitions.append([index[s] for s in sections])
            if perm is None:
                perm = Permutation.identity(alphabet.size)
            outputs.append(perm)
        return cls(alphabet, names, transitions, outputs)

    def __repr__(self):
        return f"MealyAutomaton(d={self.degree}, states={list(self.states)})"

    def __eq__(self, other):
        if not isinstance(other, MealyAutomaton):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.states == other.states
            and self.transitions == other.transitions
            and self.outputs == other.outputs
        )

    def __hash__(self):
        return hash((self.alphabet, self.states, self.transitions, self.outputs))

    @property
    def degree(self):
        return self.alphabet.size

    @property
    def num_states(self):
        return len(self.states)

    def state_index(self, name):
        try:
            return self.states.index(name)
        except ValueError:
            raise KeyError(f"unknown state {name!r}") from None

    def word(self, *names):
        """GroupWord from state names; ``"x^-1"`` denotes an inverse."""
        factors = []
        for name in names:
            if name.endswith("^-1"):
                factors.append((self.state_index(name[:-3]), -1))
            else:
                factors.append((self.state_index(name), 1))
        return GroupWord(tuple(factors))

    def generators(self):
        return [GroupWord.state(i) for i in range(self.num_states)]

    @cached_property
    def _tables(self):
        nq, d = self.num_states, self.degree
        trans = np.zeros((2 * nq, d), dtype=np.int64)
        out = np.zeros((2 * nq, d), dtype=np.int64)
        for q in range(nq):
            for x in range(d):
                y = self.outputs[q].images[x]
                t = self.transitions[q][x]
                trans[q, x] = t
                out[q, x] = y
                # q^-1 reads y, writes x, continues as (pi(q, x))^-1
                trans[nq + q, y] = nq + t
                out[nq + q, y] = x
        trans.setflags(write=False)
        out.setflags(write=False)
        return trans, out

    @cached_property
    def _lists(self):
        trans, out = self._tables
        return trans.tolist(), out.tolist()

    def _row(self, factor):
        state, sign = factor
        return state if sign > 0 else self.num_states + state

    def _factor(self, row):
        nq = self.num_states
        return (row, 1) if row < nq else (row - nq, -1)


def act_word(automaton, g, v):
    """Image of the vertex ``v`` (sequence of letter indices) under ``g``."""
    trans, out = automaton._lists
    letters = list(v)
    for factor in reversed(g.factors):
        row = automaton._row(factor)
        for i, x in enumerate(letters):
            letters[i] = out[row][x]
            row = trans[row][x]
    return tuple(letters)


def section(automaton, g, v):
    """The section ``g|_v``, i.e. ``h`` with ``g(v w) = g(v) h(w)``.

    Computed factor by factor: the rightmost factor is restricted at ``v``,
    the next one at the image of ``v`` so far, and so on.
    """
    trans, out = automaton._lists
    letters = list(v)
    rows = []
    for factor in reversed(g.factors):
        row = automaton._row(factor)
        for i, x in enumerate(letters):
            letters[i] = out[row][x]
            row = trans[row][x]
        rows.append(row)
    rows.reverse()
    return GroupWord(tuple(automaton._factor(r) for r in rows))


def invert(automaton):
    """The automaton of inverse states ``q^-1``, in the same state order."""
    nq = automaton.num_states
    trans, out = automaton._tables
    names = [f"{q}^-1" for q in automaton.states]
    transitions = (trans[nq:] - nq).tolist()
    outputs = [Permutation(tuple(out[nq + q].tolist())) for q in range(nq)]
    return MealyAutomaton(automaton.alphabet, names, transitions, outputs)


def _closure(automaton, rows):
    trans, _ = automaton._lists
    seen = list(dict.fromkeys(rows))
    member = set(seen)
    i = 0
    while i < len(seen):
        for t in trans[seen[i]]:
            if t not in member:
                member.add(t)
                seen.append(t)
        i += 1
    return seen


def iter_state_permutations(automaton, rows, depth, budget=None):
    """Yield ``(n, {row: perm})`` for ``n = 0..depth``.

    ``perm`` is the level-``n`` permutation (as an index array) of every
    doubled-table row reachable from ``rows``.  Each level is obtained
    from the previous one via the transition table:
    ``g(x w) = lambda(g, x) * d**(n-1) + g|_x(w)``.
    """
    d = automaton.degree
    check_budget(d, depth, budget)
    trans, out = automaton._tables
    reach = _closure(automaton, rows)
    local = {r: i for i, r in enumerate(reach)}
    ltrans = np.array(
        [[local[t] for t in trans[r]] for r in reach], dtype=np.int64
    ).reshape(len(reach), d)
    lout = out[reach]
    dtype = np.int32 if d**depth < 2**31 else np.int64
    perms = np.zeros((len(reach), 1), dtype=dtype)
    yield 0, {r: perms[local[r]] for r in reach}
    for n in range(1, depth + 1):
        block = d ** (n - 1)
        nxt = np.empty((len(reach), d * block), dtype=dtype)
        for x in range(d):
            nxt[:, x * block:(x + 1) * block] = (
                lout[:, x, None] * block + perms[ltrans[:, x]]
            )
        perms = nxt
        yield n, {r: perms[local[r]] for r in reach}


def compose_level(automaton, g, state_perms, size):
    """Level permutation of the word ``g`` from per-state permutations."""
    arr = np.arange(size, dtype=np.int64)
    for factor in reversed(g.factors):
        arr = state_perms[automaton._row(factor)][arr]
    return arr


def iter_level_permutations(automaton, words, depth, budget=None):
    """Yield ``(n, [perm of each word])`` for levels ``0..depth``."""
    rows = [automaton._row(f) for g in words for f in g.factors]
    d = automaton.degree
    for n, state_perms in iter_state_permutations(automaton, rows, depth, budget):
        yield n, [compose_level(automaton, g, state_perms, d**n) for g in words]


def level_permutation(automaton, g, n, budget=None):
    """Action of ``g`` on level ``n`` as an index array of length ``d**n``.

    ``result[encode_vertex(v)] == encode_vertex(act_word(g, v))``.
    """
    for level, (perm,) in iter_level_permutations(automaton, [g], n, budget):
        if level == n:
            return perm


def cycle_minima(perm):
    """For each point, the smallest point on its cycle.

    Uses pointer doubling: after ``k`` rounds each entry is the minimum
    over the first ``2**k`` iterates.  The loop stops once a round changes
    nothing, which implies the minimum over the whole cycle.
    """
    perm = np.asarray(perm)
    m = np.arange(len(perm), dtype=perm.dtype if len(perm) else np.int64)
    p = perm
    while True:
        m_next = np.minimum(m, m[p])
        if np.array_equal(m_next, m):
            return m
        m = m_next
        p = p[p]


def cycle_lengths(perm):
    """Multiset of cycle lengths as ``{length: count}``."""
    m = cycle_minima(perm)
    sizes = np.bincount(m, minlength=len(m))
    lengths, counts = np.unique(sizes[sizes > 0], return_counts=True)
    return {int(l): int(c) for l, c in zip(lengths, counts)}


def permutation_order(perm):
    return reduce(math.lcm, cycle_lengths(perm), 1)


def permutation_order_at_level(automaton, g, n, budget=None):
    """Least ``m >= 1`` with ``g**m`` trivial on level ``n``."""
    return permutation_order(level_permutation(automaton, g, n, budget))


def iter_words(d, n) -> Iterator[tuple]:
    """All level-``n`` words in index order."""
    for i in range(d**n):
        yield decode_vertex(i, n, d)


def words_as_array(d, n) -> np.ndarray:
    """``(d**n, n)`` array whose row ``i`` is the word with index ``i``."""
    idx = np.arange(d**n, dtype=np.int64)
    cols = [(idx // d ** (n - 1 - j)) % d for j in range(n)]
    return np.stack(cols, axis=1) if n else np.zeros((1, 0), dtype=np.int64)
