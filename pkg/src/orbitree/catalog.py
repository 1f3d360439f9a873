"""Concrete automata: lamplighter, universal Grigorchuk group, Sushchansky
groups, the rank-2 lamplighter example, adding machine, root swap."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import NamedTuple

from .automaton import Alphabet, MealyAutomaton, Permutation


def lamplighter():
    """``a = (b, a) sigma``, ``b = (b, a)`` over ``{0, 1}``."""
    swap = Permutation((1, 0))
    return MealyAutomaton.from_recursion(2, {"a": (("b", "a"), swap), "b": (("b", "a"), None)})


def universal_grigorchuk():
    """The universal Grigorchuk group over the alphabet ``1..6``.

    ``a = (1,1,1,1,1,1)(14)(25)(36)``, ``b = (a,a,1,b,b,b)``,
    ``c = (a,1,a,c,c,c)``, ``d = (1,a,a,d,d,d)``; ``e`` is the identity.
    """
    alphabet = Alphabet(("1", "2", "3", "4", "5", "6"))
    a_perm = Permutation.from_cycles(6, (0, 3), (1, 4), (2, 5))
    return MealyAutomaton.from_recursion(
        alphabet,
        {
            "a": (("e",) * 6, a_perm),
            "b": (("a", "a", "e", "b", "b", "b"), None),
            "c": (("a", "e", "a", "c", "c", "c"), None),
            "d": (("e", "a", "a", "d", "d", "d"), None),
            "e": (("e",) * 6, None),
        },
    )


def ll2():
    """``a = (d, d) sigma``, ``b = (c, c)``, ``c = (a, b)``, ``d = (b, a)``, plus identity ``e``."""
    swap = Permutation((1, 0))
    return MealyAutomaton.from_recursion(
        2,
        {
            "a": (("d", "d"), swap),
            "b": (("c", "c"), None),
            "c": (("a", "b"), None),
            "d": (("b", "a"), None),
            "e": (("e", "e"), None),
        },
    )


def adding_machine():
    """Binary odometer ``a = (e, a) sigma``."""
    swap = Permutation((1, 0))
    return MealyAutomaton.from_recursion(2, {"a": (("e", "a"), swap), "e": (("e", "e"), None)})


def root_swap():
    """``s = (e, e) sigma``: swaps the first letter only; generates a group of order 2."""
    swap = Permutation((1, 0))
    return MealyAutomaton.from_recursion(2, {"s": (("e", "e"), swap), "e": (("e", "e"), None)})


def _is_prime(p):
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class SushchanskyOrder:
    """A linear order on ``{0..p-1}**2``, as the list of pairs ``(alpha, beta)``."""

    p: int
    pairs: tuple

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        full = set(itertools.product(range(self.p), repeat=2))
        if len(pairs) != len(full) or set(pairs) != full:
            raise ValueError(f"pairs must enumerate all of {{0..{self.p - 1}}}^2 exactly once")

    @classmethod
    def lexicographic(cls, p):
        return cls(p, tuple(itertools.product(range(p), repeat=2)))

    @classmethod
    def random(cls, p, seed=None):
        pairs = list(itertools.product(range(p), repeat=2))
        random.Random(seed).shuffle(pairs)
        return cls(p, tuple(pairs))

    @classmethod
    def parse(cls, p, text):
        """``"00,01,10,11"``: one two-digit token per pair."""
        pairs = []
        for tok in text.split(","):
            tok = tok.strip()
            if len(tok) != 2 or not tok.isdigit():
                raise ValueError(f"bad pair {tok!r} in pair order")
            pairs.append((int(tok[0]), int(tok[1])))
        return cls(p, tuple(pairs))

    def format(self):
        return ",".join(f"{a}{b}" for a, b in self.pairs)

    def u_word(self):
        return tuple(0 if b == 0 else 1 for _, b in self.pairs)

    def v_word(self):
        p = self.p
        # -alpha / beta via Fermat inverse
        return tuple(
            1 if b == 0 else (p - (a * pow(b, p - 2, p)) % p) % p for a, b in self.pairs
        )


class Sushchansky(NamedTuple):
    automaton: MealyAutomaton
    generators: list
    order: SushchanskyOrder


def sushchansky(order):
    """Sushchansky group ``G_lambda`` as one Mealy automaton with generators ``A, B``.

    States: ``e``, ``s1..s{p-1}`` (powers of the cycle ``x -> x+1``),
    ``A = (e, s1, ..., s{p-1}) sigma``, ``B`` with glue states ``B0, B1, B2``
    realizing ``B|_00 = q1``, ``B|_10 = r1``, ``B|_21 = s1`` (trivial on the
    first two levels), and ``q_i = (q_{i+1}, s^{u_i}, e, ...)``,
    ``r_i = (r_{i+1}, s^{v_i}, e, ...)`` with indices mod ``p**2``.

    For ``p = 2`` the vertex ``21`` does not exist and ``B2`` is omitted.
    """
    if isinstance(order, int):
        order = SushchanskyOrder.lexicographic(order)
    p = order.p
    n = p * p
    cycle = Permutation(tuple((x + 1) % p for x in range(p)))

    def power(k):
        return "e" if k % p == 0 else f"s{k % p}"

    def trivial_but(assign):
        row = ["e"] * p
        for x, name in assign.items():
            row[x] = name
        return tuple(row)

    rec = {"A": (tuple(power(x) for x in range(p)), cycle)}
    glue = {0: "B0", 1: "B1"}
    if p > 2:
        glue[2] = "B2"
    rec["B"] = (trivial_but(glue), None)
    rec["B0"] = (trivial_but({0: "q1"}), None)
    rec["B1"] = (trivial_but({0: "r1"}), None)
    if p > 2:
        rec["B2"] = (trivial_but({1: power(1)}), None)
    u, v = order.u_word(), order.v_word()
    for i in range(n):
        nxt = (i + 1) % n + 1
        rec[f"q{i + 1}"] = (trivial_but({0: f"q{nxt}", 1: power(u[i])}), None)
    for i in range(n):
        nxt = (i + 1) % n + 1
        rec[f"r{i + 1}"] = (trivial_but({0: f"r{nxt}", 1: power(v[i])}), None)
    for k in range(1, p):
        rec[f"s{k}"] = (("e",) * p, Permutation(tuple((x + k) % p for x in range(p))))
    rec["e"] = (("e",) * p, None)
    automaton = MealyAutomaton.from_recursion(p, rec)
    gens = [automaton.word("A"), automaton.word("B")]
    return Sushchansky(automaton, gens, order)


BUILTINS = ("lamplighter", "universal", "sushchansky:p[:order]", "ll2", "adding", "rootswap")


def builtin(name):
    """``(automaton, default generators)`` for a builtin name.

    Default generators are all states, except for Sushchansky groups
    where they are ``A`` and ``B``.
    """
    name = name.strip()
    simple = {
        "lamplighter": lamplighter,
        "universal": universal_grigorchuk,
        "ll2": ll2,
        "adding": adding_machine,
        "rootswap": root_swap,
    }
    if name in simple:
        automaton = simple[name]()
        return automaton, automaton.generators()
    head, _, rest = name.partition(":")
    if head == "sushchansky":
        p_text, _, order_text = rest.partition(":")
        if not p_text:
            raise ValueError("sushchansky needs a prime: sushchansky:p[:order]")
        p = int(p_text)
        order = SushchanskyOrder.parse(p, order_text) if order_text else SushchanskyOrder.lexicographic(p)
        group = sushchansky(order)
        return group.automaton, group.generators
    raise ValueError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")
