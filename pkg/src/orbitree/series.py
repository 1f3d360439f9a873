"""The lamplighter action as arithmetic on GF(2) power series.

A binary word ``a_0 a_1 ... a_{m-1}`` is the series ``a_0 + a_1 t + ...``
truncated mod ``t**m``, stored as an int with bit ``i`` = coefficient of
``t**i``.  Then ``b(f) = (1 + t) f`` and ``a(f) = (1 + t) f + 1``, and
``(1 + t) f`` is ``f ^ (f << 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .automaton import act_word


@dataclass(frozen=True)
class Poly2:
    bits: int
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("truncation degree must be non-negative")
        object.__setattr__(self, "bits", self.bits & ((1 << self.m) - 1))

    @property
    def mask(self):
        return (1 << self.m) - 1

    def coefficients(self):
        return [(self.bits >> i) & 1 for i in range(self.m)]

    def __str__(self):
        terms = [("1" if i == 0 else "t" if i == 1 else f"t^{i}") for i in range(self.m) if self.bits >> i & 1]
        return " + ".join(terms) or "0"


def act_b(f):
    return Poly2(f.bits ^ (f.bits << 1), f.m)


def act_a(f):
    return Poly2(f.bits ^ (f.bits << 1) ^ 1, f.m)


def word_to_series(word):
    bits = 0
    for i, x in enumerate(word):
        if x not in (0, 1):
            raise ValueError("series model needs a binary word")
        bits |= x << i
    return Poly2(bits, len(word))


def series_to_word(f):
    return tuple(f.coefficients())


def _series_step(element):
    if element == "a":
        return act_a
    if element == "b":
        return act_b
    raise ValueError(f"series model knows elements 'a' and 'b', not {element!r}")


def orbit_matrix(v, g, rows, automaton=None):
    """``rows x |v|`` bit matrix whose row ``i`` is ``g**i(v)``.

    ``g`` is ``"a"`` or ``"b"`` for the series model, or a GroupWord
    acting through ``automaton``.  Rows continue past the orbit period.
    """
    if rows < 1:
        raise ValueError("rows must be >= 1")
    out = np.zeros((rows, len(v)), dtype=np.uint8)
    if automaton is None:
        step = _series_step(g)
        f = word_to_series(v)
        for i in range(rows):
            out[i] = f.coefficients()
            f = step(f)
    else:
        w = tuple(v)
        for i in range(rows):
            out[i] = w
            w = act_word(automaton, g, w)
    return out


def one_then_zeros(k):
    """The word ``1 0^k``."""
    return (1,) + (0,) * k


def block_decomposition_holds(big, small):
    """Whether ``big == [[small, 0], [small, small]]`` exactly."""
    n = small.shape[0]
    if small.shape != (n, n) or big.shape != (2 * n, 2 * n):
        return False
    return (
        np.array_equal(big[:n, :n], small)
        and not big[:n, n:].any()
        and np.array_equal(big[n:, :n], small)
        and np.array_equal(big[n:, n:], small)
    )


def verify_block_decomposition(n):
    """Block structure of ``M(1 0^(2^(n+1)-1), b)`` in terms of ``M(1 0^(2^n-1), b)``."""
    half = 2**n
    small = orbit_matrix(one_then_zeros(half - 1), "b", half)
    big = orbit_matrix(one_then_zeros(2 * half - 1), "b", 2 * half)
    # the orbit closes after exactly 2^(n+1) steps
    last = orbit_matrix(one_then_zeros(2 * half - 1), "b", 2 * half + 1)[-1]
    return block_decomposition_holds(big, small) and np.array_equal(last, big[0])


def orbit_size(v, element):
    """Size of the orbit of ``v`` under the series action of ``a`` or ``b``."""
    step = _series_step(element)
    start = word_to_series(v)
    f = step(start)
    size = 1
    while f != start:
        f = step(f)
        size += 1
    return size


def orbit_size_automaton(automaton, g, v):
    """Brute-force orbit size of ``v`` under ``g`` via the automaton action."""
    start = tuple(v)
    w = act_word(automaton, g, start)
    size = 1
    while w != start:
        w = act_word(automaton, g, w)
        size += 1
    return size


def log_formula(k):
    """``2**(floor(log2 k) + 1)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return 2 ** k.bit_length()


def orb10(k):
    """``(formula, brute force)`` for the orbit of ``1 0^k`` under ``b``."""
    return log_formula(k), orbit_size(one_then_zeros(k), "b")


def orb1w(i, w):
    """``(formula, brute force)`` for the orbit of ``0^i 1 w`` under ``b``."""
    return log_formula(len(w)), orbit_size((0,) * i + (1,) + tuple(w), "b")


def orb_a(w):
    """``(formula, brute force)`` for the orbit of ``w`` under ``a``."""
    return log_formula(len(w)), orbit_size(tuple(w), "a")
