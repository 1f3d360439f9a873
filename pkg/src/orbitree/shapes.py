"""Expected orbit-tree shapes and depth-limited comparison against them.

A recursive shape is described by what each node's children look like.
Comparison interns every subtree (orbit tree and expanded shape alike) as
a canonical id, so two truncated trees agree iff their root ids agree.
On disagreement the walk descends into an unmatched pair of children to
report the first node whose child count differs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class ShapeSpec:
    """Base class.  ``expand(r)`` gives the child shapes of a node at
    relative level ``r`` as ``(shape, child_relative_level)`` pairs."""

    recursive = True

    def expand(self, r):
        raise NotImplementedError


@dataclass(frozen=True)
class Line(ShapeSpec):
    def expand(self, r):
        return ((self, r + 1),)


@dataclass(frozen=True)
class FullRegular(ShapeSpec):
    arity: int

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be positive")

    def expand(self, r):
        return ((self, r + 1),) * self.arity


@dataclass(frozen=True)
class LamplighterA(ShapeSpec):
    """One child on levels ``2**n - 1``, two children elsewhere."""

    def expand(self, r):
        k = 1 if ((r + 1) & r) == 0 else 2
        return ((self, r + 1),) * k


@dataclass(frozen=True)
class LamplighterB(ShapeSpec):
    """The root has two children, rooting a copy of this shape and a LamplighterA."""

    def expand(self, r):
        return ((self, 0), (LamplighterA(), 0))


@dataclass(frozen=True)
class Sushchansky(ShapeSpec):
    """One node on level 1 with ``p`` children: a line and ``p - 1`` full ``p``-ary trees."""

    p: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be at least 2")

    def expand(self, r):
        if r == 0:
            return ((self, 1),)
        return ((Line(), 0),) + ((FullRegular(self.p), 0),) * (self.p - 1)


@dataclass(frozen=True)
class EventuallyRegular(ShapeSpec):
    """Arbitrary above ``start``; every node from level ``start`` on has ``arity`` children."""

    start: int
    arity: int
    recursive = False

    def __post_init__(self):
        if self.start < 0 or self.arity < 1:
            raise ValueError("start must be >= 0 and arity positive")


@dataclass(frozen=True)
class Explicit(ShapeSpec):
    """``table[n]`` lists the child counts of level-``n`` nodes in orbit-id order."""

    table: tuple
    recursive = False

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))


@dataclass(frozen=True)
class ShapeVerdict:
    ok: bool
    depth: int
    level: int | None = None
    orbit_id: int | None = None
    expected: object = None
    actual: object = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"ok (agrees to depth {self.depth})"
        return (
            f"mismatch at level {self.level}, orbit {self.orbit_id}: "
            f"expected {self.expected} children, found {self.actual} (checked to depth {self.depth})"
        )

    def as_dict(self):
        return {
            "ok": self.ok,
            "depth": self.depth,
            "level": self.level,
            "orbit_id": self.orbit_id,
            "expected": self.expected,
            "actual": self.actual,
        }


class _Interner:
    def __init__(self):
        self.ids = {}

    def __call__(self, child_ids):
        key = tuple(sorted(child_ids))
        return self.ids.setdefault(key, len(self.ids))


def _tree_signatures(tree, intern):
    sigs = [None] * (tree.depth + 1)
    sigs[tree.depth] = [intern(()) for _ in tree.levels[tree.depth]]
    for n in range(tree.depth - 1, -1, -1):
        below = sigs[n + 1]
        sigs[n] = [
            intern([below[c] for c in tree.children(n, i)]) for i in range(len(tree.levels[n]))
        ]
    return sigs


def match_shape(tree, shape):
    """Compare ``tree`` with ``shape`` down to ``tree.depth``.

    The verdict only speaks for the levels present in ``tree``.
    """
    if isinstance(shape, EventuallyRegular):
        return _match_eventually_regular(tree, shape)
    if isinstance(shape, Explicit):
        return _match_explicit(tree, shape)

    intern = _Interner()
    sigs = _tree_signatures(tree, intern)

    @lru_cache(maxsize=None)
    def shape_sig(state, remaining):
        if remaining == 0:
            return intern(())
        spec, r = state
        return intern([shape_sig(child, remaining - 1) for child in spec.expand(r)])

    def first_mismatch(level, index, state):
        remaining = tree.depth - level
        if remaining == 0:
            return None
        spec, r = state
        expected = list(spec.expand(r))
        kids = list(tree.children(level, index))
        node = tree.levels[level][index]
        if len(kids) != len(expected):
            return ShapeVerdict(False, tree.depth, level, node.orbit_id, len(expected), len(kids))
        if sigs[level][index] == shape_sig(state, remaining):
            return None
        unmatched = list(expected)
        leftover = []
        for k in kids:
            s = sigs[level + 1][k]
            for j, child in enumerate(unmatched):
                if shape_sig(child, remaining - 1) == s:
                    del unmatched[j]
                    break
            else:
                leftover.append(k)
        for k, child in zip(leftover, unmatched):
            verdict = first_mismatch(level + 1, k, child)
            if verdict is not None:
                return verdict
        return None

    verdict = first_mismatch(0, 0, (shape, 0))
    return ShapeVerdict(True, tree.depth) if verdict is None else verdict


def _match_eventually_regular(tree, shape):
    for n in range(shape.start, tree.depth):
        for node, count in zip(tree.levels[n], tree.child_counts(n)):
            if count != shape.arity:
                return ShapeVerdict(False, tree.depth, n, node.orbit_id, shape.arity, count)
    return ShapeVerdict(True, tree.depth)


def _match_explicit(tree, shape):
    for n in range(tree.depth):
        counts = tree.child_counts(n)
        if n >= len(shape.table):
            return ShapeVerdict(True, min(tree.depth, len(shape.table)))
        row = shape.table[n]
        for i, node in enumerate(tree.levels[n]):
            expected = row[i] if i < len(row) else None
            if counts[i] != expected:
                return ShapeVerdict(False, tree.depth, n, node.orbit_id, expected, counts[i])
        if len(row) != len(counts):
            return ShapeVerdict(False, tree.depth, n, None, len(row), len(counts))
    return ShapeVerdict(True, tree.depth)


def parse_shape(text):
    """Parse a command-line shape name.

    ``line``, ``full:K``, ``lamplighter-a``, ``lamplighter-b``,
    ``sushchansky:P``, ``eventually:N0:K``, ``explicit:1;2;1,1`` (levels
    separated by ``;``, child counts by ``,``).
    """
    name, _, rest = text.strip().partition(":")
    name = name.lower()
    try:
        if name == "line":
            return Line()
        if name == "full":
            return FullRegular(int(rest))
        if name == "lamplighter-a":
            return LamplighterA()
        if name == "lamplighter-b":
            return LamplighterB()
        if name == "sushchansky":
            return Sushchansky(int(rest))
        if name == "eventually":
            start, arity = rest.split(":")
            return EventuallyRegular(int(start), int(arity))
        if name == "explicit":
            rows = [[int(c) for c in row.split(",") if c] for row in rest.split(";")]
            return Explicit(tuple(tuple(r) for r in rows))
    except ValueError as exc:
        raise ValueError(f"bad shape {text!r}: {exc}") from None
    raise ValueError(f"unknown shape {text!r}")
