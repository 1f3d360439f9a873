"""Named verification cases.  Each returns a JSON-serializable verdict dict
with a boolean ``passed`` and the values that were compared."""
from __future__ import annotations

import itertools
import math
import random
import time

import numpy as np

from . import catalog
from .automaton import act_word, decode_vertex, permutation_order_at_level
from .measures import check_invariance, decomposition_failures, random_invariant_measure
from .orbit_tree import build_orbit_tree
from .orbits import compute_level_orbits
from .render import matrix_to_ascii
from .series import (
    act_a,
    act_b,
    orb1w,
    orb10,
    orb_a,
    orbit_matrix,
    orbit_size_automaton,
    one_then_zeros,
    series_to_word,
    verify_block_decomposition,
    word_to_series,
)
from .shapes import LamplighterA, LamplighterB, Sushchansky, match_shape

# order of ac at levels 1..12, recorded from a brute-force run
LL2_AC_ORDERS = (2, 4, 4, 8, 8, 8, 8, 16, 16, 16, 16, 16)


def _verdict(case, passed, **details):
    return {"case": case, "passed": bool(passed), **details}


def case_lamplighter_a(depth=16, **_):
    L = catalog.lamplighter()
    start = time.perf_counter()
    tree = build_orbit_tree(L, [L.word("a")], depth)
    verdict = match_shape(tree, LamplighterA())
    elapsed = time.perf_counter() - start
    single = [n for n in range(depth) if set(tree.child_counts(n)) == {1}]
    return _verdict(
        "lamplighter-a",
        verdict.ok,
        depth=depth,
        one_child_levels=single,
        seconds=round(elapsed, 3),
        shape=verdict.as_dict(),
    )


def case_lamplighter_b(depth=14, **_):
    L = catalog.lamplighter()
    tree = build_orbit_tree(L, [L.word("b")], depth)
    verdict = match_shape(tree, LamplighterB())
    return _verdict("lamplighter-b", verdict.ok, depth=depth, shape=verdict.as_dict())


def case_orb_formulas(depth=14, seed=0, trials=50, **_):
    """Orbit-size closed forms against brute force, for word lengths up to ``depth - 1``."""
    rng = random.Random(seed)
    L = catalog.lamplighter()
    a, b = L.word("a"), L.word("b")
    maxlen = depth - 1
    mismatches = []
    checked = 0
    for k in range(1, maxlen + 1):
        formula, computed = orb10(k)
        checked += 1
        if formula != computed:
            mismatches.append({"check": "orb10", "k": k, "formula": formula, "computed": computed})
    for _ in range(trials):
        length = rng.randint(1, maxlen)
        w = tuple(rng.randint(0, 1) for _ in range(length))
        formula, computed = orb_a(w)
        brute = orbit_size_automaton(L, a, w)
        checked += 1
        if not formula == computed == brute:
            mismatches.append({"check": "orb_a", "w": w, "formula": formula, "computed": computed, "automaton": brute})
        for i in range(4):
            formula, computed = orb1w(i, w)
            brute = orbit_size_automaton(L, b, (0,) * i + (1,) + w)
            checked += 1
            if not formula == computed == brute:
                mismatches.append(
                    {"check": "orb1w", "i": i, "w": w, "formula": formula, "computed": computed, "automaton": brute}
                )
    return _verdict("orb-formulas", not mismatches, checked=checked, mismatches=mismatches)


def case_block_decomposition(depth=4, **_):
    results = {n: verify_block_decomposition(n) for n in range(depth + 1)}
    return _verdict("block-decomposition", all(results.values()), results={str(k): v for k, v in results.items()})


def pascal_mod2_rows(rows, width):
    """Rows of binomial coefficients mod 2, ``row i, column j = C(i, j) mod 2``."""
    return [[math.comb(i, j) % 2 for j in range(width)] for i in range(rows)]


SIERPINSKI_HEAD = ("X", "XX", "X X", "XXXX", "X   X", "XX  XX", "X X X X", "XXXXXXXX")


def sierpinski_ascii(rows=32):
    L = catalog.lamplighter()
    return matrix_to_ascii(orbit_matrix(one_then_zeros(rows - 1), L.word("b"), rows, automaton=L))


def case_sierpinski_figure(rows=32, **_):
    text = sierpinski_ascii(rows)
    lines = text.split("\n")
    head_ok = tuple(line.rstrip() for line in lines[:8]) == SIERPINSKI_HEAD
    expected = matrix_to_ascii(np.array(pascal_mod2_rows(rows, rows)))
    return _verdict(
        "sierpinski-figure",
        head_ok and text == expected,
        rows=rows,
        head_matches=head_ok,
        pascal_matches=text == expected,
    )


def case_universal(depth=4, **_):
    U = catalog.universal_grigorchuk()
    gens = U.generators()
    per_level = {}
    passed = True
    start = time.perf_counter()
    for n in range(1, depth + 1):
        lo = compute_level_orbits(U, gens, n)
        classes = {}
        for v in range(6**n):
            key = tuple(x % 3 for x in decode_vertex(v, n, 6))
            classes.setdefault(key, set()).add(int(lo.orbit_id[v]))
        ok = (
            len(classes) == 3**n
            and all(len(ids) == 1 for ids in classes.values())
            and lo.count == 3**n
            and set(lo.sizes.values()) == {2**n}
        )
        per_level[str(n)] = {"orbits": lo.count, "sizes": sorted(set(lo.sizes.values())), "ok": ok}
        passed &= ok
    return _verdict("universal", passed, levels=per_level, seconds=round(time.perf_counter() - start, 3))


def case_sushchansky(p, depth=5, seed=0, trials=3, **_):
    rng = random.Random(seed)
    results = []
    shapes = set()
    for t in range(trials):
        order = catalog.SushchanskyOrder.random(p, rng.randrange(2**32))
        group = catalog.sushchansky(order)
        tree = build_orbit_tree(group.automaton, group.generators, depth)
        verdict = match_shape(tree, Sushchansky(p))
        shapes.add(tuple(tuple(tree.child_counts(n)) for n in range(depth)))
        results.append({"order": order.format(), "level_sizes": tree.level_sizes(), "shape": verdict.as_dict()})
    passed = all(r["shape"]["ok"] for r in results) and len(shapes) == 1
    return _verdict(f"sushchansky:{p}", passed, depth=depth, orders=results, identical_across_orders=len(shapes) == 1)


def case_decomposition(depth=8, seed=7, trials=100, **_):
    L = catalog.lamplighter()
    U = catalog.universal_grigorchuk()
    setups = [("lamplighter<a>", L, [L.word("a")]), ("universal", U, U.generators())]
    summary = {}
    passed = True
    for label, automaton, gens in setups:
        tree = build_orbit_tree(automaton, gens, depth)
        failures = 0
        not_invariant = 0
        for t in range(trials):
            mu = random_invariant_measure(tree, depth, seed=seed * 100003 + t)
            if not check_invariance(automaton, gens, mu, tree=tree):
                not_invariant += 1
            failures += len(decomposition_failures(tree, mu))
        summary[label] = {"trials": trials, "vertex_failures": failures, "non_invariant": not_invariant}
        passed &= failures == 0 and not_invariant == 0
    return _verdict("decomposition", passed, depth=depth, results=summary)


def case_cross_model(depth=14, **_):
    L = catalog.lamplighter()
    a, b = L.word("a"), L.word("b")
    disagreements = 0
    for w in itertools.product((0, 1), repeat=depth):
        f = word_to_series(w)
        if act_word(L, a, w) != series_to_word(act_a(f)):
            disagreements += 1
        if act_word(L, b, w) != series_to_word(act_b(f)):
            disagreements += 1
    return _verdict("cross-model", disagreements == 0, words=2**depth, disagreements=disagreements)


def case_ll2_order(depth=12, **_):
    G = catalog.ll2()
    ac = G.word("a", "c")
    orders = [permutation_order_at_level(G, ac, n) for n in range(1, depth + 1)]
    nondecreasing = all(x <= y for x, y in zip(orders, orders[1:]))
    golden = list(LL2_AC_ORDERS[: len(orders)])
    passed = nondecreasing and orders[: len(golden)] == golden
    if depth >= 12:
        passed &= orders[11] >= LL2_AC_ORDERS[11]
    return _verdict("ll2-order", passed, orders=orders, golden=golden, nondecreasing=nondecreasing)


CASES = {
    "lamplighter-a": case_lamplighter_a,
    "lamplighter-b": case_lamplighter_b,
    "orb-formulas": case_orb_formulas,
    "block-decomposition": case_block_decomposition,
    "universal": case_universal,
    "decomposition": case_decomposition,
    "sierpinski-figure": case_sierpinski_figure,
    "cross-model": case_cross_model,
    "ll2-order": case_ll2_order,
}


def run_case(name, depth=None, seed=None, trials=None):
    kwargs = {}
    if depth is not None:
        kwargs["depth"] = depth
    if seed is not None:
        kwargs["seed"] = seed
    if trials is not None:
        kwargs["trials"] = trials
    if name.startswith("sushchansky:"):
        return case_sushchansky(int(name.split(":", 1)[1]), **kwargs)
    if name == "sierpinski-figure" and "depth" in kwargs:
        kwargs["rows"] = kwargs.pop("depth")
    if name not in CASES:
        raise KeyError(f"unknown case {name!r}; choose from {', '.join(sorted(CASES))}, sushchansky:p")
    return CASES[name](**kwargs)
