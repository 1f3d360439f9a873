"""Acceptance criteria, each at its stated tolerance.

Run under pytest (a PASS/FAIL line per criterion is printed in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""
import itertools
import os
import resource
import sys
import time
import tracemalloc
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from invariants import catalog_entries, check_orbit_invariants, check_prefix_and_inverse  # noqa: E402
from orbitree import catalog  # noqa: E402
from orbitree.measures import (  # noqa: E402
    check_invariance,
    decomposition_failures,
    random_invariant_measure,
    verify_decomposition,
)
from orbitree.orbit_tree import build_orbit_tree  # noqa: E402
from orbitree.shapes import LamplighterA, LamplighterB, match_shape  # noqa: E402
from orbitree.verify import (  # noqa: E402
    LL2_AC_ORDERS,
    SIERPINSKI_HEAD,
    case_block_decomposition,
    case_cross_model,
    case_ll2_order,
    case_orb_formulas,
    case_sushchansky,
    case_universal,
    sierpinski_ascii,
)

GOLDEN = Path(__file__).parent / "golden"
RESULTS = {}


def record(key, passed, detail):
    RESULTS[key] = (passed, detail)
    assert passed, detail


def criterion_1():
    L = catalog.lamplighter()
    tracemalloc.start()
    start = time.perf_counter()
    tree = build_orbit_tree(L, [L.word("a")], 16)
    elapsed = time.perf_counter() - start
    peak = tracemalloc.get_traced_memory()[1]
    tracemalloc.stop()
    ones = [n for n in range(16) if set(tree.child_counts(n)) == {1}]
    twos = [n for n in range(16) if set(tree.child_counts(n)) == {2}]
    rss = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024
    ok = (
        ones == [0, 1, 3, 7, 15]
        and len(ones) + len(twos) == 16
        and bool(match_shape(tree, LamplighterA()))
        and elapsed < 10
        and peak < 2**30
        and rss < 2**30
    )
    return ok, f"one-child levels {ones}, {elapsed:.2f} s, traced peak {peak / 2**20:.1f} MiB, rss {rss / 2**20:.0f} MiB"


def criterion_2():
    L = catalog.lamplighter()
    verdict = match_shape(build_orbit_tree(L, [L.word("b")], 14), LamplighterB())
    return verdict.ok, str(verdict)


def criterion_3():
    verdict = case_orb_formulas(depth=14, seed=0, trials=50)
    return verdict["passed"], f"{verdict['checked']} cases, {len(verdict['mismatches'])} mismatches"


def criterion_4():
    verdict = case_block_decomposition(depth=4)
    return verdict["passed"], f"n = 0..4: {verdict['results']}"


def criterion_5():
    text = sierpinski_ascii(32) + "\n"
    golden = (GOLDEN / "sierpinski32.txt").read_bytes()
    # rows are fixed width; the listed rows are compared without trailing padding
    head = tuple(line.rstrip() for line in text.split("\n")[:8])
    ok = text.encode() == golden and head == SIERPINSKI_HEAD
    return ok, f"golden bytes equal: {text.encode() == golden}, first 8 rows match: {head == SIERPINSKI_HEAD}"


def criterion_6():
    start = time.perf_counter()
    verdict = case_universal(depth=4)
    elapsed = time.perf_counter() - start
    return verdict["passed"] and elapsed < 1, f"levels 1..4 exact products, {elapsed:.3f} s"


def criterion_7(p):
    verdict = case_sushchansky(p, depth=5, seed=0, trials=3)
    shapes = [o["shape"] for o in verdict["orders"]]
    first_bad = next((s for s in shapes if not s["ok"]), None)
    detail = f"p={p}: level sizes {verdict['orders'][0]['level_sizes']}, identical across orders: {verdict['identical_across_orders']}"
    if first_bad:
        detail += f", mismatch at level {first_bad['level']} (expected {first_bad['expected']} children, found {first_bad['actual']})"
    return verdict["passed"], detail


def criterion_8(trials=100, depth=8, seed=7):
    L = catalog.lamplighter()
    U = catalog.universal_grigorchuk()
    failures = 0
    literal = 0
    for automaton, gens in ((L, [L.word("a")]), (U, U.generators())):
        tree = build_orbit_tree(automaton, gens, depth)
        d = automaton.degree
        for t in range(trials):
            mu = random_invariant_measure(tree, depth, seed=seed * 100003 + t)
            if not check_invariance(automaton, gens, mu, tree=tree):
                failures += 1
            failures += len(decomposition_failures(tree, mu))
            if t < 2:
                # the literal per-vertex sum, on every vertex where it is affordable
                for n in range(depth + 1 if d == 2 else 3):
                    for v in itertools.product(range(d), repeat=n):
                        literal += 1
                        failures += not verify_decomposition(tree, mu, v)
    return failures == 0, f"{2 * trials} measures at depth {depth}, {failures} failures, {literal} literal vertex checks"


def criterion_9():
    verdict = case_cross_model(depth=14)
    return verdict["passed"], f"{verdict['words']} words, {verdict['disagreements']} disagreements"


def criterion_10():
    problems = []
    for label, automaton, gens, depth in catalog_entries():
        for problem in (check_prefix_and_inverse(automaton, depth), check_orbit_invariants(automaton, gens, depth)):
            if problem:
                problems.append(f"{label}: {problem}")
    return not problems, "; ".join(problems) or "all catalog automata, depth 10 (universal depth 4)"


def criterion_11():
    verdict = case_ll2_order(depth=12)
    orders = verdict["orders"]
    ok = verdict["nondecreasing"] and orders == list(LL2_AC_ORDERS) and orders[11] >= LL2_AC_ORDERS[11]
    return ok, f"orders {orders}; recorded threshold {LL2_AC_ORDERS[11]} reached at level {orders.index(16) + 1}"


def test_criterion_1():
    record("1", *criterion_1())


def test_criterion_2():
    record("2", *criterion_2())


def test_criterion_3():
    record("3", *criterion_3())


def test_criterion_4():
    record("4", *criterion_4())


def test_criterion_5():
    record("5", *criterion_5())


def test_criterion_6():
    record("6", *criterion_6())


def test_criterion_7_p3():
    record("7 (p=3)", *criterion_7(3))


@pytest.mark.xfail(
    strict=True,
    reason="for p=2 the generator A acts on level 2 as a single 4-cycle, so level 2 is one orbit",
)
def test_criterion_7_p2():
    record("7 (p=2)", *criterion_7(2))


def test_criterion_8():
    record("8", *criterion_8())


def test_criterion_9():
    record("9", *criterion_9())


def test_criterion_10():
    record("10", *criterion_10())


def test_criterion_11():
    record("11", *criterion_11())


CRITERIA = [
    ("1", criterion_1),
    ("2", criterion_2),
    ("3", criterion_3),
    ("4", criterion_4),
    ("5", criterion_5),
    ("6", criterion_6),
    ("7 (p=3)", lambda: criterion_7(3)),
    ("7 (p=2)", lambda: criterion_7(2)),
    ("8", criterion_8),
    ("9", criterion_9),
    ("10", criterion_10),
    ("11", criterion_11),
]


def format_line(key, passed, detail):
    return f"criterion {key}: {'PASS' if passed else 'FAIL'} ({detail})"


if __name__ == "__main__":
    all_ok = True
    for key, fn in CRITERIA:
        passed, detail = fn()
        all_ok &= passed
        print(format_line(key, passed, detail), flush=True)
    sys.exit(0 if all_ok else 1)
