"""One test per acceptance criterion; each prints a PASS/FAIL line with its runtime."""

import io
import itertools
import json
import time

from maxorders.cli import run
from maxorders.constructions import EXAMPLES, verify_example
from maxorders.grouphom import fis_exists_bruteforce, fis_to_cyclic_exists
from maxorders.numtheory import FiniteAbelianGroup
from maxorders.orbifolds import FreeProduct, enumerate_equal_cone_solutions
from maxorders.oracle import oracle_ch_minus, oracle_max_abelian_op_surface, oracle_max_cyclic_op_surface
from maxorders.quantities import ch_minus, ch_minus_scan, ch_minus_scan_table, consistency_check


def expected_tables(g):
    even = g % 2 == 0
    return {
        "C": 4 * g + 2,
        "A": 4 * g + 4,
        "CE": 2 * g + 2 if even else 2 * g - 2,
        "AE": 2 * g + 2,
        "CE(-,+)": 4 * g + 4 if even else 4 * g - 4,
        "CE(+,-)": 2 * g + 2,
        "CE(-,-)": 2 * g + 1 + (-1) ** g,
        "CE(Mix)": None,
        "AE(Mix)": 2 * g + 4 if even else None,
        "AH-minus": 32 if g == 5 else 4 * g + 4,
    }


def test_table_reproduction(acceptance):
    start = time.perf_counter()
    out = io.StringIO()
    code = run(["orders", "--range", "2..1000", "--format", "json"], out, io.StringIO())
    got = {(r["genus"], r["quantity"]): r["value"] for r in json.loads(out.getvalue())}
    bad = [
        (g, q, got.get((g, q)), v)
        for g in range(2, 1001)
        for q, v in expected_tables(g).items()
        if got.get((g, q), "missing") != v
    ]
    elapsed = time.perf_counter() - start
    ok = code == 0 and not bad
    assert acceptance(1, "table reproduction for 2 <= g <= 1000", ok, elapsed, 5, f"mismatches: {bad[:3]}" if bad else "")


def test_optimization_formula(acceptance):
    start = time.perf_counter()
    table = ch_minus_scan_table(2000)
    bad = [g for g in range(2, 2001, 2) if table[g] != ch_minus(g)]
    bad += [g for g in range(3, 2001, 2) if ch_minus_scan(g) != ch_minus(g)]
    spots = {2: 6, 4: 10, 6: 18, 7: 18, 9: 18}
    bad += [g for g, v in spots.items() if ch_minus(g)[0] != v]
    elapsed = time.perf_counter() - start
    assert acceptance(2, "ch_minus parametrisation equals direct scans", not bad, elapsed, 30, f"bad genera: {bad[:5]}" if bad else "")


def test_riemann_hurwitz_enumeration(acceptance):
    start = time.perf_counter()
    bad = []
    for g in range(2, 201, 2):
        want = {(2, 0, g - 1), (1, 2, g), (0, 4, g + 1), (0, 6, g // 2 + 1)}
        got = set(enumerate_equal_cone_solutions(g, g // 2 + 1))
        if got != want:
            bad.append((g, sorted(want - got), sorted(got - want)))
    elapsed = time.perf_counter() - start
    detail = ""
    if bad:
        g, missing, extra = bad[0]
        detail = f"{len(bad)} genera differ, first g={g} missing {missing} extra {extra}"
    assert acceptance(3, "equal-cone solutions for even 2 <= g <= 200", not bad, elapsed, 5, detail)


def test_oracle_agreement(acceptance):
    start = time.perf_counter()
    bad = []
    for g in range(2, 7):
        if oracle_max_cyclic_op_surface(g, 4 * g + 12) != 4 * g + 2:
            bad.append(("c-surface", g))
    for g in range(2, 6):
        if oracle_max_abelian_op_surface(g, 4 * g + 12) != 4 * g + 4:
            bad.append(("a-surface", g))
    bad += [("ch-minus", g) for g in range(2, 2001) if oracle_ch_minus(g) != ch_minus(g)[0]]
    elapsed = time.perf_counter() - start
    assert acceptance(4, "brute-force oracles match the closed forms", not bad, elapsed, 60, f"bad: {bad[:5]}" if bad else "")


def test_cyclic_surjection_criterion(acceptance):
    start = time.perf_counter()
    bad = []
    # a mixed factor Z_m + Z counts towards the three cyclic factors
    sources = [
        FreeProduct(orders, free_rank=rank, mixed_factor=mixed)
        for l in range(1, 4)
        for orders in itertools.combinations_with_replacement(range(2, 9), l)
        for rank, mixed in ((0, None), (1, None), *((0, m) for m in range(2, 9) if l < 3))
    ]
    for src in sources:
        for n in range(1, 73):
            found = fis_exists_bruteforce(src, FiniteAbelianGroup.cyclic(n)) is not None
            if found != fis_to_cyclic_exists(src, n):
                bad.append((src, n))
    elapsed = time.perf_counter() - start
    detail = f"{len(sources)} sources x 72 targets" + (f"; bad: {bad[:3]}" if bad else "")
    assert acceptance(5, "closed-form cyclic surjection test equals search", not bad, elapsed, 10, detail)


def test_construction_verification(acceptance):
    start = time.perf_counter()
    valid = {"cage": range(2, 51), "wheel": range(3, 51, 2), "fork": range(2, 51, 2), "square": [None]}
    failures, labels, total = [], set(), 0
    for name in EXAMPLES:
        for g in valid[name]:
            for c in verify_example(name, g):
                total += 1
                if c.name.endswith("type"):
                    labels.add(c.got.value)
                if not c.passed:
                    failures.append((name, g, c))
    ok = not failures and labels == {"(-,+)", "(+,-)", "(-,-)", "(Mix)"}
    elapsed = time.perf_counter() - start
    detail = f"{total} checks, types seen {sorted(labels)}" + (f"; first failure {failures[0]}" if failures else "")
    assert acceptance(6, "explicit constructions for valid g <= 50", ok, elapsed, 10, detail)


def test_consistency_identities(acceptance):
    start = time.perf_counter()
    bad = [(g, name) for g in range(2, 10**4 + 1) for name, ok in consistency_check(g) if not ok]
    elapsed = time.perf_counter() - start
    assert acceptance(7, "cross-table identities for 2 <= g <= 10^4", not bad, elapsed, 5, f"bad: {bad[:3]}" if bad else "")
