"""One test per acceptance criterion, at the sizes the criteria name.

Each test records a PASS/FAIL line that is repeated in the terminal summary.
Criterion 3 is split: the oracle half passes, the cell-for-cell half fails
on purpose (see the strict xfail below).
"""

import json
import subprocess
import sys
import time

import pytest

from scottkit.gallery import run_scenario
from scottkit.lattice import REFERENCE_TABLE, compare_tables, g_map, intersection_table, subset
from scottkit.pposet import truncation


def _summary(rep):
    return ", ".join(f"{c.name}={c.status}" for c in rep.checks)


def _all_pass(rep):
    return all(c.status == "pass" for c in rep.checks)


def test_criterion_1_order_axioms(criterion):
    t0 = time.perf_counter()
    rep = run_scenario("order-axioms-P", {"col_max": 24, "seq_weight_max": 6})
    dt = time.perf_counter() - t0
    n = rep.checks[0].details["elements"]
    ok = _all_pass(rep) and dt < 60
    criterion("1", ok, f"{n} elements, {dt:.1f}s; {_summary(rep)}")
    assert ok, rep.to_json()


def test_criterion_2_encodings(criterion):
    rep = run_scenario("gadget-encodings")
    ok = _all_pass(rep)
    criterion("2", ok, _summary(rep))
    assert ok, rep.to_json()


def test_criterion_3_intersection_oracle(criterion):
    rep = run_scenario("intersection-table-oracle", {"pairs": 10_000})
    ok = _all_pass(rep) and rep.checks[1].details["pairs"] >= 10_000
    criterion("3a", ok, f"oracle over 10000 pairs: {_summary(rep)}")
    assert ok, rep.to_json()


@pytest.mark.xfail(strict=True, reason="the reference tables list II in nine cells where no "
                   "intersection yields II, and omit I+II2 from (IV, I+II2)")
def test_criterion_3_reference_tables_cell_for_cell(criterion):
    cmp = compare_tables(intersection_table(reference=REFERENCE_TABLE))
    bad = {k: v for k, v in cmp.items() if v[0] != "exact"}
    assert set(cmp[("IV", "IV")][1]) == {"I", "II", "IV", "I+II1", "empty"}
    over = sum(v[0] == "over" for v in bad.values())
    criterion("3b", not bad, f"table cell-for-cell: {len(cmp) - len(bad)} exact, {over} over, "
              f"{len(bad) - over} missing")
    assert not bad


def test_criterion_4_directed_sups(criterion):
    rep = run_scenario("directed-sups-M", {"chains": 1000})
    # the named example: the limit of I+II2(1,2,[3],k) is the principal ideal of its column top
    from scottkit.lattice import TypeI_II_2, TypeIV, directed_sup
    ex = directed_sup([TypeI_II_2(1, 2, (3,), k) for k in range(1, 6)], limit=True)
    ok = _all_pass(rep) and ex == TypeIV(1, 2, (3,))
    criterion("4", ok, f"1000 chains; {_summary(rep)}")
    assert ok, rep.to_json()


def test_criterion_5_non_sobriety(criterion):
    a = run_scenario("no-sup-gP", {"bound": 12})
    b = run_scenario("irreducibility-P", {"open_pairs": 200})
    c = run_scenario("directed-sups-M", {"chains": 200})
    sup_ok = c.checks[-1].status == "pass"
    ok = _all_pass(a) and _all_pass(b) and sup_ok
    criterion("5", ok, f"(a) {_summary(a)}; (b) {_summary(b)}; (c) g sup-preserving={sup_ok}")
    assert ok


def test_criterion_5c_g_monotone_exhaustive():
    t = truncation(24, 6)
    gs = [g_map(x) for x in t.labels]
    for i in range(len(t)):
        for j in t.above(i):
            assert subset(gs[i], gs[j])


def test_criterion_6_r_and_f(criterion):
    a = run_scenario("adjunction-RF", {"samples": 500})
    d = run_scenario("distributivity-F", {"triples": 1000})
    ok = _all_pass(a) and _all_pass(d)
    criterion("6", ok, f"{_summary(a)}; {_summary(d)}")
    assert ok


def test_criterion_7_product(criterion):
    rep = run_scenario("product-omega", {"stages": 4})
    ok = _all_pass(rep)
    criterion("7", ok, _summary(rep))
    assert ok, rep.to_json()


def test_criterion_8_jia(criterion):
    rep = run_scenario("jia-example", {"depth": 6})
    ok = _all_pass(rep)
    criterion("8", ok, _summary(rep))
    assert ok, rep.to_json()


def test_criterion_9_finite_sober(criterion):
    rep = run_scenario("finite-sober", {"max_size": 5})
    ok = _all_pass(rep) and rep.checks[0].details["posets"] == 88
    criterion("9", ok, f"88 posets up to isomorphism; {_summary(rep)}")
    assert ok


def test_criterion_10_reproducible(criterion):
    def once():
        r = subprocess.run([sys.executable, "-m", "scottkit", "verify", "--all", "--seed", "7",
                            "--json"], capture_output=True, text=True)
        assert r.returncode == 0, r.stderr
        reports = json.loads(r.stdout)
        for rep in reports:
            rep.pop("elapsed")
        return reports

    t0 = time.perf_counter()
    first, second = once(), once()
    dt = (time.perf_counter() - t0) / 2
    ok = first == second and dt < 300 and len(first) == 11
    criterion("10", ok, f"identical={first == second}, {dt:.1f}s per run")
    assert ok

