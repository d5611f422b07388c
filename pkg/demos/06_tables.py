"""Intersection shapes per pair of element types, against the published tables."""

from scottkit.lattice import REFERENCE_TABLE, compare_tables, intersection_table

cmp = compare_tables(intersection_table(reference=REFERENCE_TABLE))
for (a, b), (status, got, ref) in sorted(cmp.items()):
    if status != "exact":
        print(f"{a} x {b}: {status}, computed {got}, listed {ref}")
print(sum(s == "exact" for s, _, _ in cmp.values()), "of", len(cmp), "cells agree")
