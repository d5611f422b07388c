"""Why the Scott topology of the lattice is not sober.

g sends P into M.  Its image is irreducible (any two Scott opens meeting it
meet each other inside it), but no element of M contains two different
column tops, so the image has no supremum below the added top.
"""

import random

from scottkit import gadget as G
from scottkit.lattice import g_map, join_R, no_upper_bound_witness, render_R
from scottkit.pposet import PElem, ScottOpenP, irreducibility_trace
from scottkit.sampling import random_open_pair

rec = no_upper_bound_witness(12)
print(f"elements checked: {rec.checked}, holding both tops: {len(rec.violations)}")
print("join of the two tops:", render_R(join_R(g_map(PElem(1, G.TOP)), g_map(PElem(2, G.TOP)))))

a, b = PElem(1, G.Seq((1,))), PElem(2, G.Nat(1))
tr = irreducibility_trace(a, b, ScottOpenP((a,)), ScottOpenP((b,)))
print(f"opens around {a} and {b} meet at {tr.point}, via {[c for c, _ in tr.steps]}")

rng = random.Random(7)
points = [irreducibility_trace(*random_open_pair(rng)).point for _ in range(5)]
print("more meeting points:", ", ".join(map(str, points)))
