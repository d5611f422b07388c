"""The poset P: countably many copies of a small gadget, glued by codes.

Every column is a copy of L (naturals, nonempty finite sequences, a top).
Column tops are reached from other columns only through the coded column
``f_{m,n}(s)``.  This script shows the coding and the four strict clauses.
"""

from scottkit import gadget as G
from scottkit.pposet import PElem, strictly_below, truncation

pc = G.PairCode(1, 2)
print("pair (1,2) has code", pc.code)
for s in [(1,), (2,), (3,), (1, 1)]:
    col = G.f_mn(pc, s)
    print(f"  f_12({list(s)}) = {col}  decodes back to {G.f_mn_decode(col)}")

top4 = PElem(G.f_mn(pc, (1,)), G.TOP)
for x in [PElem(4, G.Seq((1,))), PElem(1, G.Seq((1,))), PElem(2, G.Nat(1)), PElem(2, G.Nat(2))]:
    w = strictly_below(x, top4)
    print(f"{x} < {top4}:", w.clause if w else "no")

t = truncation(24, 6)
print(f"truncation(24, 6) has {len(t)} elements and {int(t.table.sum()) - len(t)} strict pairs")
