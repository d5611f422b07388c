"""Down-sets of P that the lattice M is made of, and how they intersect."""

from scottkit import gadget as G
from scottkit.lattice import (
    TypeI_II_2, classify_principal, directed_sup, intersect, render_M,
)
from scottkit.pposet import PElem

tops = [PElem(c, G.TOP) for c in (1, 4, 8, 20)]
for x in tops:
    print(f"down({x}) = {render_M(classify_principal(x))}")

a, b = classify_principal(tops[1]), classify_principal(tops[3])
print("their intersection:", render_M(intersect(a, b)))

# a strictly increasing chain whose union is a principal ideal
chain = [TypeI_II_2(1, 2, (3,), k) for k in range(1, 6)]
print("chain:", ", ".join(render_M(m) for m in chain))
print("limit:", render_M(directed_sup(chain, limit=True)))
