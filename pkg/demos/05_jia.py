"""A countable dcpo with a non-coherent Scott topology."""

from scottkit.jia import finite_directed_blocks, jia_noncoherence_witness, jia_truncation

t = jia_truncation(6)
print(f"{len(t)} elements, {len(finite_directed_blocks(t))} finite directed blocks")
rep = jia_noncoherence_witness(8, depth=6)
print("two filters meet in", ", ".join(map(str, rep.intersection)))
print("survivors as the closed sets shrink:", list(rep.survivors))
