"""Boxing a point of a Scott-open set in omega+1 x omega+1."""

from scottkit.errors import OracleNotScottOpen
from scottkit.ideals import OMEGA, omega_plus_one
from scottkit.product import run_stages

w = omega_plus_one()
st = run_stages(w, w, lambda p: w.leq(3, p[0]) and w.leq(3, p[1]), (5, 4), 4)
for r in st.history:
    print(f"stage {r.n}: E={list(r.E)} F={list(r.F)} A={list(r.A)} B={list(r.B)}")

try:
    run_stages(w, w, lambda p: p[0] is OMEGA and p[1] is OMEGA, (OMEGA, OMEGA), 4)
except OracleNotScottOpen as exc:
    print("the top-only set is caught:", exc)
