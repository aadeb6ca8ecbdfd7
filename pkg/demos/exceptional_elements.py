"""Exceptional semisimple classes and their centralizers.

A semisimple element is exceptional when its centralizer has finite centre;
up to conjugacy they are s_0 = 1 and the elements s_m with
alpha_j(s_m) = exp(2 pi i delta_jm / a_m), one per node of the Dynkin
diagram.  The centralizer root system is cut out by the congruence
a_m | b_m on root coefficients and always equals the closure of the
off-node simple roots together with beta_m.
"""

from lieram.quantum import exceptional_elements
from lieram.rootdata import build_root_system

for t in ("G2", "F4", "E6"):
    rs = build_root_system(t)
    print(f"{t}: highest root coefficients a = {rs.a}")
    for rec in exceptional_elements(rs):
        beta = rec["beta_m"]
        print(f"  m={rec['m']}: centralizer {rec['centralizer'].type_str:8s}"
              f" order {rec['centralizer'].order:7d}"
              f"  beta_m={'-' if beta is None else list(beta)}")
    print()

print("In type A every a_m = 1, so every s_m is central and nothing but the"
      " identity class is genuinely exceptional:")
rs = build_root_system("A3")
for rec in exceptional_elements(rs)[1:]:
    assert rec["centralizer"].type_str == "A3"
print("  all four A3 classes have full centralizer, as expected")
