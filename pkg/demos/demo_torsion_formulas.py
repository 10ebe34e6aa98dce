#!/usr/bin/env python3
"""The closed torsion formulas and their oracles, evaluated along a real
slice of the variety.

tau(exterior) = -2(u - 1), tau(solid torus) = -1/(u^2(u^2 - 5)), and
their product tau(M) = 2(u - 1)/(u^2(u^2 - 5)), with u = tr rho(x).
The Fox-calculus presentation complex recomputes the exterior torsion
independently (up to sign), and 1/(2 - tr rho(l)) recomputes the solid
torus factor.

Run:  python3 demos/demo_torsion_formulas.py
"""

import numpy as np

from fig8torsion import full_report, solve_t, trace_u

print(f"{'s':>6} {'u':>8} {'tau(E(K))':>12} {'|oracle|':>10} "
      f"{'tau(N)':>12} {'tau(M)':>12}  checks")
for s in np.linspace(1.0, 3.0, 9):
    pt = solve_t(complex(s))[0]
    rep = full_report(pt)
    oracle = (f"{abs(rep.tau_exterior_oracle.value):10.6f}"
              if rep.tau_exterior_oracle else "       n/a")
    solid = (f"{rep.tau_solid_closed.real:12.6f}"
             if rep.tau_solid_closed is not None else "   degenerate")
    tau_m = (f"{rep.tau_surgered.real:12.6f}"
             if rep.tau_surgered is not None else "     omitted")
    status = "all pass" if rep.all_pass else ",".join(rep.annotations)
    print(f"{s:6.2f} {trace_u(complex(s)).real:8.4f} "
          f"{rep.tau_exterior_closed.real:12.6f} {oracle} {solid} {tau_m}"
          f"  {status}")

print()
print("Note the degenerate row near u^2 = 5 (s = golden ratio): there the")
print("irreducible representations collapse to reducible ones and the")
print("denominator of the closed form vanishes.")
