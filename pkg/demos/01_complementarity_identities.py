"""Wave, particle and correlation parts of a random qutrit.

Draw a mixed state, print every quantifier, and check that each family of
complete complementarity relations adds up to its constant.
"""

import numpy as np

from ccrlab import ccr_report
from ccrlab.states import random_density

rho = random_density(3, rank=2, seed=7)
print("rho =")
print(np.round(rho.matrix, 3))

report = ccr_report(rho)
print("\nquantifiers")
for name, value in report.values.items():
    print(f"  {name:10s} {value: .6f}")

# each relation is stored as (sum of parts) - (constant)
print("\nresiduals (should all be round-off)")
for name, value in report.residuals.items():
    print(f"  {name:8s} {value: .2e}")

# Quantum uncertainty summed over paths is the Wigner-Yanase coherence.
print(f"\nU_q - C_wy = {report['U_q'] - report['C_wy']:.2e}")
