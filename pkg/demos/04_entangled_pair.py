"""Entanglement shows up as classical uncertainty of a marginal.

For x|01> + sqrt(1-x^2)|10> the reduced state is diagonal: no quantum
uncertainty, and the classical part equals half the squared concurrence.
"""

from ccrlab import ccr_report
from ccrlab.states import x_family_state

print("  x     U_q     U_c    C^2/2   W_l1   S_vn")
for x in (0.0, 0.3, 0.5, 2**-0.5, 0.9, 1.0):
    psi = x_family_state(x)
    r = ccr_report(psi.reduced("A"), psi)
    print(
        f"{x:5.3f}  {r['U_q']:6.4f}  {r['U_c']:6.4f}  {r['concurrence'] ** 2 / 2:6.4f}"
        f"  {r['W_l1']:5.3f}  {r['S_vn']:5.3f}"
    )
