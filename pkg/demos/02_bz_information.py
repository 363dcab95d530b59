"""Brukner-Zeilinger information lifted by quantum uncertainty.

rho mixes |z+> with |x+>, sigma mixes |z+> with |z->. Both have the same
mixing weight p1, but only rho carries coherence in the path basis.
"""

from ccrlab import complementarity as cm
from ccrlab.states import fig1_states

print(" p1    I_BZ(rho)  I_BZ(sigma)  P_l(rho)  P_l(sigma)")
for p1 in (0.0, 0.25, 0.5, 0.75, 1.0):
    rho, sigma = fig1_states(p1)
    print(
        f"{p1:4.2f}  {cm.bz_information(rho):9.4f}  {cm.bz_information(sigma):11.4f}"
        f"  {cm.predictability_l(rho):8.4f}  {cm.predictability_l(sigma):10.4f}"
    )

# At p1 = 1/2 the incoherent mixture has no BZ information left, while
# the coherent one keeps a quarter.
rho, sigma = fig1_states(0.5)
print(f"\nI_BZ = P_l + C_hs for rho: {cm.bz_information(rho):.4f} = "
      f"{cm.predictability_l(rho):.4f} + {cm.coherence_hs(rho):.4f}")
