"""Gell-Mann variances split into a path part and a coherence part.

Diagonal matrices see only the populations and off-diagonal ones see only
the coherences. Their total variance never drops below 2(d - 1).
"""

from ccrlab import complementarity as cm
from ccrlab import gellmann as gm
from ccrlab.states import random_density

for d in (2, 3, 4):
    rho = random_density(d, seed=d)
    diag, off = gm.gmm_variance_sums(rho)
    p_l, c_hs = cm.predictability_l(rho), cm.coherence_hs(rho)
    print(f"d={d}: diagonal {diag:.6f} vs 2(d-1)/d - 2P_l = {2 * (d - 1) / d - 2 * p_l:.6f}")
    print(f"     off-diag {off:.6f} vs 2(d-1) - 2C_hs   = {2 * (d - 1) - 2 * c_hs:.6f}")
    lhs, bound, holds = gm.sum_uncertainty_check(rho)
    print(f"     total {lhs:.4f} >= {bound:.0f}: {holds}")

qubit = random_density(2, seed=1)
print(f"\nqubit Pauli variance sum = 3 - 2(C_hs + P_l) = {gm.pauli_tradeoff(qubit):.6f}")
