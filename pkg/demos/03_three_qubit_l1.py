"""The l1 relation on the middle qubit of a three-qubit pure state.

Coherence, correlation and predictability trade off, but their sum stays
at d - 1 = 1 everywhere on the (p, eps) square.
"""

import numpy as np

from ccrlab import complementarity as cm
from ccrlab.linalg import partial_trace
from ccrlab.states import three_qubit_phi

for p, eps in [(0.0, 0.0), (0.3, 0.5), (0.5, 1.0), (1.0, 0.2)]:
    psi, rho_b = three_qubit_phi(p, eps)
    c, w, pl1 = cm.coherence_l1(rho_b), cm.w_l1(rho_b), cm.predictability_l1(rho_b)
    print(f"p={p:.1f} eps={eps:.1f}:  C_l1={c:.4f}  W_l1={w:.4f}  P_l1={pl1:.4f}  sum={c + w + pl1:.12f}")

# The closed-form marginal agrees with tracing out the other two qubits.
psi, rho_b = three_qubit_phi(0.3, 0.5)
bc = partial_trace(psi.projector(), 2, 4, keep="B")
print("\nmax |closed form - partial trace| =", np.max(np.abs(partial_trace(bc, 2, 2) - rho_b.matrix)))
