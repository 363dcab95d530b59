"""A which-path detector turns quantum uncertainty into classical.

With detector overlap gamma = 1 the detector learns nothing and all the
path uncertainty is quantum. As gamma drops to 0 it becomes classical,
while predictability and the total stay put.
"""

import numpy as np

from ccrlab.props import detector_curve

gammas = np.linspace(0, 1, 6)
print("gamma    U_q      U_c      P_l    total")
for g, (uq, uc, pl) in zip(gammas, detector_curve(gammas)):
    print(f"{g:4.1f}  {uq:7.4f}  {uc:7.4f}  {pl:7.4f}  {uq + uc + pl:7.4f}")

uq_half = detector_curve([0.5])[0, 0]
print(f"\nU_q at gamma = 1/2: {uq_half:.10f}  closed form {(1 - np.sqrt(3) / 2) / 2:.10f}")
