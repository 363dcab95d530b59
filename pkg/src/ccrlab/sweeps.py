"""Figure data: parameter sweeps over the named state families."""

from dataclasses import dataclass

import numpy as np

from . import complementarity as cm
from . import uncertainty as un
from .props import detector_curve
from .states import fig1_states, three_qubit_phi_rho_b, x_family_state

DEFAULT_RESOLUTION = {"fig1": 101, "fig2": 51, "fig3": 101, "detector": 101}
COLUMNS = {
    "fig1": ("p1", "I_BZ_rho", "I_BZ_sigma", "P_l_rho", "P_l_sigma"),
    "fig2": ("p", "eps", "C_l1", "W_l1", "P_l1", "sum"),
    "fig3": ("x", "W_l1", "P_l1", "U_c", "P_l", "S_vn", "P_vn"),
    "detector": ("gamma", "U_q", "U_c", "P_l"),
}


@dataclass(frozen=True)
class SweepSpec:
    experiment: str
    resolution: int = None
    out: str = None
    seed: int = None

    def __post_init__(self):
        if self.experiment not in COLUMNS:
            raise ValueError(
                f"unknown experiment {self.experiment!r}; choose from {', '.join(COLUMNS)}"
            )
        if self.resolution is None:
            object.__setattr__(self, "resolution", DEFAULT_RESOLUTION[self.experiment])
        if not isinstance(self.resolution, int) or self.resolution < 2:
            raise ValueError(f"resolution must be an integer >= 2, got {self.resolution!r}")


def fig1(n):
    rows = []
    for p1 in np.linspace(0.0, 1.0, n):
        rho, sigma = fig1_states(p1)
        rows.append(
            (p1, cm.bz_information(rho), cm.bz_information(sigma),
             cm.predictability_l(rho), cm.predictability_l(sigma))
        )
    return rows


def fig2(n):
    rows = []
    grid = np.linspace(0.0, 1.0, n)
    for p in grid:
        for eps in grid:
            rho = three_qubit_phi_rho_b(p, eps)
            c, w, pl1 = cm.coherence_l1(rho), cm.w_l1(rho), cm.predictability_l1(rho)
            rows.append((p, eps, c, w, pl1, c + w + pl1))
    return rows


def fig3(n):
    rows = []
    for x in np.linspace(0.0, 1.0, n):
        rho = x_family_state(x).reduced("A")
        rows.append(
            (x, cm.w_l1(rho), cm.predictability_l1(rho), un.total_classical_uncertainty(rho),
             cm.predictability_l(rho), cm.vn_entropy(rho), cm.predictability_vn(rho))
        )
    return rows


def detector(n):
    gammas = np.linspace(0.0, 1.0, n)
    return [(g, *vals) for g, vals in zip(gammas, detector_curve(gammas))]


_RUNNERS = {"fig1": fig1, "fig2": fig2, "fig3": fig3, "detector": detector}


def run(spec):
    """Return ``(header, rows)`` for a :class:`SweepSpec`, rows in grid order."""
    return COLUMNS[spec.experiment], _RUNNERS[spec.experiment](spec.resolution)


def format_value(v):
    """12 significant digits, no negative zero."""
    v = float(v)
    if v == 0.0:
        v = 0.0
    return f"{v:.12g}"
