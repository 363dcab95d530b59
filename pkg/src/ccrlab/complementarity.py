"""Coherence, predictability and correlation quantifiers, and the complete
complementarity relations that tie them together.

Logarithms are natural throughout.
"""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import ConsistencyError, ValidationError
from .states import as_density
from .uncertainty import total_classical_uncertainty, total_quantum_uncertainty

NEG_TOL = 1e-10
RESIDUAL_TOL = 1e-9


def _nonneg(name, value):
    value = float(value)
    if value < -NEG_TOL:
        raise ConsistencyError(name, value)
    return max(value, 0.0)


def _offdiag(m):
    return m - np.diag(np.diag(m))


def _shannon(p):
    p = np.asarray(p, dtype=float)
    p = p[p > 0]
    return float(-np.sum(p * np.log(p))) + 0.0  # no negative zero


def linear_entropy(rho):
    rho = as_density(rho)
    return _nonneg("S_l", 1.0 - rho.purity)


def vn_entropy(rho):
    """Von Neumann entropy, with ``0 ln 0 = 0``."""
    return _nonneg("S_vn", _shannon(as_density(rho).spectrum))


def predictability_l(rho):
    """``S_l^max - S_l(rho_diag) = sum_j rho_jj^2 - 1/d``."""
    rho = as_density(rho)
    return _nonneg("P_l", np.sum(rho.diagonal**2) - 1.0 / rho.dim)


def predictability_vn(rho):
    rho = as_density(rho)
    return _nonneg("P_vn", np.log(rho.dim) - _shannon(rho.diagonal))


def _sqrt_pairs(rho):
    # sum_{j != k} sqrt(rho_jj rho_kk)
    r = np.sqrt(np.clip(rho.diagonal, 0.0, None))
    return float(np.sum(r) ** 2 - np.sum(r**2))


def predictability_l1(rho):
    rho = as_density(rho)
    return _nonneg("P_l1", rho.dim - 1 - _sqrt_pairs(rho))


def coherence_l1(rho):
    return float(np.sum(np.abs(_offdiag(as_density(rho).matrix))))


def coherence_hs(rho):
    return float(np.sum(np.abs(_offdiag(as_density(rho).matrix)) ** 2))


def coherence_wy(rho):
    """Wigner-Yanase coherence: squared off-diagonal moduli of ``sqrt(rho)``."""
    return float(np.sum(np.abs(_offdiag(as_density(rho).sqrt)) ** 2))


def coherence_re(rho):
    """Relative entropy of coherence ``S_vn(rho_diag) - S_vn(rho)``."""
    rho = as_density(rho)
    return _nonneg("C_re", _shannon(rho.diagonal) - vn_entropy(rho))


def w_l1(rho):
    """l1 correlation quantifier ``sum_{j != k} (sqrt(rho_jj rho_kk) - |rho_jk|)``.

    Only an entanglement measure when ``rho`` is a marginal of a global
    pure state; otherwise it reads as a classical uncertainty.
    """
    rho = as_density(rho)
    return _nonneg("W_l1", _sqrt_pairs(rho) - coherence_l1(rho))


def bz_information(rho):
    """Brukner-Zeilinger invariant information ``Tr rho^2 - 1/d``."""
    rho = as_density(rho)
    return rho.purity - 1.0 / rho.dim


def concurrence(psi):
    """Pure-state concurrence ``sqrt(2 (1 - Tr rho_A^2))``."""
    return float(np.sqrt(2.0 * linear_entropy(psi.reduced("A"))))


QUANTIFIERS = (
    "S_l", "S_l_diag", "S_vn", "S_vn_diag", "P_l", "P_vn", "P_l1",
    "C_wy", "C_hs", "C_l1", "C_re", "W_l1", "I_BZ", "U_q", "U_c", "C_gmm",
)
RESIDUALS = ("r_unpl", "r_rel", "r_l1", "r_bz", "r_gmm")


@dataclass(frozen=True)
class QuantifierReport:
    """Every quantifier of one state plus the complementarity residuals.

    ``values`` maps the names in :data:`QUANTIFIERS` (and ``concurrence``
    when a global ket was supplied) to floats; ``residuals`` maps
    :data:`RESIDUALS` to signed floats.
    """

    dim: int
    values: dict
    residuals: dict
    entanglement_interpretation_valid: bool = False
    tolerance: float = RESIDUAL_TOL
    violations: tuple = field(default=())

    @property
    def ok(self):
        return not self.violations

    def __getitem__(self, key):
        if key in self.values:
            return self.values[key]
        return self.residuals[key]

    def to_dict(self):
        out = {"dim": self.dim}
        out.update(self.values)
        out.update(self.residuals)
        out["residuals_ok"] = self.ok
        out["entanglement_interpretation_valid"] = self.entanglement_interpretation_valid
        return out


def ccr_report(rho, psi=None):
    """Compute all quantifiers of ``rho`` and the five CCR residuals.

    When the global pure state ``psi`` is given, ``rho`` must be its
    A-marginal and the report marks the correlation terms as entanglement.
    """
    from .gellmann import gmm_classical_uncertainty

    rho = as_density(rho)
    if psi is not None:
        rho_a = psi.reduced("A").matrix
        if rho_a.shape != rho.matrix.shape:
            raise ValidationError("reduced_state_match", float("inf"))
        mismatch = float(np.max(np.abs(rho_a - rho.matrix)))
        if mismatch > 1e-10:
            raise ValidationError("reduced_state_match", mismatch)

    d = rho.dim
    v = {
        "S_l": linear_entropy(rho),
        "S_l_diag": 1.0 - float(np.sum(rho.diagonal**2)),
        "S_vn": vn_entropy(rho),
        "S_vn_diag": _shannon(rho.diagonal),
        "P_l": predictability_l(rho),
        "P_vn": predictability_vn(rho),
        "P_l1": predictability_l1(rho),
        "C_wy": coherence_wy(rho),
        "C_hs": coherence_hs(rho),
        "C_l1": coherence_l1(rho),
        "C_re": coherence_re(rho),
        "W_l1": w_l1(rho),
        "I_BZ": bz_information(rho),
        "U_q": total_quantum_uncertainty(rho),
        "U_c": total_classical_uncertainty(rho),
        "C_gmm": gmm_classical_uncertainty(rho),
    }
    if psi is not None:
        v["concurrence"] = concurrence(psi)

    r = {
        "r_unpl": v["U_q"] + v["U_c"] + v["P_l"] - (d - 1) / d,
        "r_rel": v["C_re"] + v["S_vn"] + v["P_vn"] - np.log(d),
        "r_l1": v["C_l1"] + v["W_l1"] + v["P_l1"] - (d - 1),
        "r_bz": v["I_BZ"] - v["P_l"] - v["C_hs"],
        "r_gmm": v["P_l"] + v["C_hs"] + v["C_gmm"] - (d - 1) / d,
    }
    r = {k: float(x) for k, x in r.items()}
    bad = tuple(k for k, x in r.items() if abs(x) > RESIDUAL_TOL)
    return QuantifierReport(
        dim=d,
        values=v,
        residuals=r,
        entanglement_interpretation_valid=psi is not None,
        violations=bad,
    )
