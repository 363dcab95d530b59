"""Quantum/classical split of the variance and its path-resolved sums.

The quantum part of ``V(rho, A)`` is the Wigner-Yanase skew information
and the classical part is what remains. For path projectors both reduce to
closed forms in the diagonals of ``rho`` and ``sqrt(rho)``.
"""

from typing import NamedTuple

import numpy as np

from . import linalg
from .exceptions import ConsistencyError, DimensionError
from .states import as_density

NEG_TOL = 1e-12


class UncertaintySplit(NamedTuple):
    variance: float
    quantum: float
    classical: float


def _nonneg(name, value, slack=NEG_TOL):
    value = float(value)
    if value < -slack:
        raise ConsistencyError(name, value)
    return max(value, 0.0)


def _observable(rho, a):
    a = linalg.as_hermitian(a)
    if a.shape[0] != rho.dim:
        raise DimensionError(f"observable of dim {a.shape[0]} vs state of dim {rho.dim}")
    return a


def _slack(a):
    return NEG_TOL * max(1.0, float(np.max(np.abs(a))) ** 2)


def centered(rho, a):
    """``A_0 = A - Tr(rho A) I``."""
    rho = as_density(rho)
    a = _observable(rho, a)
    mean = np.trace(rho.matrix @ a).real
    return a - mean * np.eye(rho.dim)


def variance(rho, a):
    rho = as_density(rho)
    a = _observable(rho, a)
    m = rho.matrix
    mean = np.trace(m @ a).real
    v = np.trace(m @ a @ a).real - mean**2
    return _nonneg("variance", v, _slack(a))


def skew_information(rho, a):
    """Wigner-Yanase skew information ``-1/2 Tr([sqrt(rho), A_0]^2)``."""
    rho = as_density(rho)
    a0 = centered(rho, a)
    c = linalg.commutator(rho.sqrt, a0)
    return _nonneg("skew information", -0.5 * np.trace(c @ c).real, _slack(a0))


def classical_uncertainty(rho, a):
    """``Tr(sqrt(rho) A_0 sqrt(rho) A_0)``, the variance left after the skew part."""
    rho = as_density(rho)
    a0 = centered(rho, a)
    s = rho.sqrt
    return _nonneg("classical uncertainty", np.trace(s @ a0 @ s @ a0).real, _slack(a0))


def split(rho, a):
    return UncertaintySplit(
        variance(rho, a), skew_information(rho, a), classical_uncertainty(rho, a)
    )


def robertson_check(rho, a, b):
    """Evaluate both sides of ``V(A) V(B) >= |Tr(rho [A, B])|^2 / 4``.

    Returns ``(lhs, rhs, holds)`` with ``holds`` allowing ``1e-10`` slack.
    """
    rho = as_density(rho)
    b = _observable(rho, b)
    lhs = variance(rho, a) * variance(rho, b)
    rhs = 0.25 * abs(np.trace(rho.matrix @ linalg.commutator(a, b))) ** 2
    return lhs, rhs, bool(lhs >= rhs - 1e-10)


def _path_index(rho, j):
    if not 0 <= j < rho.dim:
        raise IndexError(f"path index {j} out of range for dimension {rho.dim}")


def path_quantum_uncertainty(rho, j):
    """Skew information of the projector onto path ``j``: ``rho_jj - sqrt(rho)_jj^2``."""
    rho = as_density(rho)
    _path_index(rho, j)
    s_jj = rho.sqrt[j, j].real
    return _nonneg("path quantum uncertainty", rho.diagonal[j] - s_jj**2)


def path_classical_uncertainty(rho, j):
    """``sqrt(rho)_jj^2 - rho_jj^2``."""
    rho = as_density(rho)
    _path_index(rho, j)
    s_jj = rho.sqrt[j, j].real
    return _nonneg("path classical uncertainty", s_jj**2 - rho.diagonal[j] ** 2)


def total_quantum_uncertainty(rho):
    """Quantum uncertainty summed over all paths.

    Computed from the per-path closed form; it coincides with the
    Wigner-Yanase coherence, which is evaluated independently in
    :func:`ccrlab.complementarity.coherence_wy`.
    """
    rho = as_density(rho)
    s_diag = np.diag(rho.sqrt).real
    return _nonneg("U_q", np.sum(rho.diagonal - s_diag**2))


def total_classical_uncertainty(rho):
    rho = as_density(rho)
    s_diag = np.diag(rho.sqrt).real
    return _nonneg("U_c", np.sum(s_diag**2 - rho.diagonal**2))


def max_linear_entropy(d):
    return (d - 1) / d
