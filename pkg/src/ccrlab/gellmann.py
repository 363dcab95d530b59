"""Generalized Gell-Mann matrices and the variance identities they satisfy.

Labels keep 1-based indices: ``("d", m)`` for the diagonal matrices with
``m = 1..d-1`` and ``("s", j, k)`` / ``("a", j, k)`` for ``1 <= j < k <= d``.
Storage is 0-based.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .states import as_density


@dataclass(frozen=True)
class GmmBasis:
    dim: int
    diagonal: tuple
    symmetric: tuple
    antisymmetric: tuple
    labels: tuple

    @property
    def matrices(self):
        """All ``d^2 - 1`` members in label order."""
        return self.diagonal + self.symmetric + self.antisymmetric

    def __len__(self):
        return len(self.labels)


def _frozen(m):
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def gmm_basis(d):
    """The ``d^2 - 1`` traceless Hermitian generalized Gell-Mann matrices.

    For ``d = 2`` they come out as ``(sigma_z, sigma_x, sigma_y)``.
    """
    if d < 2:
        raise ValueError(f"Gell-Mann basis needs d >= 2, got {d}")
    diagonal = []
    for m in range(1, d):
        entries = np.zeros(d)
        entries[:m] = 1.0
        entries[m] = -m
        diagonal.append(_frozen(np.sqrt(2.0 / (m * (m + 1))) * np.diag(entries).astype(complex)))
    pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
    symmetric, antisymmetric = [], []
    for j, k in pairs:
        s = np.zeros((d, d), dtype=complex)
        s[j, k] = s[k, j] = 1.0
        symmetric.append(_frozen(s))
        a = np.zeros((d, d), dtype=complex)
        a[j, k] = -1j
        a[k, j] = 1j
        antisymmetric.append(_frozen(a))
    labels = (
        [("d", m) for m in range(1, d)]
        + [("s", j + 1, k + 1) for j, k in pairs]
        + [("a", j + 1, k + 1) for j, k in pairs]
    )
    return GmmBasis(d, tuple(diagonal), tuple(symmetric), tuple(antisymmetric), tuple(labels))


@lru_cache(maxsize=None)
def _stacks(d):
    basis = gmm_basis(d)
    diag = np.array(basis.diagonal)
    off = np.array(basis.symmetric + basis.antisymmetric)
    out = (diag, diag @ diag, off, off @ off)
    for a in out:
        a.setflags(write=False)
    return out


def stacked_variances(rho, ops, ops_squared=None):
    """Variance of each operator in a ``(n, d, d)`` stack of Hermitian matrices."""
    rho = as_density(rho)
    if ops_squared is None:
        ops_squared = ops @ ops
    mean = np.einsum("ij,nji->n", rho.matrix, ops).real
    second = np.einsum("ij,nji->n", rho.matrix, ops_squared).real
    return second - mean**2


def bloch_decompose(rho):
    """Coefficients ``Tr(Gamma rho)`` in :func:`gmm_basis` order.

    The state is recovered by :func:`bloch_reconstruct`.
    """
    rho = as_density(rho)
    basis = gmm_basis(rho.dim)
    return np.array([np.trace(g @ rho.matrix).real for g in basis.matrices])


def bloch_reconstruct(coefficients, d, trace=1.0):
    """``Tr(rho) I / d + 1/2 sum_G <G|rho> G``."""
    basis = gmm_basis(d)
    out = trace / d * np.eye(d, dtype=complex)
    for c, g in zip(coefficients, basis.matrices):
        out = out + 0.5 * c * g
    return out


class GmmSums(NamedTuple):
    diagonal: float
    offdiagonal: float


def _expectations(rho, group):
    return np.array([np.trace(g @ rho.matrix).real for g in group])


def gmm_expectation_sums(rho):
    """Squared expectation values summed over the diagonal and off-diagonal subsets."""
    rho = as_density(rho)
    basis = gmm_basis(rho.dim)
    diag = float(np.sum(_expectations(rho, basis.diagonal) ** 2))
    off = float(
        np.sum(_expectations(rho, basis.symmetric) ** 2)
        + np.sum(_expectations(rho, basis.antisymmetric) ** 2)
    )
    return GmmSums(diag, off)


def gmm_variance_sums(rho, method="direct"):
    """Variances summed over the diagonal and off-diagonal subsets.

    ``method="direct"`` adds per-matrix variances; ``method="closed"`` uses
    ``2(d-1)/d - 2 P_l`` and ``2(d-1) - 2 C_hs``. The two must agree.
    """
    rho = as_density(rho)
    d = rho.dim
    if method == "direct":
        diag, diag_sq, off, off_sq = _stacks(d)
        return GmmSums(
            float(np.sum(stacked_variances(rho, diag, diag_sq))),
            float(np.sum(stacked_variances(rho, off, off_sq))),
        )
    if method == "closed":
        from .complementarity import coherence_hs, predictability_l

        return GmmSums(
            2 * (d - 1) / d - 2 * predictability_l(rho),
            2 * (d - 1) - 2 * coherence_hs(rho),
        )
    raise ValueError(f"method must be 'direct' or 'closed', got {method!r}")


def gmm_classical_uncertainty(rho):
    """Half the total Gell-Mann variance minus ``d - 1``; equals ``1 - Tr rho^2``."""
    rho = as_density(rho)
    sums = gmm_variance_sums(rho)
    return 0.5 * sums.diagonal + 0.5 * sums.offdiagonal - (rho.dim - 1)


def sum_uncertainty_check(rho):
    """Total Gell-Mann variance against its lower bound ``2(d - 1)``.

    Returns ``(lhs, bound, holds)``.
    """
    rho = as_density(rho)
    sums = gmm_variance_sums(rho)
    lhs = sums.diagonal + sums.offdiagonal
    bound = 2.0 * (rho.dim - 1)
    return lhs, bound, bool(lhs >= bound - 1e-10)


def pauli_tradeoff(rho):
    """For a qubit, ``3 - 2 (C_hs + P_l)``, which the Pauli variance sum must equal."""
    from .complementarity import coherence_hs, predictability_l

    rho = as_density(rho)
    if rho.dim != 2:
        raise ValueError("the Pauli trade-off applies to qubits only")
    return 3.0 - 2.0 * (coherence_hs(rho) + predictability_l(rho))
