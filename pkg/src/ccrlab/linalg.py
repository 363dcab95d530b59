"""Dense complex linear algebra for small Hermitian problems.

Everything here works on plain ``numpy`` arrays of shape ``(d, d)``; the
matrices in this package never exceed ``d = 64``.
"""

from typing import NamedTuple

import numpy as np

from .exceptions import ConvergenceError, DimensionError, NotPSDError, ValidationError

HERMITIAN_TOL = 1e-12
EIG_RESIDUAL_TOL = 1e-10
PSD_TOL = 1e-10
# round-off eigenvalues of rank-deficient states; see psd_sqrt
SNAP_TOL = 1e-14
MAX_DIM = 64


class EigenSystem(NamedTuple):
    """Ascending eigenvalues and the unitary whose columns pair with them."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self, values=None):
        """Return ``V diag(values) V^dagger``; defaults to the eigenvalues."""
        if values is None:
            values = self.eigenvalues
        v = self.eigenvectors
        return (v * values) @ v.conj().T


def as_square(a, name="matrix"):
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionError(f"{name} must be a non-empty square matrix, got shape {a.shape}")
    return a


def hermiticity_residual(a):
    return float(np.max(np.abs(a - a.conj().T)))


def as_hermitian(a, tol=HERMITIAN_TOL):
    """Validate ``a`` as Hermitian and return its exactly symmetrised copy."""
    a = as_square(a)
    res = hermiticity_residual(a)
    if res > tol:
        raise ValidationError("hermitian", res)
    return 0.5 * (a + a.conj().T)


def hermitian_eig(h):
    """Eigendecomposition of a Hermitian matrix.

    Eigenvalues come back ascending with column ``k`` of the eigenvector
    matrix paired to eigenvalue ``k``. LAPACK's ``heevd`` is deterministic
    for identical input; the reconstruction and unitarity residuals are
    checked afterwards and a :class:`ConvergenceError` names the residual
    if either exceeds ``1e-10``.
    """
    h = as_hermitian(h)
    if h.shape[0] > MAX_DIM:
        raise DimensionError(f"dimension {h.shape[0]} exceeds {MAX_DIM}")
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(float("inf")) from exc
    es = EigenSystem(w, v)
    scale = max(1.0, float(np.max(np.abs(w))))
    recon = float(np.max(np.abs(h - es.reconstruct()))) / scale
    unit = float(np.max(np.abs(v.conj().T @ v - np.eye(len(w)))))
    residual = max(recon, unit)
    if residual > EIG_RESIDUAL_TOL:
        raise ConvergenceError(residual)
    return es


def clamp_spectrum(eigenvalues):
    """Zero out round-off eigenvalues of a PSD matrix.

    Raises :class:`NotPSDError` for anything below ``-1e-10``. Values in
    ``[-1e-10, 1e-14]`` become exactly zero: a ``1e-17`` round-off
    eigenvalue would otherwise turn into ``3e-9`` under a square root.
    """
    lam = np.asarray(eigenvalues, dtype=float)
    if lam.size and lam.min() < -PSD_TOL:
        raise NotPSDError(float(lam.min()))
    return np.where(lam <= SNAP_TOL, 0.0, lam)


def psd_function(rho, f, eig=None):
    """Apply ``f`` to the clamped spectrum of a PSD matrix."""
    if eig is None:
        eig = hermitian_eig(rho)
    lam = clamp_spectrum(eig.eigenvalues)
    out = eig.reconstruct(f(lam))
    return 0.5 * (out + out.conj().T)


def psd_sqrt(rho, eig=None):
    """Principal square root of a positive semidefinite matrix."""
    return psd_function(rho, np.sqrt, eig=eig)


def kron(a, b):
    """Tensor product, block ``(j, k)`` equal to ``a[j, k] * b``."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace(rho_ab, dim_a, dim_b, keep="A"):
    """Reduce an operator on ``A (x) B`` to one factor.

    ``keep`` is ``"A"`` (trace out B) or ``"B"`` (trace out A).
    """
    rho_ab = as_square(rho_ab)
    if rho_ab.shape[0] != dim_a * dim_b:
        raise DimensionError(
            f"operator of dimension {rho_ab.shape[0]} is not {dim_a}x{dim_b}"
        )
    t = rho_ab.reshape(dim_a, dim_b, dim_a, dim_b)
    if keep in ("A", "a", 0):
        return np.einsum("ibjb->ij", t)
    if keep in ("B", "b", 1):
        return np.einsum("aiaj->ij", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def commutator(a, b):
    a = as_square(a, "A")
    b = as_square(b, "B")
    if a.shape != b.shape:
        raise DimensionError(f"shapes {a.shape} and {b.shape} differ")
    return a @ b - b @ a
