"""Quantum states: validated density matrices, bipartite kets and the named
families used throughout the package.

The path basis is always the standard basis. To evaluate a basis-dependent
measure in another basis, conjugate the state first.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg
from .exceptions import DimensionError, ValidationError

TRACE_TOL = 1e-10
NORM_TOL = 1e-10


class DensityMatrix:
    """A Hermitian, positive semidefinite, unit-trace matrix.

    Validation happens at construction; the eigensystem and square root are
    computed lazily once and then reused. The stored array is read-only.
    """

    def __init__(self, matrix, *, eig=None):
        m = linalg.as_hermitian(matrix)
        tr = np.trace(m).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValidationError("unit_trace", abs(tr - 1.0))
        diag = np.diag(m).real
        if diag.min() < -linalg.HERMITIAN_TOL or diag.max() > 1 + linalg.HERMITIAN_TOL:
            bad = diag.min() if diag.min() < 0 else diag.max() - 1
            raise ValidationError("diagonal_in_unit_interval", float(abs(bad)))
        m.setflags(write=False)
        self._m = m
        if eig is not None:
            self.__dict__["eigensystem"] = eig
        # PSD check; also primes the cache
        linalg.clamp_spectrum(self.eigensystem.eigenvalues)

    @classmethod
    def from_spectrum(cls, eigenvalues, eigenvectors):
        """Build ``V diag(eigenvalues) V^dagger`` keeping the exact spectrum."""
        lam = np.asarray(eigenvalues, dtype=float)
        v = np.asarray(eigenvectors, dtype=complex)
        order = np.argsort(lam)
        es = linalg.EigenSystem(lam[order], v[:, order])
        return cls(es.reconstruct(), eig=es)

    @property
    def matrix(self):
        return self._m

    @property
    def dim(self):
        return self._m.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self._m if dtype is None else self._m.astype(dtype)

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim})"

    @cached_property
    def eigensystem(self):
        return linalg.hermitian_eig(self._m)

    @cached_property
    def spectrum(self):
        """Clamped eigenvalues, ascending."""
        return linalg.clamp_spectrum(self.eigensystem.eigenvalues)

    @cached_property
    def sqrt(self):
        s = linalg.psd_sqrt(self._m, eig=self.eigensystem)
        s.setflags(write=False)
        return s

    @cached_property
    def diagonal(self):
        """Path probabilities ``rho_jj`` as a real array."""
        d = np.diag(self._m).real.copy()
        d.setflags(write=False)
        return d

    @property
    def purity(self):
        return float(np.sum(np.abs(self._m) ** 2))

    def conjugate_by(self, u):
        """Return ``U rho U^dagger``."""
        u = np.asarray(u, dtype=complex)
        return DensityMatrix(u @ self._m @ u.conj().T)


def as_density(rho):
    """Coerce arrays to :class:`DensityMatrix`; pass instances through."""
    if isinstance(rho, DensityMatrix):
        return rho
    return DensityMatrix(rho)


@dataclass(frozen=True)
class BipartitePureState:
    """A unit vector on ``C^dim_a (x) C^dim_b`` in lexicographic order."""

    dim_a: int
    dim_b: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if self.dim_a < 1 or self.dim_b < 1:
            raise DimensionError("factor dimensions must be positive")
        if amp.size != self.dim_a * self.dim_b:
            raise DimensionError(
                f"{amp.size} amplitudes do not fit dims ({self.dim_a}, {self.dim_b})"
            )
        norm_res = abs(float(np.vdot(amp, amp).real) - 1.0)
        if norm_res > NORM_TOL:
            raise ValidationError("unit_norm", norm_res)
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @property
    def coefficient_matrix(self):
        return self.amplitudes.reshape(self.dim_a, self.dim_b)

    def projector(self):
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def reduced(self, keep="A"):
        m = self.coefficient_matrix
        if keep in ("A", "a", 0):
            return DensityMatrix(m @ m.conj().T)
        if keep in ("B", "b", 1):
            return DensityMatrix(m.T @ m.conj())
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")

    def apply_local(self, u_a=None, u_b=None):
        """Return ``(U_A (x) U_B)|psi>``; a missing factor is the identity."""
        m = self.coefficient_matrix
        if u_a is not None:
            m = np.asarray(u_a) @ m
        if u_b is not None:
            m = m @ np.asarray(u_b).T
        return BipartitePureState(self.dim_a, self.dim_b, m.reshape(-1))


def density_from_ket(psi):
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    res = abs(float(np.vdot(psi, psi).real) - 1.0)
    if res > NORM_TOL:
        raise ValidationError("unit_norm", res)
    return DensityMatrix(np.outer(psi, psi.conj()))


def dephase(rho):
    """Dephasing map: keep the diagonal, drop every coherence."""
    rho = as_density(rho)
    return DensityMatrix(np.diag(rho.diagonal).astype(complex))


@dataclass(frozen=True)
class DetectorModel:
    """Quanton amplitudes ``a_j`` plus the detector Gram matrix.

    ``gram[k, j]`` holds the overlap ``<d_k|d_j>`` of normalised, possibly
    non-orthogonal detector states.
    """

    amplitudes: np.ndarray
    gram: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        g = np.asarray(self.gram, dtype=complex)
        if g.shape != (a.size, a.size):
            raise DimensionError(f"Gram matrix shape {g.shape} does not match {a.size} paths")
        norm_res = abs(float(np.vdot(a, a).real) - 1.0)
        if norm_res > NORM_TOL:
            raise ValidationError("unit_norm", norm_res)
        g = linalg.as_hermitian(g)
        diag_res = float(np.max(np.abs(np.diag(g) - 1.0)))
        if diag_res > linalg.HERMITIAN_TOL:
            raise ValidationError("gram_unit_diagonal", diag_res)
        object.__setattr__(self, "amplitudes", a)
        object.__setattr__(self, "gram", g)

    @classmethod
    def symmetric_two_path(cls, overlap, amplitudes=(2**-0.5, 2**-0.5)):
        """Two paths with a real detector overlap ``<d_0|d_1> = overlap``."""
        g = np.array([[1.0, overlap], [overlap, 1.0]], dtype=complex)
        return cls(np.asarray(amplitudes, dtype=complex), g)


def detector_reduced_state(model):
    """Quanton state after a von Neumann pre-measurement by the detector.

    Entry ``(j, k)`` is ``a_j conj(a_k) <d_k|d_j>``. A Gram matrix that is
    not PSD describes no physical detector and raises ``NotPSDError``.
    """
    linalg.clamp_spectrum(linalg.hermitian_eig(model.gram).eigenvalues)
    a = model.amplitudes
    return DensityMatrix(np.outer(a, a.conj()) * model.gram.T)


def _check_unit_interval(name, value):
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")


def three_qubit_phi_ket(p, eps):
    """Eight amplitudes of the three-qubit family, ordered ``|a,b,c>``."""
    _check_unit_interval("p", p)
    _check_unit_interval("eps", eps)
    psi = np.zeros(8, dtype=complex)
    psi[0b000] = np.sqrt(p * eps)
    psi[0b111] = np.sqrt(p * (1 - eps))
    psi[0b110] = np.sqrt((1 - p) / 2)
    psi[0b101] = np.sqrt((1 - p) / 2)
    return psi


def three_qubit_phi_rho_b(p, eps):
    """Closed-form reduced state of the middle qubit."""
    _check_unit_interval("p", p)
    _check_unit_interval("eps", eps)
    off = np.sqrt(p * (1 - eps) * (1 - p) / 2)
    return DensityMatrix(
        np.array(
            [[p * eps + (1 - p) / 2, off], [off, p * (1 - eps) + (1 - p) / 2]],
            dtype=complex,
        )
    )


def three_qubit_phi(p, eps):
    """The family ``|Phi(p, eps)>`` split as A | BC, and its closed-form ``rho_B``."""
    psi = BipartitePureState(2, 4, three_qubit_phi_ket(p, eps))
    return psi, three_qubit_phi_rho_b(p, eps)


def x_family_state(x):
    """``x|0,1> + sqrt(1 - x^2)|1,0>`` on two qubits."""
    _check_unit_interval("x", x)
    amp = np.zeros(4, dtype=complex)
    amp[0b01] = x
    amp[0b10] = np.sqrt(1 - x * x)
    return BipartitePureState(2, 2, amp)


def fig1_states(p1):
    """The coherent mixture of ``|z+>, |x+>`` and the incoherent one of ``|z+>, |z->``."""
    _check_unit_interval("p1", p1)
    p2 = 1.0 - p1
    rho = np.array([[p1 + p2 / 2, p2 / 2], [p2 / 2, p2 / 2]], dtype=complex)
    sigma = np.diag([p1, p2]).astype(complex)
    return DensityMatrix(rho), DensityMatrix(sigma)


def schmidt_coefficients(psi):
    """Squared singular values of the coefficient matrix, descending."""
    s = np.linalg.svd(psi.coefficient_matrix, compute_uv=False)
    return s**2


def random_density(d, rank=None, seed=None):
    """Ginibre-ensemble state ``G G^dagger / Tr(G G^dagger)`` of given rank.

    ``seed`` may be an int, a ``SeedSequence`` or a ``numpy`` Generator;
    the same int always yields the same matrix.
    """
    if rank is None:
        rank = d
    if not 1 <= rank <= d:
        raise ValueError(f"rank must be in [1, {d}], got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real)


def random_pure_bipartite(dim_a, dim_b, seed=None):
    """Haar-random unit vector on ``C^dim_a (x) C^dim_b``."""
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dim_a * dim_b) + 1j * rng.standard_normal(dim_a * dim_b)
    return BipartitePureState(dim_a, dim_b, v / np.linalg.norm(v))


def random_product_bipartite(dim_a, dim_b, seed=None):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(dim_a) + 1j * rng.standard_normal(dim_a)
    b = rng.standard_normal(dim_b) + 1j * rng.standard_normal(dim_b)
    return BipartitePureState(dim_a, dim_b, np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b)))
