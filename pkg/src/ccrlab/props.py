"""Sampling-based checks of the axioms, identities and theorems.

Each check draws its random states from a generator seeded with
``(seed, trial)`` so a verdict does not depend on evaluation order, and
reports the worst violation it saw. These are refutation tests, not proofs.
"""

from dataclasses import asdict, dataclass

import numpy as np
from scipy.stats import unitary_group

from . import complementarity as cm
from . import gellmann as gm
from . import uncertainty as un
from .exceptions import ConsistencyError
from .states import (
    DensityMatrix,
    DetectorModel,
    detector_reduced_state,
    random_density,
    random_product_bipartite,
    random_pure_bipartite,
)

EXACT_SLACK = 1e-10
FD_SLACK = 1e-8
FD_STEP = 1e-6


@dataclass(frozen=True)
class PropertyVerdict:
    name: str
    trials: int
    worst_violation: float
    slack: float
    seed: int

    @property
    def passed(self):
        return bool(self.worst_violation <= self.slack)

    def to_dict(self):
        out = asdict(self)
        out["pass"] = self.passed
        return out


# Measures take (rho, path) and ignore the path unless they are per-path.
MEASURES = {
    "Q_path": lambda rho, j: un.path_quantum_uncertainty(rho, j),
    "U_q": lambda rho, j: un.total_quantum_uncertainty(rho),
    "C_l1": lambda rho, j: cm.coherence_l1(rho),
    "C_hs": lambda rho, j: cm.coherence_hs(rho),
    "C_re": lambda rho, j: cm.coherence_re(rho),
    "P_l": lambda rho, j: cm.predictability_l(rho),
    "P_vn": lambda rho, j: cm.predictability_vn(rho),
    "P_l1": lambda rho, j: cm.predictability_l1(rho),
    "C_path": lambda rho, j: un.path_classical_uncertainty(rho, j),
    "U_c": lambda rho, j: un.total_classical_uncertainty(rho),
    "W_l1": lambda rho, j: cm.w_l1(rho),
    "S_l": lambda rho, j: cm.linear_entropy(rho),
    "S_vn": lambda rho, j: cm.vn_entropy(rho),
}
CONVEX = ("Q_path", "U_q", "C_l1", "C_hs", "C_re", "P_l", "P_vn", "P_l1")
CONCAVE = ("C_path", "U_c", "W_l1", "S_l", "S_vn")


def _rng(seed, *path):
    return np.random.default_rng([seed, *path])


def _random_mixture(d, rng):
    n = int(rng.integers(2, 5))
    parts = [random_density(d, int(rng.integers(1, d + 1)), rng) for _ in range(n)]
    weights = rng.dirichlet(np.ones(n))
    mix = DensityMatrix(sum(w * p.matrix for w, p in zip(weights, parts)))
    return parts, weights, mix, int(rng.integers(d))


def mixing_suite(measures, d, trials, seed, slack=EXACT_SLACK):
    """Convexity/concavity verdicts for several measures over shared samples.

    Mixtures depend only on ``(seed, trial)``, so each verdict equals the one
    from running that measure alone.
    """
    for m in measures:
        if m not in MEASURES or (m not in CONVEX and m not in CONCAVE):
            raise KeyError(f"unknown quantifier id {m!r}")
    worst = dict.fromkeys(measures, -np.inf)
    for t in range(trials):
        parts, weights, mix, j = _random_mixture(d, _rng(seed, t))
        for m in measures:
            f = MEASURES[m]
            gap = f(mix, j) - sum(w * f(p, j) for w, p in zip(weights, parts))
            if m in CONCAVE:
                gap = -gap
            worst[m] = max(worst[m], gap)
    kind = {m: "convexity" if m in CONVEX else "concavity" for m in measures}
    return [
        PropertyVerdict(f"{kind[m]}:{m}:d={d}", trials, float(worst[m]), slack, seed)
        for m in measures
    ]


def check_convexity(measure, d, trials, seed):
    if measure not in CONVEX:
        raise KeyError(f"{measure!r} is not a convex quantifier id")
    return mixing_suite([measure], d, trials, seed)[0]


def check_concavity(measure, d, trials, seed):
    if measure not in CONCAVE:
        raise KeyError(f"{measure!r} is not a concave quantifier id")
    return mixing_suite([measure], d, trials, seed)[0]


def _random_hermitian(d, rng):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return 0.5 * (g + g.conj().T)


def check_extreme_cases(d, trials, seed, tol=1e-9):
    """Pure states carry no classical part; states commuting with A carry no quantum part."""
    pure_worst = 0.0
    commuting_worst = 0.0
    for t in range(trials):
        rng = _rng(seed, t)
        a = _random_hermitian(d, rng)
        pure = random_density(d, 1, rng)
        v, q, c = un.split(pure, a)
        pure_worst = max(pure_worst, abs(v - q), c)
        for j in range(d):
            pure_worst = max(pure_worst, un.path_classical_uncertainty(pure, j))

        u = unitary_group.rvs(d, random_state=rng)
        probs = rng.dirichlet(np.ones(d))
        rho = DensityMatrix(u @ np.diag(probs) @ u.conj().T)
        obs = u @ np.diag(rng.standard_normal(d)) @ u.conj().T
        v, q, c = un.split(rho, obs)
        commuting_worst = max(commuting_worst, q, abs(v - c))
        diag = DensityMatrix(np.diag(probs))
        for j in range(d):
            commuting_worst = max(commuting_worst, un.path_quantum_uncertainty(diag, j))
    return [
        PropertyVerdict(f"extreme:pure_state:d={d}", trials, pure_worst, tol, seed),
        PropertyVerdict(f"extreme:commuting:d={d}", trials, commuting_worst, tol, seed),
    ]


def identity_sweep(dims, states_per_rank, seed):
    """Residuals of every exact identity over random states of each rank.

    For each ``d`` in ``dims`` and each rank ``1..d`` draws
    ``states_per_rank`` Ginibre states.
    """
    names = (
        "ccr_unpl", "ccr_rel", "ccr_l1", "bz_equals_pl_plus_chs", "ccr_gmm",
        "uq_equals_cwy", "gmm_varp", "gmm_varc", "gmm_gdia", "gmm_goff",
        "gmm_sum_uncertainty", "pauli_tradeoff", "variance_split",
        "path_closed_forms", "path_variance_sum",
    )
    slack = {n: 1e-9 for n in names}
    slack["uq_equals_cwy"] = 1e-10
    slack["gmm_sum_uncertainty"] = 1e-10
    slack["pauli_tradeoff"] = 1e-10
    worst = dict.fromkeys(names, 0.0)
    count = 0

    def bump(name, value):
        worst[name] = max(worst[name], float(value))

    for d in dims:
        basis = gm.gmm_basis(d)
        for rank in range(1, d + 1):
            for i in range(states_per_rank):
                rng = _rng(seed, d, rank, i)
                rho = random_density(d, rank, rng)
                rep = cm.ccr_report(rho)
                bump("ccr_unpl", abs(rep["r_unpl"]))
                bump("ccr_rel", abs(rep["r_rel"]))
                bump("ccr_l1", abs(rep["r_l1"]))
                bump("bz_equals_pl_plus_chs", abs(rep["r_bz"]))
                bump("ccr_gmm", abs(rep["r_gmm"]))
                bump("uq_equals_cwy", abs(rep["U_q"] - rep["C_wy"]))

                exp_sums = gm.gmm_expectation_sums(rho)
                bump("gmm_varp", abs(exp_sums.diagonal - 2 * rep["P_l"]))
                bump("gmm_varc", abs(exp_sums.offdiagonal - 2 * rep["C_hs"]))
                direct = gm.gmm_variance_sums(rho, "direct")
                closed = gm.gmm_variance_sums(rho, "closed")
                bump("gmm_gdia", abs(direct.diagonal - closed.diagonal))
                bump("gmm_goff", abs(direct.offdiagonal - closed.offdiagonal))
                lhs, bound, _ = gm.sum_uncertainty_check(rho)
                bump("gmm_sum_uncertainty", bound - lhs)
                if d == 2:
                    bump("pauli_tradeoff", abs(lhs - gm.pauli_tradeoff(rho)))

                a = basis.matrices[int(rng.integers(len(basis)))] * rng.standard_normal()
                a = a + _random_hermitian(d, rng)
                v, q, c = un.split(rho, a)
                bump("variance_split", abs(v - q - c))
                path_var = 0.0
                for j in range(d):
                    proj = np.zeros((d, d))
                    proj[j, j] = 1.0
                    bump(
                        "path_closed_forms",
                        abs(un.path_quantum_uncertainty(rho, j) - un.skew_information(rho, proj)),
                    )
                    bump(
                        "path_closed_forms",
                        abs(un.path_classical_uncertainty(rho, j) - un.classical_uncertainty(rho, proj)),
                    )
                    path_var += un.variance(rho, proj)
                bump("path_variance_sum", abs(path_var - rep["U_q"] - rep["U_c"]))
                count += 1
    return [PropertyVerdict(f"identity:{n}", count, worst[n], slack[n], seed) for n in names]


def _uc_of_spectrum(lam, vecs):
    return un.total_classical_uncertainty(DensityMatrix.from_spectrum(lam, vecs))


DEFAULT_BIPARTITE_DIMS = tuple((a, b) for a in (2, 3, 4) for b in (2, 3, 4))


def check_monotone_uc(trials, seed, dims=DEFAULT_BIPARTITE_DIMS, product_fraction=0.1):
    """Entanglement-monotone conditions for ``U_c`` of the A-marginal.

    Returns verdicts for (a) nonnegativity, (b) ``U_c = 0`` exactly when the
    marginal is pure, (c) local-unitary invariance, (d) the Schmidt
    directional inequality ``(l_i - l_j)(dU_c/dl_i - dU_c/dl_j) <= 0`` by
    central differences along ``e_i - e_j``, and (d') the same restricted to
    Schmidt rank 2.
    """
    neg = 0.0
    mismatches = 0
    lu = 0.0
    directional = -np.inf
    directional_rank2 = -np.inf
    h = FD_STEP
    for t in range(trials):
        rng = _rng(seed, t)
        da, db = dims[int(rng.integers(len(dims)))]
        if rng.random() < product_fraction:
            psi = random_product_bipartite(da, db, rng)
        else:
            psi = random_pure_bipartite(da, db, rng)
        rho_a = psi.reduced("A")
        try:
            uc = un.total_classical_uncertainty(rho_a)
        except ConsistencyError as exc:
            neg = max(neg, -exc.value)
            continue
        neg = max(neg, -uc)

        if (uc < 1e-9) != (rho_a.purity > 1 - 1e-8):
            mismatches += 1

        u_a = unitary_group.rvs(da, random_state=rng)
        u_b = unitary_group.rvs(db, random_state=rng)
        moved = psi.apply_local(u_a, u_b).reduced("A")
        # path basis rotated along with the state: evaluate in basis U_A|j>
        lu = max(lu, abs(un.total_classical_uncertainty(moved.conjugate_by(u_a.conj().T)) - uc))
        # U_B alone leaves the marginal untouched, fixed basis
        only_b = psi.apply_local(None, u_b).reduced("A")
        lu = max(lu, abs(un.total_classical_uncertainty(only_b) - uc))

        u, s, _ = np.linalg.svd(psi.coefficient_matrix, full_matrices=True)
        lam = np.zeros(da)
        lam[: s.size] = s**2
        lam /= lam.sum()
        rank = int(np.sum(lam > 10 * h))
        for i in range(da):
            for j in range(i + 1, da):
                if lam[i] <= 10 * h or lam[j] <= 10 * h:
                    continue
                e = np.zeros(da)
                e[i], e[j] = 1.0, -1.0
                deriv = (_uc_of_spectrum(lam + h * e, u) - _uc_of_spectrum(lam - h * e, u)) / (2 * h)
                product = (lam[i] - lam[j]) * deriv
                directional = max(directional, product)
                if rank == 2:
                    directional_rank2 = max(directional_rank2, product)
    return [
        PropertyVerdict("monotone:nonnegativity", trials, neg, 1e-12, seed),
        PropertyVerdict("monotone:zero_iff_pure_marginal", trials, float(mismatches), 0.0, seed),
        PropertyVerdict("monotone:local_unitary_invariance", trials, lu, 1e-9, seed),
        PropertyVerdict("monotone:schmidt_directional", trials, float(directional), FD_SLACK, seed),
        PropertyVerdict(
            "monotone:schmidt_directional_rank2", trials, float(directional_rank2), FD_SLACK, seed
        ),
    ]


def detector_curve(gammas, amplitudes=(2**-0.5, 2**-0.5)):
    """``(U_q, U_c, P_l)`` of the quanton for each real detector overlap."""
    rows = []
    for g in gammas:
        rho = detector_reduced_state(DetectorModel.symmetric_two_path(g, amplitudes))
        rows.append(
            (un.total_quantum_uncertainty(rho), un.total_classical_uncertainty(rho), cm.predictability_l(rho))
        )
    return np.array(rows)


def check_detector_transfer(amplitudes=(2**-0.5, 2**-0.5), steps=101, slack=EXACT_SLACK):
    """Quantum uncertainty turns into classical as the detector overlap drops.

    Along ``gamma`` in ``[0, 1]``: ``U_q + U_c + P_l`` and ``P_l`` stay
    constant, ``U_q`` never decreases, and the ends sit at ``U_q = 0`` and
    ``U_q = S_l(rho_diag)``.
    """
    gammas = np.linspace(0.0, 1.0, steps)
    curve = detector_curve(gammas, amplitudes)
    uq, uc, pl = curve.T
    total = uq + uc + pl
    p = np.abs(np.asarray(amplitudes)) ** 2
    sl_diag = 1.0 - float(np.sum(p**2))
    return [
        PropertyVerdict("detector:total_constant", steps, float(np.ptp(total)), slack, 0),
        PropertyVerdict("detector:predictability_constant", steps, float(np.ptp(pl)), slack, 0),
        PropertyVerdict("detector:uq_monotone", steps, float(max(0.0, -np.min(np.diff(uq)))), slack, 0),
        PropertyVerdict(
            "detector:endpoints", steps, float(max(abs(uq[0]), abs(uq[-1] - sl_diag))), slack, 0
        ),
    ]


def run_all(dims=(2, 3, 4, 8), trials=1000, seed=42):
    """Every identity sweep and axiom check, as a flat list of verdicts."""
    verdicts = identity_sweep(dims, trials, seed)
    for d in dims:
        if d <= 4:
            verdicts += mixing_suite(CONVEX + CONCAVE, d, trials, seed)
        verdicts += check_extreme_cases(d, trials, seed)
    verdicts += check_monotone_uc(trials, seed)
    verdicts += check_detector_transfer()
    return verdicts
