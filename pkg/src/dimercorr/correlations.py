"""Total, quantum, and classical correlations of a two-qubit state.

Total correlation is the quantum mutual information S(1) + S(2) - S(12),
quantum correlation is the entanglement of formation obtained from the
concurrence, and classical correlation is their difference.  All entropies
are in bits (base-2 logarithms).  Two independent checks live here as
well: the positive-partial-transpose separability test and a sampler over
random pure-state decompositions whose ensemble-average entanglement can
never drop below the entanglement of formation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, ValidationError
from .matkernel import (
    PSD_TOL,
    check_density_matrix,
    kron,
    partial_trace,
    partial_transpose,
    pauli,
)

__all__ = [
    "CorrelationReport",
    "Ensemble",
    "average_entanglement",
    "classical_correlation",
    "concurrence",
    "entanglement_of_formation",
    "formation_from_concurrence",
    "is_separable_ppt",
    "mutual_information",
    "random_density_matrix",
    "random_ensemble",
    "random_unitary",
    "report",
    "sample_decomposition_average",
    "von_neumann_entropy",
]

_SIGMA_YY = kron(pauli("y"), pauli("y")).real  # entries are +-1 on the antidiagonal

MAX_ENSEMBLE = 8


def _entropy_bits(eigenvalues: np.ndarray) -> float:
    lam = eigenvalues[eigenvalues > 0.0]
    return float(-(lam * np.log2(lam)).sum())


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy -tr(rho log2 rho) of a 2x2 or 4x4 density matrix, in bits.

    Eigenvalues in [-1e-10, 0) are clamped to zero (0 log 0 = 0); anything
    more negative is a validation error.  The result is clamped to >= 0.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape not in ((2, 2), (4, 4)):
        raise ValueError(f"expected a 2x2 or 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-10:
        raise ValidationError("entropy input is not Hermitian within tolerance")
    eigenvalues = np.linalg.eigvalsh(rho)
    if eigenvalues[0] < -PSD_TOL:
        raise ValidationError("entropy input has an eigenvalue below -1e-10")
    if abs(eigenvalues.sum() - 1.0) > 1e-10:
        raise ValidationError("entropy input does not have unit trace")
    return max(0.0, _entropy_bits(np.clip(eigenvalues, 0.0, None)))


def mutual_information(rho: np.ndarray) -> float:
    """Total correlation S(1) + S(2) - S(12) of a two-qubit state, in bits."""
    rho = check_density_matrix(rho, 4)
    s1 = von_neumann_entropy(partial_trace(rho, 1))
    s2 = von_neumann_entropy(partial_trace(rho, 2))
    return s1 + s2 - von_neumann_entropy(rho)


def _psd_sqrt(rho: np.ndarray) -> np.ndarray:
    eigenvalues, vectors = np.linalg.eigh(rho)
    if eigenvalues[0] < -PSD_TOL:
        raise ValidationError("matrix square root input has an eigenvalue below -1e-10")
    roots = np.sqrt(np.clip(eigenvalues, 0.0, None))
    return (vectors * roots) @ vectors.conj().T


def concurrence(rho: np.ndarray) -> float:
    """Concurrence C(rho) = max{0, l1 - l2 - l3 - l4}.

    The l_i are the decreasing square roots of the eigenvalues of
    rho (sy x sy) rho* (sy x sy).  They are computed as eigenvalues of the
    Hermitian congruence sqrt(rho) (sy x sy) rho* (sy x sy) sqrt(rho),
    which has the same spectrum but keeps the eigenproblem Hermitian.
    """
    rho = check_density_matrix(rho, 4)
    flipped = _SIGMA_YY @ rho.conj() @ _SIGMA_YY
    root = _psd_sqrt(rho)
    squared = np.linalg.eigvalsh(root @ flipped @ root)
    if squared[0] < -1e-12:
        raise ValidationError("concurrence spectrum has an eigenvalue below -1e-12")
    lam = np.sqrt(np.clip(squared, 0.0, None))[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def _binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def formation_from_concurrence(c: float) -> float:
    """Entanglement of formation h((1 + sqrt(1 - C^2)) / 2) for C in [0, 1]."""
    if not 0.0 <= c <= 1.0:
        raise DomainError(f"concurrence must lie in [0, 1], got {c}")
    return _binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


def entanglement_of_formation(rho: np.ndarray) -> float:
    """Entanglement of formation of a two-qubit state, in bits."""
    return formation_from_concurrence(concurrence(rho))


def classical_correlation(rho: np.ndarray) -> float:
    """Classical correlation: mutual information minus entanglement of formation."""
    return mutual_information(rho) - entanglement_of_formation(rho)


@dataclass(frozen=True)
class CorrelationReport:
    """All four correlation quantities of one state, in bits."""

    total: float
    quantum: float
    classical: float
    concurrence: float


def report(rho: np.ndarray) -> CorrelationReport:
    """Bundle total, quantum, and classical correlations plus concurrence.

    The concurrence is evaluated once and reused for the quantum part, and
    classical = total - quantum holds exactly by construction.
    """
    rho = check_density_matrix(rho, 4)
    total = mutual_information(rho)
    c = concurrence(rho)
    quantum = formation_from_concurrence(c)
    return CorrelationReport(total=total, quantum=quantum, classical=total - quantum, concurrence=c)


def is_separable_ppt(rho: np.ndarray, tol: float = 1e-10) -> bool:
    """Peres-Horodecki test, exact for two qubits.

    True iff the partial transpose has no eigenvalue below ``-tol``.
    """
    rho = check_density_matrix(rho, 4)
    return bool(np.linalg.eigvalsh(partial_transpose(rho, 2))[0] >= -tol)


# --- random states and pure-state decompositions ---------------------------


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
    q, r = np.linalg.qr(z / math.sqrt(2.0))
    diag = np.diagonal(r)
    phases = np.where(np.abs(diag) > 0, diag / np.abs(diag), 1.0)
    return q * phases


def random_density_matrix(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Full-rank random density matrix G G† / tr(G G†), G complex Gaussian."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


@dataclass(frozen=True)
class Ensemble:
    """A pure-state decomposition rho = sum_i p_i |psi_i><psi_i|."""

    probabilities: np.ndarray  # shape (m,), nonnegative, sums to 1
    states: np.ndarray  # shape (m, 4), rows are normalized pure states

    def density_matrix(self) -> np.ndarray:
        weighted = self.states * self.probabilities[:, None]
        return weighted.T @ self.states.conj()


def _support(rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    eigenvalues, vectors = np.linalg.eigh(rho)
    keep = eigenvalues > 1e-10
    return eigenvalues[keep], vectors[:, keep]


def random_ensemble(rho: np.ndarray, size: int, rng: np.random.Generator) -> Ensemble:
    """Random ``size``-member pure-state decomposition of ``rho``.

    Members are built by applying the first rank(rho) columns of a Haar
    unitary to the weighted eigenvectors, which exhausts every
    decomposition of the given size.  ``size`` must be at least rank(rho).
    """
    rho = check_density_matrix(rho, 4)
    if not 1 <= size <= MAX_ENSEMBLE:
        raise ValueError(f"ensemble size must lie in 1..{MAX_ENSEMBLE}, got {size}")
    eigenvalues, vectors = _support(rho)
    rank = eigenvalues.size
    if size < rank:
        raise DomainError(f"ensemble size {size} is below the state rank {rank}")
    basis = vectors * np.sqrt(eigenvalues)  # columns are sqrt(mu_i) |e_i>
    isometry = random_unitary(size, rng)[:, :rank]
    unnormalized = isometry @ basis.T  # row j is the j-th member, unnormalized
    probabilities = np.einsum("ij,ij->i", unnormalized, unnormalized.conj()).real
    norms = np.sqrt(np.where(probabilities > 0, probabilities, 1.0))
    return Ensemble(probabilities=probabilities, states=unnormalized / norms[:, None])


def _pure_entanglement(states: np.ndarray) -> np.ndarray:
    """Entropy of the qubit-1 marginal for each row of normalized pure states.

    For a pure two-qubit state with amplitude matrix A (reshaped 2x2), the
    marginal A A† has unit trace and determinant |det A|^2, so its spectrum
    is (1 +- sqrt(1 - 4 |det A|^2)) / 2.
    """
    amps = states.reshape(-1, 2, 2)
    dets = np.abs(amps[:, 0, 0] * amps[:, 1, 1] - amps[:, 0, 1] * amps[:, 1, 0])
    spread = np.sqrt(np.clip(1.0 - 4.0 * dets**2, 0.0, None))
    upper = np.clip(0.5 * (1.0 + spread), 0.0, 1.0)
    lower = 1.0 - upper
    out = np.zeros(states.shape[0])
    for w in (upper, lower):
        mask = w > 0.0
        out[mask] -= w[mask] * np.log2(w[mask])
    return out


def average_entanglement(ensemble: Ensemble) -> float:
    """Probability-weighted mean pure-state entanglement of an ensemble."""
    return float(ensemble.probabilities @ _pure_entanglement(ensemble.states))


def sample_decomposition_average(
    rho: np.ndarray,
    ensemble_size: int,
    samples: int,
    seed: int,
) -> float:
    """Minimum ensemble-average entanglement over random decompositions.

    Draws ``samples`` random ``ensemble_size``-member decompositions of
    ``rho`` and returns the smallest average entanglement found.  Since the
    entanglement of formation is the infimum over all decompositions, the
    result can never fall below it (up to roundoff); the gap shrinks as
    ``samples`` grows.
    """
    rho = check_density_matrix(rho, 4)
    if not 1 <= ensemble_size <= MAX_ENSEMBLE:
        raise ValueError(f"ensemble size must lie in 1..{MAX_ENSEMBLE}, got {ensemble_size}")
    if samples < 1:
        raise ValueError(f"samples must be at least 1, got {samples}")
    eigenvalues, vectors = _support(rho)
    rank = eigenvalues.size
    if ensemble_size < rank:
        raise DomainError(f"ensemble size {ensemble_size} is below the state rank {rank}")
    basis = (vectors * np.sqrt(eigenvalues)).T  # shape (rank, 4)
    rng = np.random.default_rng(seed)

    best = math.inf
    for start in range(0, samples, 2048):
        block = min(2048, samples - start)
        z = rng.standard_normal((block, ensemble_size, ensemble_size)) + 1j * rng.standard_normal(
            (block, ensemble_size, ensemble_size)
        )
        q, r = np.linalg.qr(z)
        diag = np.diagonal(r, axis1=1, axis2=2)
        q = q * np.where(np.abs(diag) > 0, diag / np.abs(diag), 1.0)[:, None, :]
        members = q[:, :, :rank] @ basis  # (block, m, 4)
        probs = np.einsum("bmj,bmj->bm", members, members.conj()).real
        norms = np.sqrt(np.where(probs > 0, probs, 1.0))
        flat = (members / norms[:, :, None]).reshape(-1, 4)
        entanglements = _pure_entanglement(flat).reshape(block, ensemble_size)
        averages = np.einsum("bm,bm->b", probs, entanglements)
        best = min(best, float(averages.min()))
    return best
