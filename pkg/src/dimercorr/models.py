"""Two-qubit Heisenberg-type dimer: Hamiltonian, spectra, thermal states.

The model is

    H = J [ (1-gamma)/2 (sx sx + sy sy) + (1+gamma)/2 (sz sz) ]
        + J b1 sz(1) + J b2 sz(2)

with anisotropy gamma in [-1, 1], exchange J > 0 (antiferromagnetic) and
local fields b1, b2 measured in units of J.  Boltzmann's constant is 1, so
temperatures are energies.  Two parameter families admit closed forms: zero
field with any gamma, and gamma = -1 (the XY point) with arbitrary fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, UnsupportedFamilyError
from .matkernel import gibbs, hermitian_eig, kron, pauli

__all__ = [
    "LOG_DOMAIN_T",
    "EigenPair",
    "ModelParams",
    "analytic_eigensystem",
    "build_hamiltonian",
    "concurrence_analytic",
    "ground_state_limit",
    "thermal_state",
    "thermal_state_analytic",
]

# Below this scaled temperature the closed forms switch to log-domain
# Boltzmann weights; the margin is conservative (direct hyperbolics would
# only overflow near T/J ~ 0.003).
LOG_DOMAIN_T = 0.02


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters selecting a dimer Hamiltonian.

    gamma : anisotropy in [-1, 1]; -1 is the XY point, +1 the Ising point.
    b1, b2 : local z fields on qubits 1 and 2, in units of J.
    j : exchange constant, > 0; all energies and temperatures scale with it.
    """

    gamma: float
    b1: float = 0.0
    b2: float = 0.0
    j: float = 1.0

    def __post_init__(self) -> None:
        if not -1.0 <= self.gamma <= 1.0:
            raise DomainError(f"gamma must lie in [-1, 1], got {self.gamma}")
        if self.j <= 0:
            raise DomainError(f"j must be positive, got {self.j}")


@dataclass(frozen=True)
class EigenPair:
    """One closed-form eigenstate: energy and a normalized 4-vector."""

    energy: float
    state: np.ndarray


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """Dense 4x4 Hamiltonian matrix in the product basis."""
    sx, sy, sz = pauli("x"), pauli("y"), pauli("z")
    ident = np.eye(2, dtype=complex)
    exchange = 0.5 * (1.0 - p.gamma) * (kron(sx, sx) + kron(sy, sy))
    exchange += 0.5 * (1.0 + p.gamma) * kron(sz, sz)
    field = p.b1 * kron(sz, ident) + p.b2 * kron(ident, sz)
    return p.j * (exchange + field)


def _zero_field_pairs(p: ModelParams) -> list[EigenPair]:
    root2 = math.sqrt(2.0)
    singlet = np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / root2
    triplet0 = np.array([0.0, 1.0, 1.0, 0.0], dtype=complex) / root2
    up_up = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    down_down = np.array([0.0, 0.0, 0.0, 1.0], dtype=complex)
    g = p.gamma
    return [
        EigenPair(p.j * (g - 3.0) / 2.0, singlet),
        EigenPair(p.j * (1.0 - 3.0 * g) / 2.0, triplet0),
        EigenPair(p.j * (1.0 + g) / 2.0, up_up),
        EigenPair(p.j * (1.0 + g) / 2.0, down_down),
    ]


def _xy_pairs(p: ModelParams) -> list[EigenPair]:
    delta = p.b1 - p.b2
    root_d = math.sqrt(delta * delta + 4.0)
    up_up = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    down_down = np.array([0.0, 0.0, 0.0, 1.0], dtype=complex)
    pairs = [
        EigenPair(p.j * (p.b1 + p.b2), up_up),
        EigenPair(-p.j * (p.b1 + p.b2), down_down),
    ]
    for sign in (+1.0, -1.0):
        amp = (delta + sign * root_d) / 2.0
        vec = np.array([0.0, amp, 1.0, 0.0], dtype=complex)
        pairs.append(EigenPair(sign * p.j * root_d, vec / np.linalg.norm(vec)))
    return pairs


def analytic_eigensystem(p: ModelParams) -> list[EigenPair]:
    """Closed-form eigenpairs for the two supported families.

    Zero field (any gamma): singlet at J(gamma-3)/2, triplet-zero at
    J(1-3 gamma)/2, and the two polarized states degenerate at
    J(1+gamma)/2.  XY point (gamma = -1, any fields): polarized states at
    +-J(b1+b2) and an entangled pair at +-J sqrt((b1-b2)^2 + 4).
    Raises UnsupportedFamilyError elsewhere; the numeric route via
    hermitian_eig(build_hamiltonian(p)) always works.
    """
    if p.b1 == 0.0 and p.b2 == 0.0:
        return _zero_field_pairs(p)
    if p.gamma == -1.0:
        return _xy_pairs(p)
    raise UnsupportedFamilyError(
        "no closed-form eigensystem for gamma != -1 with nonzero fields; "
        "use hermitian_eig(build_hamiltonian(p))"
    )


def _check_temperature(t: float) -> None:
    if t <= 0:
        raise DomainError(f"temperature must be positive, got {t}")


def _boltzmann_mixture(pairs: list[EigenPair], t: float) -> np.ndarray:
    # Weights shifted by the ground energy stay in (0, 1] at any T > 0.
    energies = np.array([pair.energy for pair in pairs])
    weights = np.exp(-(energies - energies.min()) / t)
    weights /= weights.sum()
    rho = np.zeros((4, 4), dtype=complex)
    for w, pair in zip(weights, pairs):
        rho += w * np.outer(pair.state, pair.state.conj())
    return rho


def thermal_state_analytic(p: ModelParams, t: float) -> np.ndarray:
    """Closed-form Gibbs state for the supported families.

    Zero field: an X-shaped matrix with corners eta e^{-(1+gamma) J/T} and a
    central block eta [[cosh u, -sinh u], [-sinh u, cosh u]] where
    u = (1-gamma) J/T and eta normalizes the trace.  XY point: corners
    e^{-+(b1+b2) J/T} and central block [[b-c, -s], [-s, b+c]], all over
    Z = 2 [cosh((b1+b2) J/T) + cosh(sqrt(D) J/T)] with D = (b1-b2)^2 + 4,
    b = cosh(sqrt(D) J/T), c = sinh(sqrt(D) J/T)(b1-b2)/sqrt(D) and
    s = 2 sinh(sqrt(D) J/T)/sqrt(D).

    Below T/J = 0.02 both families fall back to log-domain Boltzmann
    weights over the closed-form eigenpairs, which cannot overflow.
    """
    _check_temperature(t)
    tau = t / p.j  # closed forms are written for J = 1
    if p.b1 == 0.0 and p.b2 == 0.0:
        if tau < LOG_DOMAIN_T:
            return _boltzmann_mixture(_zero_field_pairs(p), t)
        u = (1.0 - p.gamma) / tau
        corner = math.exp(-(1.0 + p.gamma) / tau)
        eta = 1.0 / (2.0 * (math.cosh(u) + corner))
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = rho[3, 3] = eta * corner
        rho[1, 1] = rho[2, 2] = eta * math.cosh(u)
        rho[1, 2] = rho[2, 1] = -eta * math.sinh(u)
        return rho
    if p.gamma == -1.0:
        if tau < LOG_DOMAIN_T:
            return _boltzmann_mixture(_xy_pairs(p), t)
        delta = p.b1 - p.b2
        sigma = p.b1 + p.b2
        root_d = math.sqrt(delta * delta + 4.0)
        z = 2.0 * (math.cosh(sigma / tau) + math.cosh(root_d / tau))
        b = math.cosh(root_d / tau)
        c = math.sinh(root_d / tau) * delta / root_d
        s = 2.0 * math.sinh(root_d / tau) / root_d
        d = math.exp(-sigma / tau)
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = d / z
        rho[1, 1] = (b - c) / z
        rho[2, 2] = (b + c) / z
        rho[1, 2] = rho[2, 1] = -s / z
        rho[3, 3] = 1.0 / (d * z)
        return rho
    raise UnsupportedFamilyError(
        "no closed-form thermal state for gamma != -1 with nonzero fields; "
        "use thermal_state(p, t)"
    )


def thermal_state(p: ModelParams, t: float) -> np.ndarray:
    """Gibbs state of the dimer at temperature ``t``, any parameters."""
    return gibbs(build_hamiltonian(p), t)


def ground_state_limit(p: ModelParams) -> np.ndarray:
    """T -> 0+ limit of the thermal state.

    Uniform mixture over the ground eigenspace; energies within 1e-10 of
    the minimum count as degenerate, so the Ising point (gamma = 1) yields
    the equal mixture of the singlet and triplet-zero projectors.
    """
    values, vectors = hermitian_eig(build_hamiltonian(p))
    ground = values <= values[0] + 1e-10
    cols = vectors[:, ground]
    return (cols @ cols.conj().T) / int(ground.sum())


def concurrence_analytic(p: ModelParams, t: float) -> float:
    """Closed-form concurrence of the thermal state, supported families only.

    Zero field:  C = max{0, (sinh u - e^{-(1+gamma) J/T}) / (cosh u + e^{-(1+gamma) J/T})}
    with u = (1-gamma) J/T.  XY point:  C = (2/Z) max{0, s - 1} with s and Z
    as in thermal_state_analytic.  Both are evaluated with all exponentials
    rescaled to non-positive arguments, so they cannot overflow at any T.
    """
    _check_temperature(t)
    tau = t / p.j
    if p.b1 == 0.0 and p.b2 == 0.0:
        # Numerator and denominator divided by e^u: every exponent <= 0.
        u = (1.0 - p.gamma) / tau
        small = math.exp(-2.0 * u)
        cross = 2.0 * math.exp(-2.0 / tau)
        return max(0.0, (1.0 - small - cross) / (1.0 + small + cross))
    if p.gamma == -1.0:
        delta = p.b1 - p.b2
        sigma = p.b1 + p.b2
        root_d = math.sqrt(delta * delta + 4.0)
        a, u = abs(sigma) / tau, root_d / tau
        m = max(a, u)
        # 2(s - 1)/Z with numerator and denominator scaled by e^{-m}.
        num = 2.0 * ((math.exp(u - m) - math.exp(-u - m)) / root_d - math.exp(-m))
        den = math.exp(a - m) + math.exp(-a - m) + math.exp(u - m) + math.exp(-u - m)
        return max(0.0, num / den)
    raise UnsupportedFamilyError(
        "no closed-form concurrence for gamma != -1 with nonzero fields; "
        "use concurrence(thermal_state(p, t))"
    )
