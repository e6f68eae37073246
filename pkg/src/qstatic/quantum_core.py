"""Quantum strategy space over the joint basis (|OO>, |OT>, |TO>, |TT>).

State vectors and 4x4 density matrices for the two players' joint choice,
local SU(2) manipulation, the identity/flip mixing map, diagonal payoff
observables, and trace payoffs. The first tensor slot belongs to the row
player. Payoff evaluation is phase-insensitive throughout: only squared
moduli (the density diagonal) ever enter a payoff.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConstraintViolation, InternalConsistencyError
from .game_core import BilinearPayoff, GamePayoffs

__all__ = [
    "BASIS_LABELS",
    "STATE_NORM_TOL",
    "HERMITIAN_TOL",
    "TRACE_TOL",
    "EIGENVALUE_FLOOR",
    "IMAG_PART_TOL",
    "StateVector",
    "DensityMatrix",
    "LocalUnitary",
    "PayoffOperator",
    "MixingChoice",
    "apply_local_unitaries",
    "projection_probabilities",
    "payoffs_factorizable",
    "flip_operator",
    "mixed_final_density",
    "payoff_operators",
    "trace_payoffs",
    "bilinear_payoff_coefficients",
]

#: Canonical ordering of the joint basis; row player's symbol first.
BASIS_LABELS = ("OO", "OT", "TO", "TT")

STATE_NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
#: Eigenvalues may dip slightly negative from repeated conjugation round-off.
EIGENVALUE_FLOOR = -1e-10
#: A trace payoff with a larger imaginary part indicates an internal bug.
IMAG_PART_TOL = 1e-9

_FLIP = np.array([[0.0, 1.0], [1.0, 0.0]])
_EYE2 = np.eye(2)
# Conjugation operators of the mixing map, keyed by (row flips, column flips).
_KEEP_KEEP = np.eye(4)
_KEEP_FLIP = np.kron(_EYE2, _FLIP)
_FLIP_KEEP = np.kron(_FLIP, _EYE2)
_FLIP_FLIP = np.kron(_FLIP, _FLIP)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized joint strategy state: 4 complex amplitudes over BASIS_LABELS."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (4,):
            raise ConstraintViolation(
                f"a joint state needs exactly 4 amplitudes, got shape {amps.shape}"
            )
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > STATE_NORM_TOL:
            raise ConstraintViolation(
                f"state vector is not normalized: sum of squared moduli = {norm_sq!r}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, which: int | str) -> StateVector:
        """Basis state by index 0..3 or by label such as "TO"."""
        index = BASIS_LABELS.index(which) if isinstance(which, str) else which
        if not 0 <= index <= 3:
            raise ConstraintViolation(f"basis index must be 0..3, got {which!r}")
        amps = np.zeros(4, dtype=complex)
        amps[index] = 1.0
        return cls(amps)

    @classmethod
    def oo_tt(cls, a: complex, b: complex) -> StateVector:
        """Superposition a|OO> + b|TT> (must be normalized)."""
        return cls(np.array([a, 0.0, 0.0, b], dtype=complex))

    @classmethod
    def bell(cls) -> StateVector:
        """The maximally entangled state (|OO> + |TT>) / sqrt(2)."""
        return cls.oo_tt(1.0 / np.sqrt(2.0), 1.0 / np.sqrt(2.0))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def density_matrix(self) -> DensityMatrix:
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """4x4 Hermitian, unit-trace, positive-semidefinite joint strategy state."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.entries, dtype=complex)
        if m.shape != (4, 4):
            raise ConstraintViolation(
                f"a joint density matrix must be 4x4, got shape {m.shape}"
            )
        hermitian_gap = float(np.abs(m - m.conj().T).max())
        if hermitian_gap > HERMITIAN_TOL:
            raise ConstraintViolation(
                f"density matrix is not Hermitian (max asymmetry {hermitian_gap:.3e})"
            )
        trace_gap = abs(m.trace() - 1.0)
        if trace_gap > TRACE_TOL:
            raise ConstraintViolation(
                f"density matrix trace deviates from 1 by {trace_gap:.3e}"
            )
        smallest = float(np.linalg.eigvalsh(m)[0])
        if smallest < EIGENVALUE_FLOOR:
            raise ConstraintViolation(
                f"density matrix has a negative eigenvalue ({smallest:.3e})"
            )
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @classmethod
    def from_state(cls, psi: StateVector) -> DensityMatrix:
        return psi.density_matrix()

    def diagonal_probabilities(self) -> np.ndarray:
        """Real diagonal; these are the joint measurement probabilities."""
        return np.real(np.diagonal(self.entries)).copy()

    def fidelity(self, psi: StateVector) -> float:
        """Overlap <psi| rho |psi>, real for a valid density matrix."""
        amps = psi.amplitudes
        return float(np.real(amps.conj() @ self.entries @ amps))


@dataclass(frozen=True)
class LocalUnitary:
    """Single-player SU(2) tactic [[a, b], [-conj(b), conj(a)]]."""

    a: complex
    b: complex

    def __post_init__(self) -> None:
        a = complex(self.a)
        b = complex(self.b)
        norm = abs(a) ** 2 + abs(b) ** 2
        if abs(norm - 1.0) > STATE_NORM_TOL:
            raise ConstraintViolation(
                f"|a|^2 + |b|^2 must be 1 for a local tactic, got {norm!r}"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def identity(cls) -> LocalUnitary:
        return cls(1.0, 0.0)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.a, self.b], [-np.conj(self.b), np.conj(self.a)]], dtype=complex
        )


@dataclass(frozen=True, eq=False)
class PayoffOperator:
    """Observable diagonal in the canonical basis; entries are payoffs."""

    diagonal: np.ndarray

    def __post_init__(self) -> None:
        d = np.asarray(self.diagonal, dtype=float)
        if d.shape != (4,):
            raise ConstraintViolation(
                f"a payoff operator needs 4 diagonal entries, got shape {d.shape}"
            )
        if not np.isfinite(d).all():
            raise ConstraintViolation("payoff operator entries must be finite")
        d = d.copy()
        d.setflags(write=False)
        object.__setattr__(self, "diagonal", d)

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.diagonal.astype(complex))


@dataclass(frozen=True)
class MixingChoice:
    """Each player keeps their part of the state with the given probability
    (p for the row player, q for the column player) and flips it otherwise."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ConstraintViolation(f"p must lie in [0, 1], got {self.p}")
        if not 0.0 <= self.q <= 1.0:
            raise ConstraintViolation(f"q must lie in [0, 1], got {self.q}")


def apply_local_unitaries(
    ua: LocalUnitary, ub: LocalUnitary, psi_in: StateVector
) -> StateVector:
    """Joint action (ua ⊗ ub) |psi_in>; the norm is preserved.

    Acting on |OO> gives amplitudes (a c, -a conj(d), -conj(b) c,
    conj(b) conj(d)) where (a, b) parametrize ua and (c, d) parametrize ub.
    """
    joint = np.kron(ua.matrix, ub.matrix)
    return StateVector(joint @ psi_in.amplitudes)


def projection_probabilities(psi: StateVector) -> np.ndarray:
    """Squared moduli of the projections onto the canonical basis."""
    return psi.probabilities()


def payoffs_factorizable(
    params: GamePayoffs, a2: float, c2: float
) -> tuple[float, float]:
    """Expected payoffs when both players apply independent local tactics.

    ``a2`` and ``c2`` are the squared moduli of the first coefficient of the
    row and column player's tactic; the payoffs depend on nothing else, and
    coincide with classical independent mixing at (p, q) = (a2, c2).
    """
    _check_square_modulus("a2", a2)
    _check_square_modulus("c2", c2)
    alpha, beta, gamma = params.alpha, params.beta, params.gamma
    pay_a = a2 * (params.spread * c2 - beta + gamma) + beta + (gamma - beta) * c2
    pay_b = c2 * (params.spread * a2 - alpha + gamma) + alpha + (gamma - alpha) * a2
    return pay_a, pay_b


def _check_square_modulus(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ConstraintViolation(
            f"{name} is a squared modulus and must lie in [0, 1], got {value}"
        )


def flip_operator() -> np.ndarray:
    """The single-player strategy swap: Hermitian, unitary, its own inverse."""
    return _FLIP.copy()


def mixed_final_density(rho_in: DensityMatrix, mix: MixingChoice) -> DensityMatrix:
    """Both players independently keep or flip their half of the joint state.

    Returns the convex combination of the four conjugations of ``rho_in``
    by (keep/flip ⊗ keep/flip), weighted by p q, p (1-q), (1-p) q and
    (1-p)(1-q). All density-matrix invariants are preserved and re-checked
    on the output.
    """
    r = rho_in.entries
    p, q = mix.p, mix.q
    out = (
        (p * q) * r
        + (p * (1.0 - q)) * (_KEEP_FLIP @ r @ _KEEP_FLIP.conj().T)
        + ((1.0 - p) * q) * (_FLIP_KEEP @ r @ _FLIP_KEEP.conj().T)
        + ((1.0 - p) * (1.0 - q)) * (_FLIP_FLIP @ r @ _FLIP_FLIP.conj().T)
    )
    return DensityMatrix(out)


def payoff_operators(params: GamePayoffs) -> tuple[PayoffOperator, PayoffOperator]:
    """Diagonal payoff observables for the two players.

    Row player: (alpha, gamma, gamma, beta); column player: (beta, gamma,
    gamma, alpha), in the canonical basis order.
    """
    a, b, g = params.alpha, params.beta, params.gamma
    return (
        PayoffOperator(np.array([a, g, g, b])),
        PayoffOperator(np.array([b, g, g, a])),
    )


def trace_payoffs(
    pa: PayoffOperator, pb: PayoffOperator, rho: DensityMatrix
) -> tuple[float, float]:
    """Mean values tr(P rho) for both diagonal payoff operators.

    Only the diagonal of rho contributes. Any imaginary residue beyond
    IMAG_PART_TOL is flagged as an internal inconsistency; smaller residue
    is discarded.
    """
    diag = np.diagonal(rho.entries)
    value_a = complex(pa.diagonal @ diag)
    value_b = complex(pb.diagonal @ diag)
    residue = max(abs(value_a.imag), abs(value_b.imag))
    if residue > IMAG_PART_TOL:
        raise InternalConsistencyError(
            f"trace payoff has imaginary residue {residue:.3e}"
        )
    return value_a.real, value_b.real


def bilinear_payoff_coefficients(
    rho_in: DensityMatrix, pa: PayoffOperator, pb: PayoffOperator
) -> tuple[BilinearPayoff, BilinearPayoff]:
    """Coefficients of both players' payoffs as functions of the keep
    probabilities (p, q).

    The mixing map makes each payoff bilinear in (p, q); the surface is
    pinned by the four corner payoffs, obtained by conjugating ``rho_in``
    with each keep/flip combination. Evaluating the returned forms at any
    corner reproduces the corresponding corner payoff exactly.
    """
    corners = []
    for op in (_KEEP_KEEP, _KEEP_FLIP, _FLIP_KEEP, _FLIP_FLIP):
        conjugated = op @ rho_in.entries @ op.conj().T
        diag = np.diagonal(conjugated)
        va = complex(pa.diagonal @ diag)
        vb = complex(pb.diagonal @ diag)
        residue = max(abs(va.imag), abs(vb.imag))
        if residue > IMAG_PART_TOL:
            raise InternalConsistencyError(
                f"corner payoff has imaginary residue {residue:.3e}"
            )
        corners.append((va.real, vb.real))
    (t11_a, t11_b), (t10_a, t10_b), (t01_a, t01_b), (t00_a, t00_b) = corners
    return (
        BilinearPayoff.from_corner_values(t11_a, t10_a, t01_a, t00_a),
        BilinearPayoff.from_corner_values(t11_b, t10_b, t01_b, t00_b),
    )
