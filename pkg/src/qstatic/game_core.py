"""Classical normal-form machinery for two-player static games.

Bimatrix representation, iterated elimination of strictly dominated
strategies, pure Nash equilibria, and expected payoffs under independent
mixing. Dominance and equilibrium comparisons are exact: no tolerance is
injected on the classical side.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConstraintViolation

__all__ = [
    "StrategyLabel",
    "DEFAULT_LABELS",
    "Bimatrix",
    "GamePayoffs",
    "MixProbabilities",
    "BilinearPayoff",
    "EliminationStep",
    "EliminationResult",
    "bos_bimatrix",
    "eliminate_strictly_dominated",
    "pure_nash",
    "expected_payoffs",
]


@dataclass(frozen=True)
class StrategyLabel:
    """Display name for one of a player's two canonical strategies."""

    index: int
    name: str

    def __post_init__(self) -> None:
        if self.index not in (0, 1):
            raise ConstraintViolation(
                f"strategy index must be 0 or 1, got {self.index}"
            )
        if not self.name:
            raise ConstraintViolation("strategy name must be nonempty")


#: Canonical names for the two strategies of the coordination game:
#: index 0 is "O", index 1 is "T".
DEFAULT_LABELS = (StrategyLabel(0, "O"), StrategyLabel(1, "T"))


@dataclass(frozen=True, eq=False)
class Bimatrix:
    """Payoff tables of a finite two-player game.

    ``payoff_a[i, j]`` is the row player's payoff when the row player picks
    strategy ``i`` and the column player picks ``j``; ``payoff_b`` likewise.
    Both tables share one shape and all entries are finite. Arrays are
    copied and frozen at construction.
    """

    payoff_a: np.ndarray
    payoff_b: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.payoff_a, dtype=float)
        b = np.array(self.payoff_b, dtype=float)
        if a.ndim != 2 or a.shape != b.shape:
            raise ConstraintViolation(
                f"payoff tables must be 2-d arrays of equal shape, "
                f"got {a.shape} and {b.shape}"
            )
        if min(a.shape) < 1:
            raise ConstraintViolation("each player needs at least one strategy")
        if not (np.isfinite(a).all() and np.isfinite(b).all()):
            raise ConstraintViolation("payoff entries must be finite")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "payoff_a", a)
        object.__setattr__(self, "payoff_b", b)

    @property
    def shape(self) -> tuple[int, int]:
        return self.payoff_a.shape

    @property
    def is_2x2(self) -> bool:
        return self.shape == (2, 2)


@dataclass(frozen=True)
class GamePayoffs:
    """The three payoff levels of the asymmetric coordination game.

    ``alpha`` is what a player earns at their preferred joint outcome,
    ``beta`` at the opponent's preferred one, ``gamma`` on miscoordination.
    The strict ordering alpha > beta > gamma is required.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        vals = (self.alpha, self.beta, self.gamma)
        if not all(np.isfinite(v) for v in vals):
            raise ConstraintViolation(f"payoff parameters must be finite, got {vals}")
        if not (self.alpha > self.beta > self.gamma):
            raise ConstraintViolation(
                "payoff parameters must satisfy alpha > beta > gamma, got "
                f"alpha={self.alpha}, beta={self.beta}, gamma={self.gamma}"
            )

    @property
    def spread(self) -> float:
        """alpha + beta - 2*gamma, the denominator of every closed form."""
        return self.alpha + self.beta - 2.0 * self.gamma


def _check_unit_interval(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ConstraintViolation(f"{name} must lie in [0, 1], got {value}")


@dataclass(frozen=True)
class MixProbabilities:
    """Independent mixing probabilities: p for the row player's strategy 0,
    q for the column player's strategy 0."""

    p: float
    q: float

    def __post_init__(self) -> None:
        _check_unit_interval("p", self.p)
        _check_unit_interval("q", self.q)


@dataclass(frozen=True)
class BilinearPayoff:
    """One player's expected payoff as a bilinear surface over the unit square.

    value(p, q) = pq_coeff * p * q + p_coeff * p + q_coeff * q + const.
    This is the exact shape of any 2x2 expected payoff in the two mixing
    probabilities, classical or quantum.
    """

    pq_coeff: float
    p_coeff: float
    q_coeff: float
    const: float

    def __post_init__(self) -> None:
        vals = (self.pq_coeff, self.p_coeff, self.q_coeff, self.const)
        if not all(np.isfinite(v) for v in vals):
            raise ConstraintViolation(f"bilinear coefficients must be finite, got {vals}")

    @classmethod
    def from_corner_values(
        cls, at_11: float, at_10: float, at_01: float, at_00: float
    ) -> BilinearPayoff:
        """Build the surface from its values at the four corners of [0,1]^2.

        ``at_pq`` is the payoff at (p, q); a bilinear surface is determined
        exactly by its corner values.
        """
        return cls(
            pq_coeff=at_11 - at_10 - at_01 + at_00,
            p_coeff=at_10 - at_00,
            q_coeff=at_01 - at_00,
            const=at_00,
        )

    @classmethod
    def from_payoff_matrix(cls, matrix: np.ndarray) -> BilinearPayoff:
        """Corner values of a 2x2 payoff table, with p = P(row 0), q = P(col 0)."""
        m = np.asarray(matrix, dtype=float)
        if m.shape != (2, 2):
            raise ConstraintViolation(f"need a 2x2 payoff table, got shape {m.shape}")
        return cls.from_corner_values(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    def value(self, p: float, q: float) -> float:
        return self.pq_coeff * p * q + self.p_coeff * p + self.q_coeff * q + self.const

    def slope_p(self, q: float) -> float:
        """Derivative in p, constant in p because the surface is bilinear."""
        return self.pq_coeff * q + self.p_coeff

    def slope_q(self, p: float) -> float:
        return self.pq_coeff * p + self.q_coeff


def bos_bimatrix(params: GamePayoffs) -> Bimatrix:
    """Bimatrix of the coordination game with strategy 0 = O and 1 = T.

    Row player earns alpha at (O,O) and beta at (T,T); the column player
    the reverse; both earn gamma off the diagonal.
    """
    a, b, g = params.alpha, params.beta, params.gamma
    return Bimatrix(
        payoff_a=np.array([[a, g], [g, b]]),
        payoff_b=np.array([[b, g], [g, a]]),
    )


@dataclass(frozen=True)
class EliminationStep:
    """One removal: `player` 0 (row) or 1 (column) dropped strategy `removed`
    because `dominated_by` was strictly better against every survivor."""

    player: int
    removed: int
    dominated_by: int


@dataclass(frozen=True)
class EliminationResult:
    survivors_a: tuple[int, ...]
    survivors_b: tuple[int, ...]
    steps: tuple[EliminationStep, ...]


def eliminate_strictly_dominated(game: Bimatrix) -> EliminationResult:
    """Iterated elimination of strictly dominated strategies.

    A strategy is removed when some other surviving strategy of the same
    player yields strictly more against every surviving opponent strategy.
    Weak dominance (ties anywhere) never removes. Scanning order is row
    player first, strategies ascending, restarting after each removal; the
    surviving set is order-independent under strict dominance and the steps
    record the order actually used.
    """
    rows = list(range(game.shape[0]))
    cols = list(range(game.shape[1]))
    steps: list[EliminationStep] = []

    def find_dominated(player: int) -> tuple[int, int] | None:
        own = rows if player == 0 else cols
        if len(own) == 1:
            return None
        table = game.payoff_a if player == 0 else game.payoff_b
        for cand in own:
            for other in own:
                if other == cand:
                    continue
                if player == 0:
                    worse = all(table[cand, j] < table[other, j] for j in cols)
                else:
                    worse = all(table[i, cand] < table[i, other] for i in rows)
                if worse:
                    return cand, other
        return None

    while True:
        for player in (0, 1):
            hit = find_dominated(player)
            if hit is not None:
                removed, dominator = hit
                (rows if player == 0 else cols).remove(removed)
                steps.append(EliminationStep(player, removed, dominator))
                break
        else:
            return EliminationResult(tuple(rows), tuple(cols), tuple(steps))


def pure_nash(game: Bimatrix) -> tuple[tuple[int, int], ...]:
    """All pure-strategy equilibria (i, j), in row-major order.

    A cell qualifies when neither player can strictly gain by a unilateral
    deviation; ties count, comparisons are exact.
    """
    a, b = game.payoff_a, game.payoff_b
    best_a = a == a.max(axis=0, keepdims=True)
    best_b = b == b.max(axis=1, keepdims=True)
    return tuple((int(i), int(j)) for i, j in np.argwhere(best_a & best_b))


def expected_payoffs(game: Bimatrix, mix: MixProbabilities) -> tuple[float, float]:
    """Probability-weighted payoffs of a 2x2 game under independent mixing.

    At pure corners the weights are exactly (1, 0, 0, 0)-like, so the result
    equals the corresponding bimatrix entry with no rounding.
    """
    if not game.is_2x2:
        raise ConstraintViolation(
            f"expected payoffs are defined for 2x2 games, got shape {game.shape}"
        )
    p, q = mix.p, mix.q
    weights = np.array([p * q, p * (1.0 - q), (1.0 - p) * q, (1.0 - p) * (1.0 - q)])
    return (
        float(weights @ game.payoff_a.ravel()),
        float(weights @ game.payoff_b.ravel()),
    )
