"""Two-player static games, classical and quantum-extended.

Classical bimatrix analysis (dominance elimination, pure and mixed Nash
equilibria), a 4-dimensional joint strategy space with local tactics and a
keep/flip mixing map, closed-form and enumerated equilibria for entangled
initial states, and a seeded measurement-collapse simulator. The ``qstatic``
command line fronts all of it.
"""

from .equilibria import (
    EntangledFamilyState,
    EquilibriumKind,
    EquilibriumRanking,
    FactorizableEquilibrium,
    NashPoint,
    PairwiseGap,
    UniqueSolutionReport,
    classical_mixed_equilibria,
    entangled_equilibria,
    enumerate_bilinear_nash,
    factorizable_equilibria,
    rank_equilibria,
    unique_solution,
)
from .errors import ConstraintViolation, InternalConsistencyError
from .game_core import (
    BilinearPayoff,
    Bimatrix,
    EliminationResult,
    EliminationStep,
    GamePayoffs,
    MixProbabilities,
    StrategyLabel,
    bos_bimatrix,
    eliminate_strictly_dominated,
    expected_payoffs,
    pure_nash,
)
from .montecarlo import SimulationConfig, SimulationReport, simulate
from .quantum_core import (
    BASIS_LABELS,
    DensityMatrix,
    LocalUnitary,
    MixingChoice,
    PayoffOperator,
    StateVector,
    apply_local_unitaries,
    bilinear_payoff_coefficients,
    flip_operator,
    mixed_final_density,
    payoff_operators,
    payoffs_factorizable,
    projection_probabilities,
    trace_payoffs,
)

__version__ = "0.1.0"

__all__ = [
    "BASIS_LABELS",
    "BilinearPayoff",
    "Bimatrix",
    "ConstraintViolation",
    "DensityMatrix",
    "EliminationResult",
    "EliminationStep",
    "EntangledFamilyState",
    "EquilibriumKind",
    "EquilibriumRanking",
    "FactorizableEquilibrium",
    "GamePayoffs",
    "InternalConsistencyError",
    "LocalUnitary",
    "MixProbabilities",
    "MixingChoice",
    "NashPoint",
    "PairwiseGap",
    "PayoffOperator",
    "SimulationConfig",
    "SimulationReport",
    "StateVector",
    "StrategyLabel",
    "UniqueSolutionReport",
    "apply_local_unitaries",
    "bilinear_payoff_coefficients",
    "bos_bimatrix",
    "classical_mixed_equilibria",
    "eliminate_strictly_dominated",
    "entangled_equilibria",
    "enumerate_bilinear_nash",
    "expected_payoffs",
    "factorizable_equilibria",
    "flip_operator",
    "mixed_final_density",
    "payoff_operators",
    "payoffs_factorizable",
    "projection_probabilities",
    "pure_nash",
    "rank_equilibria",
    "simulate",
    "trace_payoffs",
    "unique_solution",
]
