"""qstatic command line: load a JSON game config, run an analysis, emit
table, json, or csv output.

Commands: classical (elimination, pure and mixed equilibria), quantum
(factorizable or entangled equilibria with ranking and the unique-solution
verdict), simulate (seeded measurement-collapse runs), sweep (tabulate
equilibria or payoffs along one parameter).

Exit codes: 0 success, 2 config or parameter validation failure, 1 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .equilibria import (
    EntangledFamilyState,
    EquilibriumRanking,
    NashPoint,
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
    GamePayoffs,
    bos_bimatrix,
    eliminate_strictly_dominated,
    pure_nash,
)
from .montecarlo import SimulationConfig, outcome_distribution, simulate
from .quantum_core import (
    BASIS_LABELS,
    MixingChoice,
    StateVector,
    bilinear_payoff_coefficients,
    mixed_final_density,
    payoff_operators,
    trace_payoffs,
)
from .report_schema import SCHEMA_VERSION

__all__ = ["ConfigError", "LoadedConfig", "load_config", "main"]

PRESET_STATES = ("OO", "OT", "TO", "TT", "bell")
AMPLITUDE_NORM_TOL = 1e-9


class ConfigError(Exception):
    """Configuration problem; message is anchored to file and field."""


@dataclass(frozen=True)
class LoadedConfig:
    path: str
    params: GamePayoffs | None
    game: Bimatrix
    labels_a: tuple[str, ...]
    labels_b: tuple[str, ...]
    state: StateVector
    state_form: str
    preset_name: str | None
    family: EntangledFamilyState | None


def _fail(path: str, where: str, message: str) -> ConfigError:
    return ConfigError(f"{path}: {where}: {message}")


def _as_number(path: str, where: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _fail(path, where, f"expected a number, got {value!r}")
    return float(value)


def _load_payoffs(
    path: str, raw: Any
) -> tuple[GamePayoffs | None, Bimatrix]:
    if not isinstance(raw, dict):
        raise _fail(path, "payoffs", "must be an object")
    keys = set(raw)
    if keys == {"alpha", "beta", "gamma"}:
        params = GamePayoffs(
            _as_number(path, "payoffs.alpha", raw["alpha"]),
            _as_number(path, "payoffs.beta", raw["beta"]),
            _as_number(path, "payoffs.gamma", raw["gamma"]),
        )
        return params, bos_bimatrix(params)
    if keys == {"payoff_a", "payoff_b"}:
        return None, Bimatrix(
            np.asarray(raw["payoff_a"], dtype=float),
            np.asarray(raw["payoff_b"], dtype=float),
        )
    raise _fail(
        path,
        "payoffs",
        "needs exactly the keys {alpha, beta, gamma} or {payoff_a, payoff_b}, "
        f"got {sorted(keys)}",
    )


def _load_state(
    path: str, raw: Any
) -> tuple[StateVector, str, str | None, EntangledFamilyState | None]:
    if isinstance(raw, str):
        if raw not in PRESET_STATES:
            raise _fail(
                path,
                "initial_state",
                f"unknown preset {raw!r}; choose one of {', '.join(PRESET_STATES)}",
            )
        family_a2 = {"OO": 1.0, "TT": 0.0, "bell": 0.5}.get(raw)
        family = EntangledFamilyState(family_a2) if family_a2 is not None else None
        state = family.state_vector() if family else StateVector.basis(raw)
        return state, "preset", raw, family
    if isinstance(raw, dict):
        if set(raw) != {"a2"}:
            raise _fail(path, "initial_state", "object form needs exactly the key a2")
        a2 = _as_number(path, "initial_state.a2", raw["a2"])
        family = EntangledFamilyState(a2)
        return family.state_vector(), "family", None, family
    if isinstance(raw, list):
        if len(raw) != 4:
            raise _fail(path, "initial_state", "amplitude form needs 4 [re, im] pairs")
        amps = []
        for k, pair in enumerate(raw):
            if not (isinstance(pair, list) and len(pair) == 2):
                raise _fail(
                    path, f"initial_state[{k}]", "each amplitude is a [re, im] pair"
                )
            re = _as_number(path, f"initial_state[{k}][0]", pair[0])
            im = _as_number(path, f"initial_state[{k}][1]", pair[1])
            amps.append(complex(re, im))
        vec = np.array(amps, dtype=complex)
        norm = float(np.sqrt(np.sum(np.abs(vec) ** 2)))
        if abs(norm - 1.0) > AMPLITUDE_NORM_TOL:
            raise _fail(
                path,
                "initial_state",
                f"amplitudes must be normalized within {AMPLITUDE_NORM_TOL:g}; "
                f"norm is {norm!r}",
            )
        state = StateVector(vec / norm)
        family = None
        if abs(state.amplitudes[1]) <= 1e-12 and abs(state.amplitudes[2]) <= 1e-12:
            family = EntangledFamilyState(float(abs(state.amplitudes[0]) ** 2))
        return state, "amplitudes", None, family
    raise _fail(
        path,
        "initial_state",
        "must be a preset name, an {a2: x} object, or 4 [re, im] pairs",
    )


def _load_labels(
    path: str, raw: Any, shape: tuple[int, int]
) -> tuple[tuple[str, ...], tuple[str, ...]]:
    def defaults(prefix: str, n: int) -> tuple[str, ...]:
        return ("O", "T") if n == 2 else tuple(f"{prefix}{i}" for i in range(n))

    if raw is None:
        return defaults("A", shape[0]), defaults("B", shape[1])
    if not isinstance(raw, dict) or set(raw) - {"a", "b"}:
        raise _fail(path, "labels", "must be an object with keys a and/or b")
    out = []
    for key, n, fallback in (("a", shape[0], "A"), ("b", shape[1], "B")):
        if key not in raw:
            out.append(defaults(fallback, n))
            continue
        names = raw[key]
        ok = (
            isinstance(names, list)
            and len(names) == n
            and all(isinstance(s, str) and s for s in names)
            and len(set(names)) == n
        )
        if not ok:
            raise _fail(
                path, f"labels.{key}", f"needs {n} distinct nonempty strings"
            )
        out.append(tuple(names))
    return out[0], out[1]


def load_config(path: str) -> LoadedConfig:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    unknown = set(doc) - {"payoffs", "initial_state", "labels"}
    if unknown:
        raise ConfigError(f"{path}: unknown config keys {sorted(unknown)}")
    if "payoffs" not in doc:
        raise ConfigError(f"{path}: payoffs: required key is missing")
    try:
        params, game = _load_payoffs(path, doc["payoffs"])
    except ConstraintViolation as exc:
        raise _fail(path, "payoffs", str(exc)) from exc
    try:
        state, form, preset, family = _load_state(path, doc.get("initial_state", "OO"))
    except ConstraintViolation as exc:
        raise _fail(path, "initial_state", str(exc)) from exc
    labels_a, labels_b = _load_labels(path, doc.get("labels"), game.shape)
    return LoadedConfig(
        path=path,
        params=params,
        game=game,
        labels_a=labels_a,
        labels_b=labels_b,
        state=state,
        state_form=form,
        preset_name=preset,
        family=family,
    )


def _require_params(cfg: LoadedConfig, command: str) -> GamePayoffs:
    if cfg.params is None:
        raise _fail(
            cfg.path,
            "payoffs",
            f"the {command} command needs the {{alpha, beta, gamma}} payoff form",
        )
    return cfg.params


# ---------------------------------------------------------------------------
# exact fraction display for the closed-form equilibria


def _integer_params(params: GamePayoffs) -> tuple[int, int, int] | None:
    vals = (params.alpha, params.beta, params.gamma)
    if all(float(v).is_integer() for v in vals):
        return tuple(int(v) for v in vals)  # type: ignore[return-value]
    return None


def _simple_fraction(x: float, max_denominator: int = 10**6) -> Fraction | None:
    """Shortest fraction that rounds back to exactly this float, if small."""
    if not math.isfinite(x):
        return None
    frac = Fraction(x).limit_denominator(max_denominator)
    return frac if float(frac) == x else None


ExactRow = tuple[Fraction, Fraction, Fraction, Fraction]


def _classical_exact_rows(params: GamePayoffs) -> list[ExactRow] | None:
    ints = _integer_params(params)
    if ints is None:
        return None
    ia, ib, ig = ints
    spread = ia + ib - 2 * ig
    shared = Fraction(ia * ib - ig * ig, spread)
    return [
        (Fraction(1), Fraction(1), Fraction(ia), Fraction(ib)),
        (Fraction(0), Fraction(0), Fraction(ib), Fraction(ia)),
        (Fraction(ia - ig, spread), Fraction(ib - ig, spread), shared, shared),
    ]


def _entangled_exact_rows(
    params: GamePayoffs, family: EntangledFamilyState
) -> list[ExactRow] | None:
    ints = _integer_params(params)
    a2 = _simple_fraction(family.a2)
    if ints is None or a2 is None:
        return None
    ia, ib, ig = ints
    b2 = 1 - a2
    spread = ia + ib - 2 * ig
    keep_a = ia * a2 + ib * b2
    keep_b = ib * a2 + ia * b2
    p_star = ((ia - ig) * a2 + (ib - ig) * b2) / spread
    q_star = ((ia - ig) * b2 + (ib - ig) * a2) / spread
    shared = (ia * ib + (ia - ib) ** 2 * a2 * b2 - ig * ig) / spread
    return [
        (Fraction(1), Fraction(1), keep_a, keep_b),
        (Fraction(0), Fraction(0), keep_b, keep_a),
        (p_star, q_star, shared, shared),
    ]


# ---------------------------------------------------------------------------
# report assembly


@dataclass
class Report:
    payload: dict
    csv_header: list[str]
    csv_rows: list[list]
    table: str


def _amp_pairs(state: StateVector) -> list[list[float]]:
    return [[float(a.real), float(a.imag)] for a in state.amplitudes]


def _game_json(cfg: LoadedConfig) -> dict:
    if cfg.params is not None:
        return {
            "alpha": cfg.params.alpha,
            "beta": cfg.params.beta,
            "gamma": cfg.params.gamma,
        }
    return {
        "payoff_a": cfg.game.payoff_a.tolist(),
        "payoff_b": cfg.game.payoff_b.tolist(),
    }


def _state_json(cfg: LoadedConfig) -> dict:
    return {
        "form": cfg.state_form,
        "name": cfg.preset_name,
        "amplitudes": _amp_pairs(cfg.state),
        "family_a2": cfg.family.a2 if cfg.family is not None else None,
    }


def _eq_row(
    point: NashPoint,
    exact: ExactRow | None = None,
    final_state: StateVector | None = None,
) -> dict:
    row = {
        "kind": point.kind.value,
        "p": point.p_star,
        "q": point.q_star,
        "payoff_a": point.payoff_a,
        "payoff_b": point.payoff_b,
        "p_exact": str(exact[0]) if exact else None,
        "q_exact": str(exact[1]) if exact else None,
        "payoff_a_exact": str(exact[2]) if exact else None,
        "payoff_b_exact": str(exact[3]) if exact else None,
    }
    if final_state is not None:
        row["final_state"] = _amp_pairs(final_state)
    return row


EQ_CSV_HEADER = [
    "kind",
    "p",
    "q",
    "payoff_a",
    "payoff_b",
    "p_exact",
    "q_exact",
    "payoff_a_exact",
    "payoff_b_exact",
]


def _eq_csv_rows(rows: list[dict]) -> list[list]:
    return [[row[key] for key in EQ_CSV_HEADER] for row in rows]


def _ranking_json(
    ranking: EquilibriumRanking, original: Sequence[NashPoint]
) -> dict:
    order = [list(original).index(point) for point in ranking.ordered]
    return {
        "order": order,
        "gaps": [
            {
                "better": gap.better,
                "worse": gap.worse,
                "delta_a": gap.delta_a,
                "delta_b": gap.delta_b,
            }
            for gap in ranking.gaps
        ],
    }


def _corner_json(point: NashPoint | None) -> dict | None:
    if point is None:
        return None
    return {"p": point.p_star, "q": point.q_star}


def _unique_json(report: UniqueSolutionReport | None) -> dict | None:
    if report is None:
        return None
    out = {
        "merged": report.merged,
        "payoff_difference_a": report.payoff_difference_a,
        "payoff_difference_b": report.payoff_difference_b,
    }
    if report.merged:
        out["payoff_a"], out["payoff_b"] = report.solution_payoffs
        out["final_state"] = _amp_pairs(report.final_state)
    else:
        out["preferred_by_a"] = _corner_json(report.preferred_by_a)
        out["preferred_by_b"] = _corner_json(report.preferred_by_b)
    return out


# ---------------------------------------------------------------------------
# formatting helpers


def _fnum(x: float) -> str:
    return f"{x:.6g}"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return _fnum(value)
    return str(value)


def _table_block(header: list[str], rows: list[list]) -> list[str]:
    cells = [header] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return ["  ".join(r[i].ljust(widths[i]) for i in range(len(header))).rstrip()
            for r in cells]


def _value_with_exact(value: float, exact: str | None) -> str:
    return f"{_fnum(value)} ({exact})" if exact else _fnum(value)


def _eq_table_lines(rows: list[dict]) -> list[str]:
    header = ["kind", "p", "q", "payoff A", "payoff B"]
    body = [
        [
            row["kind"],
            _value_with_exact(row["p"], row["p_exact"]),
            _value_with_exact(row["q"], row["q_exact"]),
            _value_with_exact(row["payoff_a"], row["payoff_a_exact"]),
            _value_with_exact(row["payoff_b"], row["payoff_b_exact"]),
        ]
        for row in rows
    ]
    return _table_block(header, body)


def _state_table_line(state: StateVector) -> str:
    terms = []
    for amp, label in zip(state.amplitudes, BASIS_LABELS):
        if abs(amp) <= 1e-12:
            continue
        if abs(amp.imag) <= 1e-12:
            coeff = _fnum(amp.real)
        else:
            coeff = f"({_fnum(amp.real)}{amp.imag:+.6g}i)"
        terms.append(f"{coeff}|{label}>")
    return " + ".join(terms) if terms else "0"


def _game_table_lines(cfg: LoadedConfig) -> list[str]:
    if cfg.params is not None:
        p = cfg.params
        return [f"game: alpha={_fnum(p.alpha)} beta={_fnum(p.beta)} gamma={_fnum(p.gamma)}"]
    lines = ["game: explicit bimatrix"]
    for i in range(cfg.game.shape[0]):
        row = "  ".join(
            f"({_fnum(cfg.game.payoff_a[i, j])},{_fnum(cfg.game.payoff_b[i, j])})"
            for j in range(cfg.game.shape[1])
        )
        lines.append(f"  {cfg.labels_a[i]}: {row}")
    return lines


def _ranking_table_lines(ranking: EquilibriumRanking) -> list[str]:
    lines = ["ranking (best first):"]
    for rank, point in enumerate(ranking.ordered, start=1):
        lines.append(
            f"  {rank}. ({_fnum(point.p_star)}, {_fnum(point.q_star)})"
            f"  payoffs A={_fnum(point.payoff_a)} B={_fnum(point.payoff_b)}"
            f"  [{point.kind.value}]"
        )
    return lines


# ---------------------------------------------------------------------------
# commands


def cmd_classical(cfg: LoadedConfig, args: argparse.Namespace) -> Report:
    notices: list[str] = []
    elimination = eliminate_strictly_dominated(cfg.game)
    pure = pure_nash(cfg.game)

    if cfg.params is not None:
        points = list(classical_mixed_equilibria(cfg.params))
        exact_rows = _classical_exact_rows(cfg.params)
    elif cfg.game.is_2x2:
        points = list(
            enumerate_bilinear_nash(
                BilinearPayoff.from_payoff_matrix(cfg.game.payoff_a),
                BilinearPayoff.from_payoff_matrix(cfg.game.payoff_b),
            )
        )
        exact_rows = None
        notices.append("mixed equilibria computed by generic bilinear enumeration")
    else:
        points = []
        exact_rows = None
        notices.append(
            "mixed-strategy enumeration covers 2x2 games only; "
            "reporting elimination and pure equilibria"
        )

    eq_rows = [
        _eq_row(point, exact_rows[i] if exact_rows else None)
        for i, point in enumerate(points)
    ]
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "classical",
        "game": _game_json(cfg),
        "labels": {"a": list(cfg.labels_a), "b": list(cfg.labels_b)},
        "elimination": {
            "survivors_a": list(elimination.survivors_a),
            "survivors_b": list(elimination.survivors_b),
            "steps": [
                {
                    "player": "A" if step.player == 0 else "B",
                    "removed": step.removed,
                    "removed_label": (cfg.labels_a if step.player == 0 else cfg.labels_b)[
                        step.removed
                    ],
                    "dominated_by": step.dominated_by,
                    "dominated_by_label": (
                        cfg.labels_a if step.player == 0 else cfg.labels_b
                    )[step.dominated_by],
                }
                for step in elimination.steps
            ],
        },
        "pure_equilibria": [
            {
                "row": i,
                "col": j,
                "label_a": cfg.labels_a[i],
                "label_b": cfg.labels_b[j],
                "payoff_a": float(cfg.game.payoff_a[i, j]),
                "payoff_b": float(cfg.game.payoff_b[i, j]),
            }
            for i, j in pure
        ],
        "mixed_equilibria": eq_rows,
        "notices": notices,
    }

    lines = _game_table_lines(cfg)
    lines.append("")
    lines.append("iterated elimination of strictly dominated strategies:")
    if elimination.steps:
        for step in payload["elimination"]["steps"]:
            lines.append(
                f"  player {step['player']}: {step['removed_label']} removed "
                f"(strictly dominated by {step['dominated_by_label']})"
            )
    else:
        lines.append("  nothing eliminated")
    lines.append(
        "  survivors: A: "
        + ", ".join(cfg.labels_a[i] for i in elimination.survivors_a)
        + " | B: "
        + ", ".join(cfg.labels_b[j] for j in elimination.survivors_b)
    )
    lines.append("")
    lines.append("pure Nash equilibria:")
    if pure:
        for i, j in pure:
            lines.append(
                f"  ({cfg.labels_a[i]}, {cfg.labels_b[j]})  payoffs "
                f"A={_fnum(float(cfg.game.payoff_a[i, j]))} "
                f"B={_fnum(float(cfg.game.payoff_b[i, j]))}"
            )
    else:
        lines.append("  none")
    lines.append("")
    lines.append("mixed Nash equilibria:")
    if eq_rows:
        lines.extend("  " + line for line in _eq_table_lines(eq_rows))
    else:
        lines.append("  not computed")
    for notice in notices:
        lines.append(f"note: {notice}")

    return Report(payload, EQ_CSV_HEADER, _eq_csv_rows(eq_rows), "\n".join(lines) + "\n")


def cmd_quantum(cfg: LoadedConfig, args: argparse.Namespace) -> Report:
    params = _require_params(cfg, "quantum")
    notices: list[str] = []
    unique: UniqueSolutionReport | None = None
    final_states: list[StateVector | None]

    if args.mode == "factorizable":
        solutions = factorizable_equilibria(params)
        points = [sol.point for sol in solutions]
        final_states = [sol.final_state for sol in solutions]
        exact_rows = _classical_exact_rows(params)
        notices.append(
            "independent-tactic equilibria do not depend on the configured "
            "initial state; coordinates are squared tactic moduli"
        )
    elif cfg.family is not None:
        points = list(entangled_equilibria(params, cfg.family))
        final_states = [None] * len(points)
        exact_rows = _entangled_exact_rows(params, cfg.family)
        unique = unique_solution(params, cfg.family)
    else:
        pa, pb = payoff_operators(params)
        bp_a, bp_b = bilinear_payoff_coefficients(cfg.state.density_matrix(), pa, pb)
        points = list(enumerate_bilinear_nash(bp_a, bp_b))
        final_states = [None] * len(points)
        exact_rows = None
        notices.append(
            "initial state is outside the |OO>/|TT> superposition family; "
            "equilibria computed by generic bilinear enumeration"
        )

    ranking = rank_equilibria(points)
    eq_rows = [
        _eq_row(
            point,
            exact_rows[i] if exact_rows else None,
            final_states[i] if args.mode == "factorizable" else None,
        )
        for i, point in enumerate(points)
    ]
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "quantum",
        "mode": args.mode,
        "game": _game_json(cfg),
        "initial_state": _state_json(cfg),
        "equilibria": eq_rows,
        "ranking": _ranking_json(ranking, points),
        "unique_solution": _unique_json(unique),
        "notices": notices,
    }

    lines = _game_table_lines(cfg)
    lines.append(f"mode: {args.mode}")
    if args.mode != "factorizable":
        lines.append(f"initial state: {_state_table_line(cfg.state)}")
    lines.append("")
    lines.append("equilibria:")
    lines.extend("  " + line for line in _eq_table_lines(eq_rows))
    if args.mode == "factorizable":
        lines.append("")
        lines.append("final states:")
        for point, state in zip(points, final_states):
            lines.append(
                f"  ({_fnum(point.p_star)}, {_fnum(point.q_star)}): "
                f"{_state_table_line(state)}"
            )
    lines.append("")
    lines.extend(_ranking_table_lines(ranking))
    if args.mode == "entangled":
        lines.append("")
        if unique is None:
            lines.append("unique solution: not applicable outside the superposition family")
        elif unique.merged:
            pay_a, pay_b = unique.solution_payoffs
            lines.append(
                "unique solution: corner equilibria (1,1) and (0,0) merge; "
                f"payoffs A={_fnum(pay_a)} B={_fnum(pay_b)}"
            )
            lines.append(f"  shared final state: {_state_table_line(unique.final_state)}")
        else:
            pref_a = unique.preferred_by_a
            pref_b = unique.preferred_by_b
            lines.append(
                "no unique solution: "
                f"A prefers ({_fnum(pref_a.p_star)}, {_fnum(pref_a.q_star)}), "
                f"B prefers ({_fnum(pref_b.p_star)}, {_fnum(pref_b.q_star)}); "
                f"corner payoff differences A={_fnum(unique.payoff_difference_a)} "
                f"B={_fnum(unique.payoff_difference_b)}"
            )
    for notice in notices:
        lines.append(f"note: {notice}")

    return Report(payload, EQ_CSV_HEADER, _eq_csv_rows(eq_rows), "\n".join(lines) + "\n")


def cmd_simulate(cfg: LoadedConfig, args: argparse.Namespace) -> Report:
    params = _require_params(cfg, "simulate")
    try:
        config = SimulationConfig(
            rounds=args.rounds,
            seed=args.seed,
            mix=MixingChoice(args.p, args.q),
            initial=cfg.state.density_matrix(),
            payoffs=params,
        )
    except ConstraintViolation as exc:
        raise ConfigError(f"simulate: {exc}") from exc
    report = simulate(config)
    probs = outcome_distribution(config)
    pa, pb = payoff_operators(params)
    analytic = trace_payoffs(pa, pb, mixed_final_density(config.initial, config.mix))

    payload = {
        "schema": SCHEMA_VERSION,
        "command": "simulate",
        "game": _game_json(cfg),
        "initial_state": _state_json(cfg),
        "mix": {"p": args.p, "q": args.q},
        "rounds": args.rounds,
        "seed": args.seed,
        "outcome_probabilities": [float(x) for x in probs],
        "counts": dict(zip(BASIS_LABELS, report.counts)),
        "empirical": {
            "mean_payoff_a": report.mean_payoff_a,
            "mean_payoff_b": report.mean_payoff_b,
            "std_error_a": report.std_error_a,
            "std_error_b": report.std_error_b,
        },
        "analytic": {"payoff_a": analytic[0], "payoff_b": analytic[1]},
        "notices": [],
    }

    header = [
        "rounds",
        "seed",
        "p",
        "q",
        "count_oo",
        "count_ot",
        "count_to",
        "count_tt",
        "mean_payoff_a",
        "mean_payoff_b",
        "std_error_a",
        "std_error_b",
        "analytic_payoff_a",
        "analytic_payoff_b",
    ]
    row = [
        args.rounds,
        args.seed,
        args.p,
        args.q,
        *report.counts,
        report.mean_payoff_a,
        report.mean_payoff_b,
        report.std_error_a,
        report.std_error_b,
        analytic[0],
        analytic[1],
    ]

    lines = _game_table_lines(cfg)
    lines.append(f"initial state: {_state_table_line(cfg.state)}")
    lines.append(
        f"rounds={args.rounds} seed={args.seed} p={_fnum(args.p)} q={_fnum(args.q)}"
    )
    lines.append("")
    lines.append(
        "outcome counts: "
        + "  ".join(f"{label}={c}" for label, c in zip(BASIS_LABELS, report.counts))
    )
    lines.append(
        f"empirical payoffs: A={_fnum(report.mean_payoff_a)} "
        f"+/- {_fnum(report.std_error_a)}  B={_fnum(report.mean_payoff_b)} "
        f"+/- {_fnum(report.std_error_b)}"
    )
    lines.append(
        f"analytic payoffs:  A={_fnum(analytic[0])}  B={_fnum(analytic[1])}"
    )

    return Report(payload, header, [row], "\n".join(lines) + "\n")


def cmd_sweep(cfg: LoadedConfig, args: argparse.Namespace) -> Report:
    params = _require_params(cfg, "sweep")
    if args.steps < 2:
        raise ConfigError(f"sweep: steps must be at least 2, got {args.steps}")
    values = np.linspace(0.0, 1.0, args.steps)
    rows: list[dict] = []
    fixed: dict[str, float] = {}

    if args.param == "a2":
        header = [
            "a2",
            "corner_11_payoff_a",
            "corner_11_payoff_b",
            "corner_00_payoff_a",
            "corner_00_payoff_b",
            "interior_p",
            "interior_q",
            "interior_payoff",
        ]
        for value in values:
            keep, flip, interior = entangled_equilibria(
                params, EntangledFamilyState(float(value))
            )
            rows.append(
                {
                    "a2": float(value),
                    "corner_11_payoff_a": keep.payoff_a,
                    "corner_11_payoff_b": keep.payoff_b,
                    "corner_00_payoff_a": flip.payoff_a,
                    "corner_00_payoff_b": flip.payoff_b,
                    "interior_p": interior.p_star,
                    "interior_q": interior.q_star,
                    "interior_payoff": interior.payoff_a,
                }
            )
    else:
        header = ["p", "q", "payoff_a", "payoff_b"]
        rho_in = cfg.state.density_matrix()
        pa, pb = payoff_operators(params)
        fixed = {"q": args.q} if args.param == "p" else {"p": args.p}
        for value in values:
            p = float(value) if args.param == "p" else args.p
            q = float(value) if args.param == "q" else args.q
            pay = trace_payoffs(pa, pb, mixed_final_density(rho_in, MixingChoice(p, q)))
            rows.append({"p": p, "q": q, "payoff_a": pay[0], "payoff_b": pay[1]})

    payload = {
        "schema": SCHEMA_VERSION,
        "command": "sweep",
        "game": _game_json(cfg),
        "parameter": args.param,
        "steps": args.steps,
        "rows": rows,
        "notices": [],
    }
    if fixed:
        payload["fixed"] = fixed
    if args.param == "a2":
        payload["notices"].append(
            "a2 sweep analyses the |OO>/|TT> superposition family directly; "
            "the configured initial state is not used"
        )

    lines = _game_table_lines(cfg)
    lines.append(f"sweep over {args.param}, {args.steps} steps")
    if fixed:
        name, value = next(iter(fixed.items()))
        lines.append(f"fixed {name}={_fnum(value)}")
    lines.append("")
    lines.extend(_table_block(header, [[row[k] for k in header] for row in rows]))
    for notice in payload["notices"]:
        lines.append(f"note: {notice}")

    return Report(payload, header, [[row[k] for k in header] for row in rows],
                  "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# rendering and entry point


def _round_floats(obj: Any) -> Any:
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {key: _round_floats(value) for key, value in obj.items()}
    if isinstance(obj, list):
        return [_round_floats(value) for value in obj]
    return obj


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_round_floats(report.payload), indent=2) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(report.csv_header)
        for row in report.csv_rows:
            writer.writerow(
                [
                    ""
                    if value is None
                    else (f"{value:.12g}" if isinstance(value, float) else value)
                    for value in row
                ]
            )
        return buffer.getvalue()
    return report.table


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qstatic",
        description="Classical and quantum-extended analysis of two-player static games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", required=True, help="path to the JSON game config")
        p.add_argument(
            "--format",
            choices=("table", "json", "csv"),
            default="table",
            help="output format (default: table)",
        )

    common(sub.add_parser("classical", help="elimination, pure and mixed equilibria"))

    quantum = sub.add_parser("quantum", help="quantum strategy-space equilibria")
    common(quantum)
    quantum.add_argument(
        "--mode",
        choices=("factorizable", "entangled"),
        default="entangled",
        help="independent local tactics or the entangled family (default: entangled)",
    )

    sim = sub.add_parser("simulate", help="seeded measurement-collapse simulation")
    common(sim)
    sim.add_argument("--rounds", type=int, default=10000, help="number of rounds")
    sim.add_argument("--seed", type=int, default=0, help="generator seed")
    sim.add_argument("--p", type=float, default=0.5, help="row player keep probability")
    sim.add_argument("--q", type=float, default=0.5, help="column player keep probability")

    sweep = sub.add_parser("sweep", help="tabulate along one parameter")
    common(sweep)
    sweep.add_argument(
        "--param", choices=("a2", "p", "q"), default="a2", help="parameter to sweep"
    )
    sweep.add_argument("--steps", type=int, default=11, help="number of grid points")
    sweep.add_argument(
        "--p", type=float, default=0.5, help="fixed p for a q sweep (default 0.5)"
    )
    sweep.add_argument(
        "--q", type=float, default=0.5, help="fixed q for a p sweep (default 0.5)"
    )
    return parser


_COMMANDS = {
    "classical": cmd_classical,
    "quantum": cmd_quantum,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        report = _COMMANDS[args.command](cfg, args)
    except (ConfigError, ConstraintViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render(report, args.format))
    return 0
