"""Published JSON Schema for every report the CLI can emit.

Reports carry a top-level ``"schema": 1`` version field; consumers should
validate against REPORT_SCHEMA before relying on field layout.
"""

from __future__ import annotations

SCHEMA_VERSION = 1

_NUMBER_PAIR = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 2,
}

_AMPLITUDES = {
    "type": "array",
    "items": _NUMBER_PAIR,
    "minItems": 4,
    "maxItems": 4,
}

_MATRIX = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "minItems": 1, "items": {"type": "number"}},
}

_EXACT = {"type": ["string", "null"]}

_EQUILIBRIUM_ROW = {
    "type": "object",
    "required": ["kind", "p", "q", "payoff_a", "payoff_b"],
    "properties": {
        "kind": {"enum": ["corner", "interior", "degenerate-family"]},
        "p": {"type": "number"},
        "q": {"type": "number"},
        "payoff_a": {"type": "number"},
        "payoff_b": {"type": "number"},
        "p_exact": _EXACT,
        "q_exact": _EXACT,
        "payoff_a_exact": _EXACT,
        "payoff_b_exact": _EXACT,
        "final_state": _AMPLITUDES,
    },
    "additionalProperties": False,
}

_INITIAL_STATE = {
    "type": "object",
    "required": ["form", "amplitudes", "family_a2"],
    "properties": {
        "form": {"enum": ["preset", "family", "amplitudes"]},
        "name": {"type": ["string", "null"]},
        "amplitudes": _AMPLITUDES,
        "family_a2": {"type": ["number", "null"]},
    },
    "additionalProperties": False,
}

_RANKING = {
    "type": "object",
    "required": ["order", "gaps"],
    "properties": {
        "order": {"type": "array", "items": {"type": "integer"}},
        "gaps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["better", "worse", "delta_a", "delta_b"],
                "properties": {
                    "better": {"type": "integer"},
                    "worse": {"type": "integer"},
                    "delta_a": {"type": "number"},
                    "delta_b": {"type": "number"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

_UNIQUE_SOLUTION = {
    "type": ["object", "null"],
    "required": ["merged", "payoff_difference_a", "payoff_difference_b"],
    "properties": {
        "merged": {"type": "boolean"},
        "payoff_difference_a": {"type": "number"},
        "payoff_difference_b": {"type": "number"},
        "payoff_a": {"type": "number"},
        "payoff_b": {"type": "number"},
        "final_state": _AMPLITUDES,
        "preferred_by_a": {"type": ["object", "null"]},
        "preferred_by_b": {"type": ["object", "null"]},
    },
    "additionalProperties": False,
}

_GAME = {
    "oneOf": [
        {
            "type": "object",
            "required": ["alpha", "beta", "gamma"],
            "properties": {
                "alpha": {"type": "number"},
                "beta": {"type": "number"},
                "gamma": {"type": "number"},
            },
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["payoff_a", "payoff_b"],
            "properties": {"payoff_a": _MATRIX, "payoff_b": _MATRIX},
            "additionalProperties": False,
        },
    ]
}

_ELIMINATION = {
    "type": "object",
    "required": ["survivors_a", "survivors_b", "steps"],
    "properties": {
        "survivors_a": {"type": "array", "items": {"type": "integer"}},
        "survivors_b": {"type": "array", "items": {"type": "integer"}},
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["player", "removed", "dominated_by"],
                "properties": {
                    "player": {"enum": ["A", "B"]},
                    "removed": {"type": "integer"},
                    "removed_label": {"type": "string"},
                    "dominated_by": {"type": "integer"},
                    "dominated_by_label": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

_PURE_EQUILIBRIA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["row", "col", "payoff_a", "payoff_b"],
        "properties": {
            "row": {"type": "integer"},
            "col": {"type": "integer"},
            "label_a": {"type": "string"},
            "label_b": {"type": "string"},
            "payoff_a": {"type": "number"},
            "payoff_b": {"type": "number"},
        },
        "additionalProperties": False,
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "qstatic analysis report",
    "type": "object",
    "required": ["schema", "command", "game", "notices"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "command": {"enum": ["classical", "quantum", "simulate", "sweep"]},
        "game": _GAME,
        "notices": {"type": "array", "items": {"type": "string"}},
        "labels": {
            "type": "object",
            "properties": {
                "a": {"type": "array", "items": {"type": "string"}},
                "b": {"type": "array", "items": {"type": "string"}},
            },
        },
        "elimination": _ELIMINATION,
        "pure_equilibria": _PURE_EQUILIBRIA,
        "mixed_equilibria": {"type": "array", "items": _EQUILIBRIUM_ROW},
        "mode": {"enum": ["factorizable", "entangled"]},
        "initial_state": _INITIAL_STATE,
        "equilibria": {"type": "array", "items": _EQUILIBRIUM_ROW},
        "ranking": _RANKING,
        "unique_solution": _UNIQUE_SOLUTION,
        "mix": {
            "type": "object",
            "required": ["p", "q"],
            "properties": {"p": {"type": "number"}, "q": {"type": "number"}},
            "additionalProperties": False,
        },
        "rounds": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer", "minimum": 0},
        "outcome_probabilities": {
            "type": "array",
            "items": {"type": "number"},
            "minItems": 4,
            "maxItems": 4,
        },
        "counts": {
            "type": "object",
            "required": ["OO", "OT", "TO", "TT"],
            "properties": {
                "OO": {"type": "integer", "minimum": 0},
                "OT": {"type": "integer", "minimum": 0},
                "TO": {"type": "integer", "minimum": 0},
                "TT": {"type": "integer", "minimum": 0},
            },
            "additionalProperties": False,
        },
        "empirical": {
            "type": "object",
            "required": [
                "mean_payoff_a",
                "mean_payoff_b",
                "std_error_a",
                "std_error_b",
            ],
            "additionalProperties": {"type": "number"},
        },
        "analytic": {
            "type": "object",
            "required": ["payoff_a", "payoff_b"],
            "additionalProperties": {"type": "number"},
        },
        "parameter": {"enum": ["a2", "p", "q"]},
        "steps": {"type": "integer", "minimum": 2},
        "fixed": {"type": "object", "additionalProperties": {"type": "number"}},
        "rows": {
            "type": "array",
            "items": {"type": "object", "additionalProperties": {"type": "number"}},
        },
    },
    "allOf": [
        {
            "if": {"properties": {"command": {"const": "classical"}}},
            "then": {
                "required": ["elimination", "pure_equilibria", "mixed_equilibria"]
            },
        },
        {
            "if": {"properties": {"command": {"const": "quantum"}}},
            "then": {
                "required": [
                    "mode",
                    "initial_state",
                    "equilibria",
                    "ranking",
                    "unique_solution",
                ]
            },
        },
        {
            "if": {"properties": {"command": {"const": "simulate"}}},
            "then": {
                "required": [
                    "initial_state",
                    "mix",
                    "rounds",
                    "seed",
                    "outcome_probabilities",
                    "counts",
                    "empirical",
                    "analytic",
                ]
            },
        },
        {
            "if": {"properties": {"command": {"const": "sweep"}}},
            "then": {"required": ["parameter", "steps", "rows"]},
        },
    ],
    "additionalProperties": False,
}
