"""Exact checks of the Prym-Tyurin criterion on branched-covering constructions."""

import json

from ._core import (
    ConsistencyError,
    ValidationError,
    compose,
    cycle_type,
    discover_identity,
    exponent,
    grid_matrix,
    induced_subset_action,
    merged_fiber,
    orbit_fiber,
    orbits,
    ramification_degree,
    riemann_hurwitz_genus,
    subset_matrix,
    verify_identity,
)
from . import _core

__all__ = [
    "ConsistencyError",
    "ValidationError",
    "compose",
    "cycle_type",
    "discover_identity",
    "exponent",
    "grid_matrix",
    "hyperelliptic",
    "identity_report",
    "induced_subset_action",
    "merged_fiber",
    "orbit_fiber",
    "orbits",
    "pn_case",
    "ramification_degree",
    "riemann_hurwitz_genus",
    "run_scenario",
    "subset_matrix",
    "verify_identity",
]


def run_scenario(scenario, model=None):
    """Report for a scenario given as a dict or JSON text."""
    text = scenario if isinstance(scenario, str) else json.dumps(scenario)
    return json.loads(_core.run_scenario_json(text, model))


def pn_case(n, gx, model=None):
    return json.loads(_core.pn_case_json(n, gx, model))


def hyperelliptic(g, model=None):
    return json.loads(_core.hyperelliptic_json(g, model))


def identity_report(kind, parameter):
    return json.loads(_core.identity_report_json(kind, parameter))
