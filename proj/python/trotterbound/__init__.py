"""Trotter error bounds, empirical Trotter numbers and resource plans."""

import json

from . import _core
from ._core import (
    ContractError,
    GroupedHamiltonian,
    InputError,
    PauliSum,
    alpha_tilde,
    bound_trotter_number,
    comm_trotter_number,
    commutator,
    empirical_error,
    empirical_trotter_number,
    group_terms,
    heisenberg_chain,
    matchgate,
    nested_commutator,
    one_norm_bound,
    power_law_heisenberg,
    random_fields,
    stage_count,
    support,
    suzuki_u,
)

__all__ = [
    "ContractError", "GroupedHamiltonian", "InputError", "PauliSum", "alpha_tilde", "bound_trotter_number",
    "comm_trotter_number", "commutator", "empirical_error", "empirical_trotter_number", "ferromagnet_trotter_number",
    "fourth_order_bound", "group_terms", "heisenberg_chain", "light_cone_plan", "matchgate", "nested_commutator",
    "one_norm_bound", "plan", "power_law_heisenberg", "random_fields", "stage_count", "support", "suzuki_u",
    "tfim_trotter_number",
]


def fourth_order_bound(h, t=1.0, mode="cluster"):
    return json.loads(_core.fourth_order_bound(h, t, mode))


def tfim_trotter_number(a, b, t, eps):
    return json.loads(_core.tfim_trotter_number(a, b, t, eps))


def ferromagnet_trotter_number(n, beta, eps, c=1.0):
    return json.loads(_core.ferromagnet_trotter_number(n, beta, eps, c))


def plan(model, **params):
    return json.loads(_core.plan(model, params))


def light_cone_plan(alpha, d, p, t, eps, x0=0.0):
    return json.loads(_core.light_cone_plan(alpha, d, p, t, eps, x0))
