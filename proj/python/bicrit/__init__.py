"""Bicriteria approximation through weighted-sum oracles.

Rational inputs may be given as ``int``, ``fractions.Fraction`` or ``"p/q"``
strings; rational outputs are ``fractions.Fraction``.
"""

from ._bicrit import (
    BicritError,
    CapExceeded,
    ExactOracleRequired,
    Instance,
    NotParametricCapable,
    ParseError,
    ValidationError,
    approximate_pareto,
    enumerate_all,
    exact_opt_budget,
    exact_pareto,
    extended_pareto,
    load,
    loads,
    pareto_from_parametric,
    reproduce_example1,
    reproduce_example2,
    solve_budget,
)

__all__ = [
    "BicritError",
    "CapExceeded",
    "ExactOracleRequired",
    "Instance",
    "NotParametricCapable",
    "ParseError",
    "ValidationError",
    "approximate_pareto",
    "enumerate_all",
    "exact_opt_budget",
    "exact_pareto",
    "extended_pareto",
    "load",
    "loads",
    "pareto_from_parametric",
    "reproduce_example1",
    "reproduce_example2",
    "solve_budget",
]
