"""Operator means, the natural operation and related entropies.

Matrices are passed as 2-D float arrays; inputs are symmetrized. Report
functions return plain dicts decoded from the library's JSON reports.
"""

import json as _json

from ._opmeans import (
    DimensionError,
    Error,
    HypothesisNotMet,
    NotPositiveDefinite,
    NumericalFailure,
    ParameterError,
    ParseError,
    arithmetic_mean,
    claim_names,
    eig_sym,
    geometric_mean,
    harmonic_mean,
    heinz,
    kantorovich,
    kappa,
    ln_t,
    m_hat,
    natural,
    quasi_relative_entropy,
    quasi_tsallis,
    random_spd,
    sqrt_product,
    tsallis,
)
from . import _opmeans

__version__ = "0.1.0"


def check(claim, a, b, c=None, x=None, t_grid=None, seed=0, rel_tol=1e-8):
    """Evaluates one catalog claim on the given matrices."""
    return _json.loads(_opmeans._check_json(claim, a, b, c, x, t_grid, seed, rel_tol))


def falsify(claim, trials=1000, dim=2, dim_max=8, seed=0, cond_max=1e3, reference_inputs_first=False):
    """Seeded counterexample search; stops at the first violating sample."""
    return _json.loads(
        _opmeans._falsify_json(claim, trials, dim, dim_max, seed, cond_max, reference_inputs_first)
    )


def run_suite(trials=200, dim_min=2, dim_max=8, cond_max=1e3, seed=0, rel_tol=1e-8, falsify_trials=1000):
    """Full verification suite; the same arguments give the same report."""
    return _json.loads(
        _opmeans._suite_json(trials, dim_min, dim_max, cond_max, seed, rel_tol, falsify_trials)
    )


def reference_examples():
    """Recomputed reference numbers with their expected values."""
    return _json.loads(_opmeans._examples_json())
