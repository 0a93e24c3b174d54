"""Expected density of random minimizers.

Exact quantities are returned as ``fractions.Fraction`` (or ``int``);
sampled quantities as dictionaries with ``mean`` and ``std_error``.
"""

import json as _json

from ._randmin import (
    CapExceeded,
    InvalidParams,
    average_over_all_orders,
    bigw_upper_bound,
    bigw_window,
    closed_form_density,
    delta,
    deviation,
    exact_density,
    find_crossing,
    find_major_run,
    gamechanger_probability,
    mc_density,
    prim,
    suite_names,
)
from ._randmin import verify_json as _verify_json

__all__ = [
    "CapExceeded",
    "InvalidParams",
    "average_over_all_orders",
    "bigw_upper_bound",
    "bigw_window",
    "closed_form_density",
    "delta",
    "density_factor",
    "deviation",
    "exact_density",
    "find_crossing",
    "find_major_run",
    "gamechanger_probability",
    "mc_density",
    "prim",
    "suite_names",
    "verify",
]


def density_factor(sigma, k, w):
    """(w+1) times the exact density, from the closed form."""
    return (w + 1) * closed_form_density(sigma, k, w)


def verify(suite, **options):
    """Run a property suite and return its report as a dictionary."""
    return _json.loads(_verify_json(suite, **options))
