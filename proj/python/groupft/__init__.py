"""Operator-valued group Fourier transform: finite groups and the Heisenberg group."""

import json

from ._core import (
    FiniteGroup,
    GroupftError,
    HeisenbergConfig,
    HeisenbergGroup,
    builtin_group,
    cyclic,
    dihedral,
    direct_product,
    finite_heisenberg,
    hgroup_multiply,
    load_group,
    operator_norm,
    schatten_norm,
    singular_values,
)

__all__ = [
    "FiniteGroup",
    "GroupftError",
    "HeisenbergConfig",
    "HeisenbergGroup",
    "builtin_group",
    "cyclic",
    "dihedral",
    "difference_set",
    "direct_product",
    "finite_heisenberg",
    "hgroup_multiply",
    "load_group",
    "operator_norm",
    "run_suite",
    "schatten_norm",
    "singular_values",
    "validate",
]


def run_suite(group, suite="all", seed=1, trials=100, tol=None):
    """Run a verification suite; returns the report as a dict."""
    return json.loads(group.run_suite(suite, seed, trials, tol))


def validate(group):
    return json.loads(group.validate())


def difference_set(group, elements=None, box=None):
    """Difference-set report and density samples.

    Finite groups take a list of element indices, the Heisenberg group a box
    ((x0, y0, t0), (x1, y1, t1)).
    """
    if isinstance(group, HeisenbergGroup):
        if box is None:
            raise ValueError("the Heisenberg group needs box=(lo, hi)")
        doc, density = group.difference_box(*box)
    else:
        if elements is None:
            raise ValueError("a finite group needs elements=[...]")
        doc, density = group.difference_set(list(elements))
    return json.loads(doc), density
