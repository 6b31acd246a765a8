"""Exact computations with hypersurface-algebroid structures.

Thin wrapper over the compiled extension; everything heavy lives in C++.
"""

import json as _json

from _hsalg import (
    cat_report,
    cohomology_dims,
    extension_class_str,
    intro_bracket_jacobi,
    intro_bracket_rank_order,
    jet_compose,
    jet_invert,
    mapping_torus_dims,
    mc_check,
    model_json,
    registry_names,
    run_cli,
    universal_bivector,
    universal_symplectic_report,
    validate_model,
)

__all__ = [
    "cat_report",
    "cohomology_dims",
    "extension_class_str",
    "intro_bracket_jacobi",
    "intro_bracket_rank_order",
    "jet_compose",
    "jet_invert",
    "mapping_torus_dims",
    "mc_check",
    "model",
    "model_json",
    "registry_names",
    "run",
    "run_cli",
    "universal_bivector",
    "universal_symplectic_report",
    "validate_model",
]


def run(*args):
    """Run a CLI invocation and return the decoded JSON body.

    Raises RuntimeError when the command exits nonzero.
    """
    code, body = run_cli([str(a) for a in args])
    decoded = _json.loads(body)
    if code != 0:
        raise RuntimeError(f"command failed with exit code {code}: {decoded.get('error', body)}")
    return decoded


def model(name):
    """Decoded JSON document of a builtin model."""
    return _json.loads(model_json(name))
