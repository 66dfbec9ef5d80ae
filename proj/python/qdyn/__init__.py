"""Exact dynamics of left polynomials over quaternion and octonion algebras."""

import json

from ._qdyn import (
    Algebra,
    MathError,
    OctPoly,
    Octonion,
    ParseError,
    QuatPoly,
    Quaternion,
    companion,
    fixed_points,
    octonion_fixed_check,
    roots,
    run,
)

__all__ = [
    "Algebra",
    "MathError",
    "OctPoly",
    "Octonion",
    "ParseError",
    "QuatPoly",
    "Quaternion",
    "cli",
    "companion",
    "fixed_points",
    "octonion_fixed_check",
    "roots",
    "run",
]


def cli(*args):
    """Run a CLI command and return (exit_code, parsed JSON)."""
    code, out, _ = run([str(a) for a in args])
    return code, json.loads(out)
