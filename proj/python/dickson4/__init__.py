"""Reversed Dickson polynomials of the fourth kind over finite fields."""

from ._core import (
    Error,
    Field,
    InternalInconsistency,
    aux_coefficients,
    coefficients,
    evaluate,
    evaluate_closed,
    first_moment,
    moment_divergences,
    moment_table,
    pp_report,
    pp_scan,
    run_cli,
    verify,
)

__all__ = [
    "Error",
    "Field",
    "InternalInconsistency",
    "aux_coefficients",
    "coefficients",
    "evaluate",
    "evaluate_closed",
    "first_moment",
    "moment_divergences",
    "moment_table",
    "pp_report",
    "pp_scan",
    "run_cli",
    "verify",
]
