"""Python bindings for the LTL to co-Büchi chain translator."""

from ._core import (
    Chain,
    CocoaError,
    ResourceLimitError,
    eval_lasso,
    lower_bound_family,
    to_nnf,
    translate,
)

__all__ = [
    "Chain",
    "CocoaError",
    "ResourceLimitError",
    "eval_lasso",
    "lower_bound_family",
    "to_nnf",
    "translate",
]
