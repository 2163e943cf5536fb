"""Handlers."""

from syzygy.application.handlers.algebra_handler import AlgebraHandler
from syzygy.application.handlers.curve_handler import CurveHandler, run_recipe
from syzygy.application.handlers.invariant_handler import InvariantHandler

__all__ = [
    "AlgebraHandler",
    "InvariantHandler",
    "CurveHandler",
    "run_recipe",
]
