"""Syzygy workbench - Betti tables of canonical genus-9 curves over exact fields."""

__version__ = "0.4.0"
__author__ = "Syzygy Workbench Team"
