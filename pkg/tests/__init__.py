"""Syzygy workbench tests."""
