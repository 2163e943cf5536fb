"""Presentation layer: text output for the command line."""
