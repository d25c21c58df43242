"""Odd graceful colourings: verification, constructions, bounds and exact search."""

__version__ = "0.1.0"
