"""Hilbert-Samuel and Sally-module invariants of m-primary ideals."""

__version__ = "0.1.0"
