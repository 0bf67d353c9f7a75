"""Fundamental-group invariants and Galois covers of seminormal curves
in positive characteristic."""

__version__ = "0.1.0"
