"""Helix Lab - Numerical verification of helix submanifold and offset geometry formulae."""

__version__ = "0.1.0"
