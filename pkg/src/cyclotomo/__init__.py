"""Discrete tomography of convex subsets of cyclotomic model sets."""

__version__ = "0.1.0"
