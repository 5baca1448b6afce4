"""Exact spectral and combinatorial invariants of graphs, with executable
checks of the even-eigenvalue / spanning-tree theorems."""

__version__ = "0.1.0"
