"""Combinatorics and enumerative invariants of Chow quotients of Grassmannians."""

__version__ = "0.1.0"
