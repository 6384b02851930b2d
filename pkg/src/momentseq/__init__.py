"""Exact and numerical tools for moment-sequence properties of Euler and Springer numbers."""

__version__ = "0.1.0"
