"""Exact construction of graded Lie algebras from standard pentads."""

__version__ = "0.1.0"
