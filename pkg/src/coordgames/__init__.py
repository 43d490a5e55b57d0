"""Equilibria of coordination games on weighted directed graphs."""

__version__ = "0.1.0"
