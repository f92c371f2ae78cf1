"""Exact rational linear algebra for Gushel-Mukai data, Lagrangian data,
EPW stratifications, and quadric fibration corank analysis."""

__version__ = "0.1.0"
