"""Desk-scale verification toolkit for endomorphism rings of superelliptic jacobians y^p = f(x)."""

__version__ = "0.1.0"
