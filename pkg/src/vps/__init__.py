"""Exact computations with polar simplices and apolar schemes of quadrics."""

__version__ = "0.1.0"
