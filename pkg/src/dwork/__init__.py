"""Exact computations on the Dwork pencil of Calabi-Yau hypersurfaces."""

__version__ = "0.1.0"
