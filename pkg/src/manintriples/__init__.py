"""Exact construction and verification of Manin triples for simple Lie algebras."""

from .exactlin import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
