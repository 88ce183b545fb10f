"""Exact computer algebra for Hopf algebras in braided graded categories."""

__version__ = "0.1.0"
