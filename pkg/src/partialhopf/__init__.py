"""Partial actions of finite-dimensional weak Hopf algebras, computed exactly over Q."""
__version__ = "0.1.0"
