"""Exact five-vertex partition functions with boxed plane partition boundaries."""

__version__ = "0.1.0"
