"""Exact arithmetic for GL2 over polynomial rings and its automorphisms."""

__version__ = "0.1.0"
