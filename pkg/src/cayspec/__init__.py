"""Exact spectra of p-singular Cayley graphs of finite groups."""

__version__ = "0.1.0"
