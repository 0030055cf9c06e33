"""Exact partially ordered rings, localizations and extended Gelfand transforms."""

__version__ = "0.1.0"
