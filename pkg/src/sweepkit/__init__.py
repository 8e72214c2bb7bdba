"""Pathwidth, vertex separation and edge searching on graphs and Cartesian products."""

__version__ = "0.1.0"
