"""Exact search and verification of rational triangle pairs (and triangle-parallelogram
pairs) that share area and perimeter, via upper-triangular affine maps."""

__version__ = "0.1.0"
