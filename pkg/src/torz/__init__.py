"""A small dependent type theory kernel and a checked construction of the
circle as the type of Z-torsors."""

__version__ = "0.1.0"
