"""Promotion of rectangular standard tableaux, rotation of planar webs, and
the cyclic sieving phenomenon that links them."""

__version__ = "0.1.0"
