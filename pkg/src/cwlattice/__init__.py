"""Constant weight codes built from uniquely decomposable lattice elements.

Modules: field/polynomial arithmetic (gf), constituent pools with
compose/decompose (pool), finite lattice analysis (lattice), constant
weight codes and decoding (code), size bounds (bounds), clique-based
code search (cliques), a store-and-forward network simulator (saf) and
the command line entry point (cli).
"""

from cwlattice.gf import PrimeField, Polynomial, is_irreducible, is_prime, next_prime

__all__ = [
    "PrimeField",
    "Polynomial",
    "is_irreducible",
    "is_prime",
    "next_prime",
]
