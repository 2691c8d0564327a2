"""
Decides whether an irreducible rational module of a simple algebraic group in characteristic p
has all weight multiplicities equal to 1, from the p-adic layers of its highest weight.
"""
