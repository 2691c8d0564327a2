"""
Explicit Weil representation of Sp_2n(p) over Q(zeta_p) for small n and p, its split into odd
and even functions, and exact checks on the result.
"""
