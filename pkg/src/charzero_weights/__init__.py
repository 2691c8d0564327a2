"""
Characteristic-zero weight systems: dominant weights, Freudenthal multiplicities and the
Weyl dimension formula, all in exact integer/rational arithmetic.
"""
