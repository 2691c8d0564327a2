"""
Root systems in Bourbaki labelling: Cartan data, Weyl group action on weights in the
fundamental-weight basis, orbits and the auxiliary functions used by the classifier.
"""
