"""Cluster variables on the double Bruhat cell G^{e,c^2} of SL(r+1) and their
Demazure-crystal decompositions."""

__version__ = "0.1.0"
