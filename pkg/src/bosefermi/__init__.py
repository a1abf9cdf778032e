"""Exact verification of the boson-fermion correspondence, both the classical
operator form and its categorification by complexes of induction and
restriction bimodules over symmetric group and Clifford-symmetric towers."""

__version__ = "0.1.0"
