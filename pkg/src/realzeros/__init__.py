"""Exact real-zero tests for univariate polynomials.

The Hermite minors of a polynomial decide whether its zeros are real and
distinct. This package computes them exactly, builds the E(n) matrix whose
minors carry the same information in sum-of-squares form, and checks the
identities linking the two on small instances.
"""

from .exact import binomial, det_fraction_free, falling_factorial, leading_minors, to_exact
from .poly import MultiPoly
from .hermite import UniPoly, Verdict, RootVerdict, classify_real_roots, hermite_minors, newton_girard
from .ematrix import EBasisQuadratic, MSpec, delta_e, e_entry_via_M, m_in_e_basis, positive_root_checks
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "binomial", "det_fraction_free", "falling_factorial", "leading_minors", "to_exact",
    "MultiPoly", "UniPoly", "Verdict", "RootVerdict", "classify_real_roots", "hermite_minors",
    "newton_girard", "EBasisQuadratic", "MSpec", "delta_e", "e_entry_via_M", "m_in_e_basis",
    "positive_root_checks", "VerificationReport",
]
