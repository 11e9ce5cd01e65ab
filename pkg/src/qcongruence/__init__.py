"""Exact verification of q-congruences and q-supercongruences.

Sparse Laurent polynomials in q, a, b, x with exact rational coefficients,
q-series builders, a congruence engine and a registry of verifiable
statements with a command-line sweep driver.
"""

from .congruence import (CyclotomicFactor, Modulus, ParamFactor, PrimePowerFactor,
                         Status, VerifyOutcome, verify)
from .exact import A, B, ONE, Q, X, ZERO, Frac, MPoly, SignedPower, UPoly
from .harness import Report, lookup, registry, run_sweep

__version__ = "0.1.0"

__all__ = ["A", "B", "ONE", "Q", "X", "ZERO", "Frac", "MPoly", "SignedPower", "UPoly",
           "CyclotomicFactor", "Modulus", "ParamFactor", "PrimePowerFactor", "Status",
           "VerifyOutcome", "verify", "Report", "lookup", "registry", "run_sweep"]
