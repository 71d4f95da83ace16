"""Exact symbolic verifier for 3-dimensional almost paracontact metric manifolds.

Classifies concrete structures (para-Sasakian, paracosymplectic,
para-Kenmotsu), computes curvature in exact rational-function arithmetic,
and checks Yamabe/Ricci soliton conditions together with the associated
tensor identities.
"""

__version__ = "0.1.0"

from .errors import ParacontactError

__all__ = ["ParacontactError", "__version__"]
