"""Exactly solvable position-dependent-mass quantum oscillators.

Analytic spectra/wavefunctions for the deformed canonical and parabose
families, operator realizations on truncated Taylor jets, an independent
finite-difference oracle, and verification suites tying them together.
"""

from .model import Family, OscillatorParams, StateIndex

__version__ = "0.1.0"

__all__ = ["Family", "OscillatorParams", "StateIndex", "__version__"]
