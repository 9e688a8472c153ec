"""Exact verification of the skew Aomoto complex against the sl2 BGG resolution.

Submodules: ``exact`` (rational linear algebra, cochain complexes),
``arrangement`` (weighted affine arrangements, flats, resonance),
``orlik_solomon`` (OS algebra, Aomoto complex, skew forms), ``sl2`` (Verma
modules, BGG complexes), ``strata`` (the total skew complex and its checks)
and ``cli``.
"""

__version__ = "0.1.0"

from .arrangement import DiscriminantalSpec, WeightedArrangement, discriminantal
from .exact import BettiTable, CochainComplex, Matrix, betti
from .orlik_solomon import OSAlgebra, aomoto, build_os
from .strata import total_complex, verify_all

__all__ = [
    "BettiTable",
    "CochainComplex",
    "DiscriminantalSpec",
    "Matrix",
    "OSAlgebra",
    "WeightedArrangement",
    "aomoto",
    "betti",
    "build_os",
    "discriminantal",
    "total_complex",
    "verify_all",
]
