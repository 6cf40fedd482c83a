"""Verification engine for the 64-dimensional extended real Clifford-Dirac
operator algebra: exact construction of every named generator set, exact
checks of the defining relations, and floating checks of the
momentum-space (diagonalized-representation) machinery.
"""

from .scalars import ExactScalar
from .operators import GeneralOp, commutator, anticommutator, compose
from .algebras import (OrtSet, pd_gammas, extended_gammas, cd16, ercd64,
                       percd29, so6, a32, pgi8, pgi_lorentz6, bosonic_rep,
                       breve_spin)
from .spans import span_rank, centralizer_dimension

__all__ = [
    "ExactScalar", "GeneralOp", "OrtSet",
    "commutator", "anticommutator", "compose",
    "pd_gammas", "extended_gammas", "cd16", "ercd64", "percd29", "so6",
    "a32", "pgi8", "pgi_lorentz6", "bosonic_rep", "breve_spin",
    "span_rank", "centralizer_dimension",
]

__version__ = "0.1.0"
