"""Exact symbolic verification of Hom-algebra axioms.

Builds Hom-associative algebras, Hom-bialgebras, and module Hom-algebras by
twisting classical structures with endomorphisms, and checks every axiom by
exhaustive sweeps over degree-bounded bases with exact arithmetic in a formal
parameter q.
"""

from .scalars import QLaurent, Rational
from .polyalg import Poly, PolyEndo
from .uea import UElem, UEndo
from .homcore import CheckReport

__all__ = [
    "QLaurent",
    "Rational",
    "Poly",
    "PolyEndo",
    "UElem",
    "UEndo",
    "CheckReport",
]
