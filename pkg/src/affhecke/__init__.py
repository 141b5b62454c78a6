"""Exact affine Hecke algebra representations on weight-lattice functions,
Macdonald spherical functions, Pieri operators and the GL_N specialization."""

__version__ = "0.1.0"

from ._kernel import BACKEND
from .rootsys import RootSystem, build_root_system
from .qring import LaurentRing, MultiplicityParams, RingElem
from .latfun import FiniteFunction, GroupAlgebraElem, LazyFunction

__all__ = [
    "BACKEND",
    "FiniteFunction",
    "GroupAlgebraElem",
    "LaurentRing",
    "LazyFunction",
    "MultiplicityParams",
    "RingElem",
    "RootSystem",
    "build_root_system",
]
