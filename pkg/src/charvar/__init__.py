"""Exact E-polynomials of SL2 character varieties, with finite-field checks."""

from .polyq import EPoly, Q, interpolate, parse
from .hodge_rep import EquivPair, RepZ2, RepZ2xZ2
from .genus_pipelines import Holonomy, genus1, genus2

__all__ = ["EPoly", "Q", "interpolate", "parse", "EquivPair", "RepZ2", "RepZ2xZ2",
           "Holonomy", "genus1", "genus2"]
__version__ = "0.1.0"
