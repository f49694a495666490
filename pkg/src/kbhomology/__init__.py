"""Exact Koszul-Brylinski homology of holomorphic Poisson structures on CP1 x CP1."""

from .calculus import PoissonBivector, PolyForm, PolyVector, delta_pi, schouten
from .cech import CechCochain, HomologyReport, euler_kb, homology_dims, line_bundle_cohomology
from .gaussian import GaussianRational
from .laurent import LaurentPoly
from .pairing import PairingMatrix, pairing_matrix
from .parse import parse_pi, parse_pi_spec
from .sparse import SparseMatrix, rank, solve_membership

__all__ = [
    "CechCochain",
    "GaussianRational",
    "HomologyReport",
    "LaurentPoly",
    "PairingMatrix",
    "PoissonBivector",
    "PolyForm",
    "PolyVector",
    "SparseMatrix",
    "delta_pi",
    "euler_kb",
    "homology_dims",
    "line_bundle_cohomology",
    "pairing_matrix",
    "parse_pi",
    "parse_pi_spec",
    "rank",
    "schouten",
    "solve_membership",
]
