"""Exact multivariate and bivariate Tutte polynomials of matroids, with
Frobenius-sampling certificates that their Galois groups are symmetric."""

from .galois import (certify_sn, degree_pattern_mod_p, jacobian_independence_check,
                     verify_conjecture_bivariate, verify_theorem_main, verify_theorem_mod_p)
from .graphs import SimpleGraph, cycle_matroid, enumerate_biconnected, is_biconnected, parse_graph6
from .kernels import BACKEND
from .matroid import (BasesMatroid, GraphicMatroid, LinearMatroid, Matroid, UniformMatroid,
                      contract, delete, direct_sum, is_connected, minor)
from .tutte import check_identities, tutte_bivariate, zhat

__all__ = [
    "BACKEND", "BasesMatroid", "GraphicMatroid", "LinearMatroid", "Matroid", "SimpleGraph",
    "UniformMatroid", "certify_sn", "check_identities", "contract", "cycle_matroid", "degree_pattern_mod_p",
    "delete", "direct_sum", "enumerate_biconnected", "is_biconnected", "is_connected",
    "jacobian_independence_check", "minor", "parse_graph6", "tutte_bivariate", "verify_conjecture_bivariate",
    "verify_theorem_main", "verify_theorem_mod_p", "zhat",
]
