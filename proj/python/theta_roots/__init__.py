"""Chromatic polynomials and chromatic-root bounds of generalized theta graphs."""

from ._core import (
    BoundReport,
    asymptotic_root,
    bound_report,
    brute_force_chromatic,
    calR,
    calR_2k,
    chromatic_polynomial,
    f_polynomial,
    h_polynomial,
    htilde_polynomial,
    k2k_chromatic_roots,
    lambert_w,
    phi_polynomial,
    reproduce_table1,
    rho,
    verify_theorem_k,
    xi_solve,
)

__all__ = [
    "BoundReport",
    "asymptotic_root",
    "bound_report",
    "brute_force_chromatic",
    "calR",
    "calR_2k",
    "chromatic_polynomial",
    "f_polynomial",
    "h_polynomial",
    "htilde_polynomial",
    "k2k_chromatic_roots",
    "lambert_w",
    "phi_polynomial",
    "reproduce_table1",
    "rho",
    "verify_theorem_k",
    "xi_solve",
]
