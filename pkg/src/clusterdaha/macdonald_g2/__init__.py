"""Genus 2 Macdonald polynomials: Pieri recursion, the mutation route and the closed formula."""
from .triples import admissible, admissible_triples, primed, unprimed
from .pieri import build_Phi, pieri_coeff, pieri_residual
from .mutation import apply_psi_gamma_inverse, g_eigen, g_raw, phi_mutation, xi_residual
from .normalization import norm_AS, norm_AS_printed, norm_X7, norm_X7_printed, normalization_ratio
from .polytope import K0, closed_coeff, enumerate_polytope, enumerate_polytope_bruteforce, phi_closed
from .phi_pieri import phi_pieri_coeffs, phi_pieri_residual
