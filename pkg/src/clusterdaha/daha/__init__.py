"""Weyl quantum tori, the embeddings eta and rho, and their lattice representations."""
from .weyl import ONE_FACTOR, THREE_FACTORS, WeylElement, embed_factor
from .eta import H, L, SHWord, SHWord3, collect_coeffs_expr, eta, eta_gen, eta_tensor, macdonald_expr, opB_expr
from .rho import (
    TorusEmbedding, act, cylinder_embedding, cylinder_embedding_mutated, markov_embedding, multiply,
    rho0, rho_X7, rho_minus1, x7_embedding,
)
from .checks import (
    faithfulness_sample, homomorphism_sample, intertwiner_check, reverse_weight, verify_eta_generators,
    verify_g2_embed, verify_genus1,
)
