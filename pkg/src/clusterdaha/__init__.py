"""Exact computations for genus 0, 1, 2 spherical DAHA operators, their
Macdonald polynomials and the quantum cluster charts that realize them."""

__version__ = "0.1.0"
