"""Finite-ring toolkit for ideal extensions E(R, I) = R x I."""

from .core import FiniteRng, cyclic_ring, direct_product, matrix_ring, trivial_mult_rng, upper_triangular_ring, validate_rng
from .dsl import load, parse_spec
from .errors import RinglabError, TheoremDiscrepancy
from .ideals import decompose_ideal, enumerate_ideals, reconstruct_ideal
from .kernels import backend_name
from .primes import classify_prime_ideals, is_prime_rng, is_semiprime_rng, prime_via_theorem, semiprime_via_theorem
from .radicals import jacobson_radical, upper_nil_radical
from .rrng import DorrohRing, RRngStructure, dorroh_extend, ideal_as_rrng, rrng_via_map, validate_rrng

__version__ = "0.1.0"

__all__ = [
    "DorrohRing", "FiniteRng", "RRngStructure", "RinglabError", "TheoremDiscrepancy",
    "backend_name", "classify_prime_ideals", "cyclic_ring", "decompose_ideal", "direct_product",
    "dorroh_extend", "enumerate_ideals", "ideal_as_rrng", "is_prime_rng", "is_semiprime_rng",
    "jacobson_radical", "load", "matrix_ring", "parse_spec", "prime_via_theorem",
    "reconstruct_ideal", "rrng_via_map", "semiprime_via_theorem", "trivial_mult_rng",
    "upper_nil_radical", "upper_triangular_ring", "validate_rng", "validate_rrng",
]
