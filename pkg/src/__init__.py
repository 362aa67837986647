"""
WHQ Engine - Source Package
"""
from .errors import WHQError
from .exact import QQ, PrimeField, parse_field
from .matrix import ExactMatrix
from .moncat import Mor, compose, convolve, tensor
from .structure import Mode, WeakStructure, dualize, validate_premises
from .synthesis import classify, dual_synthesis, synthesize_antipode, verify_axioms

__all__ = [
    "WHQError",
    "QQ",
    "PrimeField",
    "parse_field",
    "ExactMatrix",
    "Mor",
    "compose",
    "convolve",
    "tensor",
    "Mode",
    "WeakStructure",
    "dualize",
    "validate_premises",
    "classify",
    "dual_synthesis",
    "synthesize_antipode",
    "verify_axioms",
]
