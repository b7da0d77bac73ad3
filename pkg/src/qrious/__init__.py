"""Exact q-factorial ratio polynomials and conjecture-scale verification.

The package constructs ratios of q-factorials as exact integer
polynomials, decides Landau's floor-sum criterion with witnesses,
analyzes coefficient profiles (positivity, palindromy, unimodality
variants), generates the named parametric families, verifies the
classical q-identities that certify them, and batch-scans parameter
ranges with deterministic, resumable JSONL output.
"""

from qrious.polycore import (
    MUL_THRESHOLD,
    NonExactDivision,
    Poly,
    cyclotomic,
    gauss_binomial,
    poly_exact_div,
    poly_mul,
    poly_pow,
    poly_prod,
    q_factorial,
    q_number,
)

__version__ = "0.1.0"

__all__ = [
    "MUL_THRESHOLD",
    "NonExactDivision",
    "Poly",
    "cyclotomic",
    "gauss_binomial",
    "poly_exact_div",
    "poly_mul",
    "poly_pow",
    "poly_prod",
    "q_factorial",
    "q_number",
    "__version__",
]
