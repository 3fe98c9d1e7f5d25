"""Exact K-theory invariants and isomorphism decisions for Cuntz-Krieger
Toeplitz extensions.

The heavy lifting lives in the compiled extension ``ckdual._ckdual``; this
package re-exports its surface.
"""

from ._ckdual import (
    a_hat,
    a_one,
    ck_iso,
    corollary_consistency,
    enumerate_corpus,
    ext_w_pointed_iso,
    hnf_rows,
    invariants,
    kernel_basis,
    paper_examples,
    snf,
    solve_in_column_lattice,
    toeplitz_iso,
    toeplitz_triple,
    validate,
    verify,
    CkdualError,
    ParseError,
    ValidationError,
)

__all__ = [
    "a_hat",
    "a_one",
    "ck_iso",
    "corollary_consistency",
    "enumerate_corpus",
    "ext_w_pointed_iso",
    "hnf_rows",
    "invariants",
    "kernel_basis",
    "paper_examples",
    "snf",
    "solve_in_column_lattice",
    "toeplitz_iso",
    "toeplitz_triple",
    "validate",
    "verify",
    "CkdualError",
    "ParseError",
    "ValidationError",
]
