"""Exact F-signatures, colengths and Groebner bases for binomial pairs.

Thin re-export of the compiled extension.  All rational values cross the
boundary as :class:`fractions.Fraction`; rational arguments accept
``Fraction``, ``int`` or strings like ``"5/9"`` / ``"0.45"`` (floats are
rejected to keep every value exact).
"""

from fsig._fsig import (
    DomainError,
    Error,
    HypothesisViolation,
    PiecewiseFn,
    basis,
    corollary_b_check,
    find_nonstabilization_witness,
    fsig_at_p,
    lct,
    length_general,
    length_rank,
    length_simple,
    length_wlp,
    limit_fsig,
    nvol,
    sweep,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "Error",
    "HypothesisViolation",
    "PiecewiseFn",
    "basis",
    "corollary_b_check",
    "find_nonstabilization_witness",
    "fsig_at_p",
    "lct",
    "length_general",
    "length_rank",
    "length_simple",
    "length_wlp",
    "limit_fsig",
    "nvol",
    "sweep",
    "verify",
]
