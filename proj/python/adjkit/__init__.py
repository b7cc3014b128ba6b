"""Compound matrices, higher adjugates, wedge algebra and
eigenvector-from-eigenvalue recovery.

Floating-kernel functions take matrices as nested lists (or anything that
converts to ``list[list[complex]]``, e.g. ``numpy_array.tolist()``); exact
functions take fraction strings such as ``"3"``, ``"-1/2"`` or ``"1/2+3/4i"``.
"""

from adjkit._core import (
    AdjkitError,
    adjugate,
    adjugate_exact,
    charpoly,
    charpoly_exact,
    compound,
    compound_exact,
    delta_matrix,
    det_sum,
    det_sum_exact,
    eigrecover,
    eigrecover_exact,
    eigvals,
    geometric_multiplicity,
    hermitian_ev_magnitudes,
    jacobi_derivative,
    normal_left_from_right,
    verify,
    wedge_decode,
    wedge_encode,
)

__all__ = [
    "AdjkitError",
    "adjugate",
    "adjugate_exact",
    "charpoly",
    "charpoly_exact",
    "compound",
    "compound_exact",
    "delta_matrix",
    "det_sum",
    "det_sum_exact",
    "eigrecover",
    "eigrecover_exact",
    "eigvals",
    "geometric_multiplicity",
    "hermitian_ev_magnitudes",
    "jacobi_derivative",
    "normal_left_from_right",
    "verify",
    "wedge_decode",
    "wedge_encode",
]

__version__ = "0.1.0"
