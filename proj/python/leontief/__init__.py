"""Leontief / generalized Leontief LCP solver."""

from ._core import (
    DimensionMismatch,
    EnumerationCapExceeded,
    InvalidConfig,
    LeontiefError,
    ParseError,
    enumerate_lcp,
    enumerate_vlcp,
    is_m_matrix,
    is_vertical_block_p,
    load_model,
    solve_lcp,
    solve_model,
    solve_vlcp,
    verify_vlcp,
)

__all__ = [
    "DimensionMismatch",
    "EnumerationCapExceeded",
    "InvalidConfig",
    "LeontiefError",
    "ParseError",
    "enumerate_lcp",
    "enumerate_vlcp",
    "is_m_matrix",
    "is_vertical_block_p",
    "load_model",
    "solve_lcp",
    "solve_model",
    "solve_vlcp",
    "verify_vlcp",
]
