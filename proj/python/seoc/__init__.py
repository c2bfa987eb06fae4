"""Compile unitary matrices into sequences of elementary operations.

The heavy lifting lives in the C++ extension ``seoc._core``; this package
re-exports its functions.
"""

from seoc._core import (
    NotUnitaryError,
    ResidualError,
    SeoParseError,
    __version__,
    compile_unitary,
    cs_decompose,
    decompile_seo,
    hadamard_transform,
    peephole_zero,
    verify_seo,
)

__all__ = [
    "NotUnitaryError",
    "ResidualError",
    "SeoParseError",
    "__version__",
    "compile_unitary",
    "cs_decompose",
    "decompile_seo",
    "hadamard_transform",
    "peephole_zero",
    "verify_seo",
]
