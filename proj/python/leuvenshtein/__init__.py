"""Encrypted edit distance over a simulated 5-bit scheme.

The heavy lifting lives in the compiled extension; this package just
re-exports its surface.
"""

from ._core import (
    __version__,
    band_cell_count,
    banded_distance,
    compute,
    eq_cost,
    lut_dump,
    wf_distance,
)

__all__ = [
    "__version__",
    "band_cell_count",
    "banded_distance",
    "compute",
    "eq_cost",
    "lut_dump",
    "wf_distance",
]
