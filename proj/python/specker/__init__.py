"""Boolean powers of commutative rings.

The heavy lifting lives in the compiled extension; this package just
re-exports it under friendlier names.
"""

from ._core import (
    Algebra,
    Element,
    Ring,
    SpeckerError,
    __version__,
    equivalence_holds,
    run_request,
)

__all__ = [
    "Algebra",
    "Element",
    "Ring",
    "SpeckerError",
    "__version__",
    "equivalence_holds",
    "run_request",
]
