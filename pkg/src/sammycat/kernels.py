"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
twin runs.  ``SAMMYCAT_PURE=1`` forces the fallback.
"""

import os

from . import _purekernels

BACKEND = "python"
_impl = _purekernels

if os.environ.get("SAMMYCAT_PURE") != "1":
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass

check_laws = _impl.check_laws
refine_signatures = _impl.refine_signatures


def use(backend):
    """Switch backend at runtime (benchmarks and cross-checks)."""
    global BACKEND, check_laws, refine_signatures
    if backend == "cython":
        from . import _ckernels as impl
    elif backend == "python":
        impl = _purekernels
    else:
        raise ValueError(backend)
    BACKEND = backend
    check_laws = impl.check_laws
    refine_signatures = impl.refine_signatures
