"""Backend selection for the acceptance kernels.

The compiled extension is used when it was built (``pip install -e .`` with
Cython available); otherwise the pure-Python module with identical
signatures is used.  Set ``MTA_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("MTA_PURE_PYTHON") != "1":
    try:
        from mta._ckernels import accepts_def1, accepts_taped  # noqa: F401

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        pass

if BACKEND == "python":
    from mta._pykernels import accepts_def1, accepts_taped  # noqa: F401

from mta import _pykernels as python_kernels  # noqa: E402,F401

__all__ = ["BACKEND", "accepts_def1", "accepts_taped", "python_kernels"]
