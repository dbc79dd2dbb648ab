"""Kernel backend selection.

Hot inner loops ship in two flavors: numba @njit scalar kernels and
vectorized pure-numpy equivalents.  The numba flavor is the default when
numba imports; setting the environment variable ``LCIWORD_NO_NUMBA=1``
(before import) forces the numpy fallback.  Both flavors compute
identical results; ``benchmarks/kernel_benchmark.py`` times them side by
side and the test suite asserts agreement.
"""

import os

_DISABLED = os.environ.get("LCIWORD_NO_NUMBA", "").strip().lower() in {
    "1", "true", "yes", "on",
}

try:
    if _DISABLED:
        raise ImportError("numba disabled by LCIWORD_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        # transparent replacement: decorated functions run as plain python
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


BACKEND = "numba" if HAVE_NUMBA else "numpy"
