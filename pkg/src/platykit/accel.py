"""Numba dispatch layer.

Hot kernels live in :mod:`platykit.kernels` and are decorated with
:func:`njit` from this module.  Setting the environment variable
``PLATYKIT_JIT=0`` before import turns every kernel into its plain
Python/NumPy fallback, which is useful for debugging and as a reference
path for the benchmark suite (``benchmarks/bench_kernels.py``).
"""

import os

JIT_ENABLED = os.environ.get("PLATYKIT_JIT", "1").lower() not in ("0", "false", "no")

if not JIT_ENABLED:
    # The bit kernels rely on wrapping uint64 arithmetic; numba wraps
    # silently, plain NumPy warns.  Same numeric results either way.
    import numpy as _np

    _np.seterr(over="ignore")


def njit(*args, **kwargs):
    """``numba.njit`` with caching, or a no-op decorator when JIT is off."""
    if not JIT_ENABLED:
        if args and callable(args[0]):
            return args[0]
        return lambda func: func
    from numba import njit as numba_njit

    kwargs.setdefault("cache", True)
    return numba_njit(*args, **kwargs)
