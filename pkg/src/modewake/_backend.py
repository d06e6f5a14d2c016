"""Optional numba acceleration.

The hot numeric kernels (special-function evaluation) exist in two
versions: pure-numpy vectorized code and numba @njit scalar loops.
Numba is used when it imports cleanly, unless the environment variable
``MODEWAKE_DISABLE_NUMBA`` is set to ``1``/``true``/``yes``.
"""

import os

try:
    from numba import njit

    _NUMBA_INSTALLED = True
except ImportError:  # pragma: no cover - exercised only without numba
    _NUMBA_INSTALLED = False

    def njit(*args, **kwargs):
        def decorator(func):
            return func

        if len(args) == 1 and callable(args[0]):
            return args[0]
        return decorator


def _env_disabled():
    return os.environ.get("MODEWAKE_DISABLE_NUMBA", "").strip().lower() in (
        "1",
        "true",
        "yes",
    )


NUMBA_ENABLED = _NUMBA_INSTALLED and not _env_disabled()
