"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
module with the same API.  Set ``HOOK_SPECHT_PURE=1`` to force the fallback.
"""

import os

from . import _pykernel

if os.environ.get("HOOK_SPECHT_PURE") == "1":
    _impl = _pykernel
    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernel
        BACKEND = "python"

apply_word = _impl.apply_word
rref_mod_p = _impl.rref_mod_p
