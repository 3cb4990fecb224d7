"""Mod-p elimination kernels.

The compiled extension ``_modp`` is used when it was built; otherwise the
pure-Python ``_modp_py`` is used. Setting ``TCAKIT_PURE_PYTHON=1`` forces the
fallback. ``BACKEND`` names the one in use.
"""

import os

from . import _modp_py as python_backend

compiled_backend = None
if os.environ.get("TCAKIT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _modp as compiled_backend
    except ImportError:
        compiled_backend = None

_active = compiled_backend or python_backend
BACKEND = "compiled" if compiled_backend is not None else "python"

ModPEchelon = _active.ModPEchelon
rref_mod_p = _active.rref_mod_p

__all__ = ["BACKEND", "ModPEchelon", "rref_mod_p", "compiled_backend", "python_backend"]
