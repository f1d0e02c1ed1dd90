"""Integer kernels behind the semigroup and degree bookkeeping.

Two interchangeable implementations exist: compiled loops
(``_kernels_jit``, numba) and vectorized numpy (``_kernels_np``).  The
compiled set is used when numba imports and ``MDEG_DISABLE_JIT`` is unset.

``exclusion_code(T, m, M, B)`` returns one of
    EXCLUDED (0)            only q = 0 forms survive and T is unreachable
    BOUND_INSUFFICIENT (1)  some q >= 1 form survives the bound
    REPRESENTABLE (2)       T is reachable by a surviving q = 0 form
    INAPPLICABLE (3)        the q-coefficient of the bound is non-positive
where ``B`` is the effective bracket-degree lower bound.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

from . import _kernels_np

EXCLUDED, BOUND_INSUFFICIENT, REPRESENTABLE, INAPPLICABLE = 0, 1, 2, 3


def jit_disabled() -> bool:
    return os.environ.get("MDEG_DISABLE_JIT", "").strip().lower() in ("1", "true", "yes", "on")


def get_backend(name: str | None = None) -> ModuleType:
    """Kernel module by name, ``"numba"`` or ``"numpy"``; default honours the env flag."""
    if name is None:
        name = "numpy" if jit_disabled() else "numba"
        if name == "numba":
            try:
                return importlib.import_module("._kernels_jit", __package__)
            except ImportError:
                return _kernels_np
    if name == "numba":
        return importlib.import_module("._kernels_jit", __package__)
    if name == "numpy":
        return _kernels_np
    raise ValueError(f"unknown kernel backend {name!r}")


_active = get_backend()
BACKEND: str = _active.NAME

member = _active.member
representable_mask = _active.representable_mask
exclusion_code = _active.exclusion_code
lemma31_grid = _active.lemma31_grid
ap_exclusion_grid = _active.ap_exclusion_grid
type3 = _active.type3
type3_ap_grid = _active.type3_ap_grid
