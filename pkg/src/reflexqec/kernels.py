"""Kernel selection: compiled extension when available, numpy otherwise.

Set ``REFLEXQEC_PURE=1`` to force the numpy implementation.  ``BACKEND`` names
the active choice; :func:`get_backend` returns either implementation by name.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on build
    _compiled = None


def get_backend(name: str) -> ModuleType:
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    if name == "numpy":
        return _fallback
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    return (["cython"] if _compiled is not None else []) + ["numpy"]


if _compiled is not None and os.environ.get("REFLEXQEC_PURE", "") in ("", "0"):
    _impl: ModuleType = _compiled
    BACKEND = "cython"
else:
    _impl = _fallback
    BACKEND = "numpy"

index_add = _impl.index_add
pauli_apply = _impl.pauli_apply
cayley_components = _impl.cayley_components
cayley_complete = _impl.cayley_complete
luc_edges = _impl.luc_edges
