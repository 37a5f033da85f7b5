"""Backend selection for the brute-force kernels.

The compiled extension is used when it imported cleanly; otherwise the
numpy implementation is used.  ``RINGLAB_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

import numpy as np

from . import _pykernels

_compiled: ModuleType | None
try:
    from . import _ckernels as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

_active: ModuleType = (
    _pykernels if os.environ.get("RINGLAB_PURE") or _compiled is None else _compiled
)


def backend_name() -> str:
    return "cython" if _active is _compiled and _compiled is not None else "python"


def use_backend(name: str) -> None:
    global _active
    try:
        _active = BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None


def _i32(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.int32)


def assoc_violations(op):
    return _active.assoc_violations(_i32(op))


def left_distrib_violations(add, mul):
    return _active.left_distrib_violations(_i32(add), _i32(mul))


def right_distrib_violations(add, mul):
    return _active.right_distrib_violations(_i32(add), _i32(mul))


def quasi_regular_witnesses(add, mul, left: bool) -> np.ndarray:
    return np.asarray(_active.quasi_regular_witnesses(_i32(add), _i32(mul), bool(left)))


def closure(add, seed: np.ndarray, ops: np.ndarray | None = None) -> np.ndarray:
    """Boolean mask of the least additive subgroup containing ``seed`` and
    closed under each map ``x -> ops[m, x]``."""
    n = add.shape[0]
    if ops is None or len(ops) == 0:
        ops = np.zeros((0, n), dtype=np.int32)
    seed = np.ascontiguousarray(seed, dtype=np.uint8)
    return np.asarray(_active.closure(_i32(add), seed, _i32(ops))).astype(bool)
