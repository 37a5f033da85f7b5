"""Pure-Python (numpy) versions of the compiled kernels.

Every function returns exactly what its ``_ckernels`` twin returns,
including the lexicographically first witness.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 22  # elements per broadcast block


def _scan(n: int, bad_block) -> tuple[int, tuple[int, int, int]]:
    """Run ``bad_block(a_slice)`` -> bool array (len(a), n, n) over chunks of a."""
    step = max(1, _CHUNK // max(1, n * n))
    count = 0
    witness = (-1, -1, -1)
    for start in range(0, n, step):
        bad = bad_block(slice(start, min(n, start + step)))
        hits = int(bad.sum())
        if hits and count == 0:
            a, b, c = np.argwhere(bad)[0]
            witness = (int(a) + start, int(b), int(c))
        count += hits
    return count, witness


def assoc_violations(op: np.ndarray):
    n = op.shape[0]

    def block(sl):
        left = op[op[sl, :], :]  # (a, b, c) -> (ab)c
        right = op[np.arange(n)[sl, None, None], op[None, :, :]]  # a(bc)
        return left != right

    return _scan(n, block)


def left_distrib_violations(add: np.ndarray, mul: np.ndarray):
    n = add.shape[0]

    def block(sl):
        a = np.arange(n)[sl, None, None]
        lhs = mul[a, add[None, :, :]]
        ab = mul[sl, :]
        rhs = add[ab[:, :, None], ab[:, None, :]]
        return lhs != rhs

    return _scan(n, block)


def right_distrib_violations(add: np.ndarray, mul: np.ndarray):
    n = add.shape[0]

    def block(sl):
        lhs = mul[add[sl, :][:, :, None], np.arange(n)[None, None, :]]
        rhs = add[mul[sl, :][:, None, :], mul[None, :, :]]
        return lhs != rhs

    return _scan(n, block)


def quasi_regular_witnesses(add: np.ndarray, mul: np.ndarray, left: bool) -> np.ndarray:
    n = add.shape[0]
    x = np.arange(n)[:, None]
    k = np.arange(n)[None, :]
    prod = mul[k, x] if left else mul[x, k]
    ok = add[add[x, k], prod] == 0
    first = np.argmax(ok, axis=1).astype(np.int32)
    first[~ok.any(axis=1)] = -1
    return first


def _subgroup(add: np.ndarray, mask: np.ndarray) -> np.ndarray:
    mask = mask.copy()
    mask[0] = True
    while True:
        idx = np.flatnonzero(mask)
        grown = np.zeros_like(mask)
        grown[add[np.ix_(idx, idx)].ravel()] = True
        grown |= mask
        if grown.sum() == mask.sum():
            return mask
        mask = grown


def closure(add: np.ndarray, seed: np.ndarray, ops: np.ndarray) -> np.ndarray:
    mask = _subgroup(add, seed.astype(bool))
    while True:
        if ops.shape[0] == 0:
            break
        imgs = ops[:, mask]
        if mask[imgs].all():
            break
        extra = np.zeros_like(mask)
        extra[imgs.ravel()] = True
        mask = _subgroup(add, mask | extra)
    return mask.astype(np.uint8)
