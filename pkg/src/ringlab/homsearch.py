"""Backtracking enumeration of additive maps out of a finite abelian group.

The domain is a subgroup H of a group given by its addition table.  A
minimal generating set is chosen greedily by ascending index, then each
generator receives an image; the map is extended to the span coset by coset,
and a candidate image is pruned unless it respects the generator's order
relation modulo the span built so far.  Multiplicativity and module
conditions are left to the caller.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .config import limits
from .errors import SearchBudgetExceeded


def additive_generators(add: np.ndarray, members: Iterable[int]) -> list[int]:
    n = add.shape[0]
    span = np.zeros(n, dtype=bool)
    span[0] = True
    gens = []
    for x in sorted(int(m) for m in members):
        if not span[x]:
            gens.append(x)
            seed = span.copy()
            seed[x] = True
            span = kernels.closure(add, seed)
    return gens


def additive_maps(
    src_add: np.ndarray,
    members: Iterable[int],
    dst_add: np.ndarray,
    candidates: Iterable[int],
    budget: int | None = None,
) -> Iterator[np.ndarray]:
    """Yield every additive map from the subgroup ``members`` of the source
    group into the destination group whose generator images lie in
    ``candidates``.

    Each map is an int array over the whole source (``-1`` off the domain).
    Maps come out in lexicographic order of the generator images.
    """
    src_add = np.asarray(src_add)
    dst_add = np.asarray(dst_add)
    budget = limits.search_budget if budget is None else budget
    gens = additive_generators(src_add, members)
    cands = sorted(set(int(c) for c in candidates))
    img = np.full(src_add.shape[0], -1, dtype=np.int64)
    img[0] = 0
    nodes = 0

    def multiple(t: int, m: int) -> int:
        acc = 0
        for _ in range(m):
            acc = int(dst_add[acc, t])
        return acc

    def rec(k: int, span: list[int]) -> Iterator[np.ndarray]:
        nonlocal nodes
        if k == len(gens):
            yield img.copy()
            return
        g = gens[k]
        steps = []  # g, 2g, ... up to the first multiple back in the span
        c = g
        while img[c] < 0:
            steps.append(c)
            c = int(src_add[c, g])
        m, target = len(steps) + 1, int(img[c])
        for t in cands:
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            if multiple(t, m) != target:
                continue
            fresh = []
            tt = t
            for cg in steps:
                for h in span:
                    x = int(src_add[h, cg])
                    img[x] = dst_add[img[h], tt]
                    fresh.append(x)
                tt = int(dst_add[tt, t])
            yield from rec(k + 1, span + fresh)
            img[fresh] = -1

    yield from rec(0, [0])
