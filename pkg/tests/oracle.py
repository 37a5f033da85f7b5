"""Naive reference implementations used to derive expected values.

Everything here works on plain Python values with explicit operation
functions; nothing is imported from the package under test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

El = Hashable


@dataclass
class Rng:
    elements: list
    add: Callable[[El, El], El]
    mul: Callable[[El, El], El]
    zero: El
    one: El | None = None

    def neg(self, x):
        return next(y for y in self.elements if self.add(x, y) == self.zero)


def zn(n: int) -> Rng:
    return Rng(list(range(n)), lambda a, b: (a + b) % n, lambda a, b: (a * b) % n, 0, 1 % n)


def trivial(R: Rng) -> Rng:
    return Rng(R.elements, R.add, lambda a, b: R.zero, R.zero, None)


def product(*parts: Rng) -> Rng:
    def add(a, b):
        return tuple(P.add(x, y) for P, x, y in zip(parts, a, b))

    def mul(a, b):
        return tuple(P.mul(x, y) for P, x, y in zip(parts, a, b))

    one = None if any(P.one is None for P in parts) else tuple(P.one for P in parts)
    return Rng(list(itertools.product(*(P.elements for P in parts))), add, mul,
               tuple(P.zero for P in parts), one)


def mat2(p: int, upper: bool = False) -> Rng:
    """2x2 matrices over Z/p as tuples (a, b, c, d) = [[a, b], [c, d]]."""
    els = [m for m in itertools.product(range(p), repeat=4) if not upper or m[2] == 0]

    def add(x, y):
        return tuple((u + v) % p for u, v in zip(x, y))

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    return Rng(els, add, mul, (0, 0, 0, 0), (1, 0, 0, 1))


@dataclass
class RRng:
    R: Rng
    I: Rng
    left: Callable[[El, El], El]
    right: Callable[[El, El], El]


def ideal_rrng(R: Rng, members: Sequence) -> RRng:
    I = Rng(list(members), R.add, R.mul, R.zero, None)
    return RRng(R, I, R.mul, R.mul)


def dorroh(X: RRng) -> Rng:
    R, I = X.R, X.I

    def add(x, y):
        return (R.add(x[0], y[0]), I.add(x[1], y[1]))

    def mul(x, y):
        (r, i), (p, j) = x, y
        return (R.mul(r, p), I.add(I.add(X.right(i, p), X.left(r, j)), I.mul(i, j)))

    els = [(r, i) for r in R.elements for i in I.elements]
    return Rng(els, add, mul, (R.zero, I.zero), (R.one, I.zero))


# -- definitions ------------------------------------------------------------------


def is_subgroup(R: Rng, S: frozenset) -> bool:
    return R.zero in S and all(R.add(a, R.neg(b)) in S for a in S for b in S)


def subgroups(R: Rng) -> set[frozenset]:
    """Every additive subgroup, as joins of cyclic subgroups."""
    def span(gens):
        S = {R.zero}
        frontier = set(gens)
        while frontier:
            S |= frontier
            frontier = {R.add(a, b) for a in S for b in S} - S
        return frozenset(S)

    cyclic = {span([x]) for x in R.elements}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = {span(A | B) for A in frontier for B in cyclic} - found
        found |= new
        frontier = new
    return found


def ideals(R: Rng, side: str = "two") -> list[frozenset]:
    out = []
    for S in subgroups(R):
        lft = all(R.mul(r, s) in S for r in R.elements for s in S)
        rgt = all(R.mul(s, r) in S for r in R.elements for s in S)
        if (side == "two" and lft and rgt) or (side == "left" and lft) or (side == "right" and rgt):
            out.append(S)
    return out


def left_quasi_regular(R: Rng, x) -> bool:
    return any(R.add(R.add(x, k), R.mul(k, x)) == R.zero for k in R.elements)


def jacobson(R: Rng) -> frozenset:
    """{x : yx is left quasi-regular for every y}."""
    return frozenset(x for x in R.elements
                     if all(left_quasi_regular(R, R.mul(y, x)) for y in R.elements))


def nilpotent(R: Rng, x) -> bool:
    p = x
    for _ in range(len(R.elements) + 1):
        if p == R.zero:
            return True
        p = R.mul(p, x)
    return False


def generated_ideal(R: Rng, seed) -> frozenset:
    S = {R.zero, *seed}
    while True:
        new = {R.add(a, b) for a in S for b in S}
        new |= {R.mul(r, s) for r in R.elements for s in S}
        new |= {R.mul(s, r) for r in R.elements for s in S}
        if new <= S:
            return frozenset(S)
        S |= new


def upper_nil(R: Rng) -> frozenset:
    return frozenset(x for x in R.elements
                     if all(nilpotent(R, y) for y in generated_ideal(R, [x])))


def products_vanish(R: Rng, A, B) -> bool:
    return all(R.mul(a, b) == R.zero for a in A for b in B)


def is_semiprime(R: Rng) -> bool:
    return not any(len(K) > 1 and products_vanish(R, K, K) for K in ideals(R))


def is_prime(R: Rng) -> bool:
    ids = [K for K in ideals(R) if len(K) > 1]
    if len(R.elements) == 1:
        return False
    return not any(products_vanish(R, A, B) for A in ids for B in ids)


def prime_ideals(R: Rng) -> list[frozenset]:
    ids = ideals(R)
    full = frozenset(R.elements)
    out = []
    for P in ids:
        if P == full:
            continue
        if all(A <= P or B <= P for A in ids for B in ids
               if all(R.mul(a, b) in P for a in A for b in B)):
            out.append(P)
    return out


def maximal_ideals(R: Rng) -> list[frozenset]:
    ids = ideals(R)
    full = frozenset(R.elements)
    return [M for M in ids if M != full and not any(M < K < full for K in ids)]
