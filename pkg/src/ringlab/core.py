"""Finite rngs given by dense operation tables, plus the standard builders.

Elements are indices ``0 .. N-1``; index 0 is always the additive identity.
Every table is an ``int32`` numpy array and is frozen after construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Sequence

import numpy as np

from . import kernels
from .config import limits
from .errors import AxiomViolation, DimensionMismatch, NotAnIdeal, OrderCapExceeded, Violation


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int32, copy=True)
    arr.setflags(write=False)
    return arr


def check_order(order: int, what: str = "construction") -> None:
    if order > limits.order_cap:
        raise OrderCapExceeded(order, limits.order_cap, what)


@dataclass(frozen=True, eq=False)
class FiniteRng:
    """An associative rng on ``range(order)``.

    ``info`` records how the rng was built (``("Z", n)``, ``("Mat", base, k)``,
    ...); builders such as :func:`canonical_map` consult it.  ``cache`` holds
    memoised derived data (radicals, ideal lists) keyed by the computing module.
    """

    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    unit: int | None
    labels: tuple[str, ...]
    name: str = ""
    info: tuple = ("tables",)
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return int(self.add.shape[0])

    @property
    def zero(self) -> int:
        return 0

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {_norm(lbl): i for i, lbl in enumerate(self.labels)}

    def label(self, x: int) -> str:
        return self.labels[x]

    def index_of(self, label: str | int) -> int:
        if isinstance(label, (int, np.integer)):
            x = int(label)
            if not 0 <= x < self.order:
                raise KeyError(f"element index {x} outside rng of order {self.order}")
            return x
        try:
            return self._label_index[_norm(label)]
        except KeyError:
            raise KeyError(f"no element labelled {label!r} in {self.name or 'rng'}") from None

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def times(self, m: int, x: int) -> int:
        """The integer multiple m*x (m may be negative)."""
        acc = 0
        step = x if m >= 0 else int(self.neg[x])
        for _ in range(abs(m)):
            acc = int(self.add[acc, step])
        return acc

    def power(self, x: int, n: int) -> int:
        if n < 1:
            if n == 0 and self.unit is not None:
                return self.unit
            raise ValueError("power needs n >= 1 in a rng")
        acc = x
        for _ in range(n - 1):
            acc = int(self.mul[acc, x])
        return acc

    def nilpotency_index(self, x: int) -> int | None:
        """Least n with x^n = 0, or None if x is not nilpotent."""
        seen = set()
        acc, n = x, 1
        while acc != 0:
            if acc in seen:
                return None
            seen.add(acc)
            acc = int(self.mul[acc, x])
            n += 1
        return n

    def __repr__(self) -> str:
        return f"FiniteRng({self.name or '?'}, order={self.order}, unit={self.unit})"


def _norm(label: str) -> str:
    return "".join(str(label).split())


def _find_unit(mul: np.ndarray) -> int | None:
    n = mul.shape[0]
    ids = np.arange(n)
    for u in range(n):
        if np.array_equal(mul[u], ids) and np.array_equal(mul[:, u], ids):
            return u
    return None


def _negatives(add: np.ndarray) -> np.ndarray | None:
    hits = add == 0
    if not hits.any(axis=1).all():
        return None
    return np.argmax(hits, axis=1)


def _make(add, mul, labels, name="", info=("tables",), unit: int | None | str = "detect") -> FiniteRng:
    add = _frozen(add)
    mul = _frozen(mul)
    neg = _negatives(add)
    if unit == "detect":
        unit = _find_unit(mul)
    return FiniteRng(add, mul, _frozen(neg), unit, tuple(labels), name, info)


# -- validation -----------------------------------------------------------------


def rng_violations(add, mul, unit: int | None = None) -> list[Violation]:
    """Every violated rng axiom, each with its first (lexicographic) witness."""
    add = np.asarray(add, dtype=np.int64)
    mul = np.asarray(mul, dtype=np.int64)
    n = add.shape[0]
    if add.ndim != 2 or add.shape != (n, n) or mul.shape != (n, n) or n < 1:
        raise DimensionMismatch(f"tables must both be NxN, got {add.shape} and {mul.shape}")
    for name, t in (("add", add), ("mul", mul)):
        if t.min() < 0 or t.max() >= n:
            bad = tuple(int(v) for v in np.argwhere((t < 0) | (t >= n))[0])
            raise DimensionMismatch(f"{name} table entry at {bad} outside [0, {n})")
    if unit is not None and not 0 <= unit < n:
        raise DimensionMismatch(f"unit index {unit} outside [0, {n})")

    out: list[Violation] = []

    def record(axiom: str, bad: np.ndarray) -> None:
        hits = np.argwhere(bad)
        if len(hits):
            out.append(Violation(axiom, tuple(int(v) for v in hits[0]), len(hits)))

    ids = np.arange(n)
    record("additive identity", (add[0] != ids) | (add[:, 0] != ids))
    count, w = kernels.assoc_violations(add)
    if count:
        out.append(Violation("additive associativity", tuple(w), int(count)))
    record("additive commutativity", add != add.T)
    record("additive inverses", ~(add == 0).any(axis=1))
    count, w = kernels.assoc_violations(mul)
    if count:
        out.append(Violation("multiplicative associativity", tuple(w), int(count)))
    count, w = kernels.left_distrib_violations(add, mul)
    if count:
        out.append(Violation("left distributivity", tuple(w), int(count)))
    count, w = kernels.right_distrib_violations(add, mul)
    if count:
        out.append(Violation("right distributivity", tuple(w), int(count)))
    record("zero absorption", (mul[0] != 0) | (mul[:, 0] != 0))
    if unit is not None:
        record("unit", (mul[unit] != ids) | (mul[:, unit] != ids))
    return out


def validate_rng(add, mul, unit: int | None = None, labels: Sequence[str] | None = None,
                 name: str = "") -> FiniteRng:
    """Check the tables and return the rng, or raise :class:`AxiomViolation`
    listing every failing axiom.  A unit is detected when none is given."""
    violations = rng_violations(add, mul, unit)
    if violations:
        raise AxiomViolation(violations)
    n = len(add)
    labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
    if len(labels) != n:
        raise DimensionMismatch(f"{len(labels)} labels for {n} elements")
    return _make(add, mul, labels, name, ("tables",), "detect" if unit is None else unit)


def revalidate(R: FiniteRng) -> list[Violation]:
    return rng_violations(R.add, R.mul, R.unit)


# -- builders -------------------------------------------------------------------


def cyclic_ring(n: int) -> FiniteRng:
    if n < 1:
        raise ValueError("Z/n needs n >= 1")
    check_order(n)
    a = np.arange(n)
    return _make((a[:, None] + a[None, :]) % n, (a[:, None] * a[None, :]) % n,
                 [str(k) for k in range(n)], f"Z/{n}", ("Z", n), unit=1 % n)


def _matrix_builder(base: FiniteRng, k: int, positions: list[tuple[int, int]], kind: str) -> FiniteRng:
    if base.unit is None:
        raise ValueError(f"{kind} needs a unital base ring")
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    q, npos = base.order, len(positions)
    check_order(q ** npos)
    N = q ** npos
    # digits: first position most significant (row-major lexicographic order)
    digits = np.zeros((N, npos), dtype=np.int64)
    rem = np.arange(N)
    for p in range(npos - 1, -1, -1):
        digits[:, p] = rem % q
        rem //= q
    full = np.zeros((N, k, k), dtype=np.int64)
    for p, (i, j) in enumerate(positions):
        full[:, i, j] = digits[:, p]
    weights = q ** np.arange(npos - 1, -1, -1)

    badd, bmul = base.add, base.mul
    add = np.zeros((N, N), dtype=np.int64)
    mul = np.zeros((N, N), dtype=np.int64)
    for p, (i, j) in enumerate(positions):
        add += badd[full[:, None, i, j], full[None, :, i, j]] * weights[p]
        acc = np.zeros((N, N), dtype=np.int64)
        for l in range(k):
            acc = badd[acc, bmul[full[:, None, i, l], full[None, :, l, j]]]
        mul += acc * weights[p]
    unit = int(sum(base.unit * weights[p] for p, (i, j) in enumerate(positions) if i == j))
    labels = [
        "[" + ";".join(",".join(base.labels[full[x, i, j]] for j in range(k)) for i in range(k)) + "]"
        for x in range(N)
    ]
    tag = "Mat" if kind == "matrix_ring" else "UT"
    return _make(add, mul, labels, f"{tag}{k}({base.name})",
                 (tag, base, k), unit=unit)


def matrix_ring(base: FiniteRng, k: int) -> FiniteRng:
    return _matrix_builder(base, k, [(i, j) for i in range(k) for j in range(k)], "matrix_ring")


def upper_triangular_ring(base: FiniteRng, k: int) -> FiniteRng:
    return _matrix_builder(base, k, [(i, j) for i in range(k) for j in range(i, k)],
                           "upper_triangular_ring")


def matrix_entries(R: FiniteRng, x: int) -> np.ndarray:
    """k x k array of base-ring indices for an element of a Mat/UT ring."""
    tag, base, k = R.info
    if tag not in ("Mat", "UT"):
        raise ValueError(f"{R.name} is not a matrix ring")
    positions = [(i, j) for i in range(k) for j in range(k) if tag == "Mat" or j >= i]
    q = base.order
    ent = np.zeros((k, k), dtype=np.int64)
    for p in range(len(positions) - 1, -1, -1):
        ent[positions[p]] = x % q
        x //= q
    return ent


def matrix_index(R: FiniteRng, ent) -> int:
    tag, base, k = R.info
    positions = [(i, j) for i in range(k) for j in range(k) if tag == "Mat" or j >= i]
    for i in range(k):
        for j in range(k):
            if (i, j) not in positions and ent[i][j] != 0:
                raise ValueError("entry below the diagonal in an upper-triangular ring")
    x = 0
    for (i, j) in positions:
        x = x * base.order + int(ent[i][j])
    return x


def direct_product(factors: Sequence[FiniteRng]) -> FiniteRng:
    factors = list(factors)
    if not factors:
        raise ValueError("direct_product needs at least one factor")
    check_order(int(np.prod([f.order for f in factors], dtype=object)))
    orders = [f.order for f in factors]
    comps = np.array(list(itertools.product(*[range(o) for o in orders])), dtype=np.int64)
    N = len(comps)
    weights = np.array([int(np.prod(orders[i + 1:], dtype=np.int64)) for i in range(len(orders))])
    add = np.zeros((N, N), dtype=np.int64)
    mul = np.zeros((N, N), dtype=np.int64)
    for p, f in enumerate(factors):
        c = comps[:, p]
        add += f.add[c[:, None], c[None, :]] * weights[p]
        mul += f.mul[c[:, None], c[None, :]] * weights[p]
    labels = ["(" + ",".join(f.labels[c] for f, c in zip(factors, row)) + ")" for row in comps]
    return _make(add, mul, labels, " x ".join(f.name for f in factors),
                 ("product", tuple(factors)))


def product_components(P: FiniteRng, x: int) -> tuple[int, ...]:
    factors = P.info[1]
    out = []
    for f in reversed(factors):
        out.append(x % f.order)
        x //= f.order
    return tuple(reversed(out))


def trivial_mult_rng(G: FiniteRng) -> FiniteRng:
    """Same additive group as ``G``, every product zero."""
    n = G.order
    return _make(G.add, np.zeros((n, n), dtype=np.int32), G.labels, f"triv({G.name})",
                 ("trivial", G))


# -- morphisms ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RngMorphism:
    source: FiniteRng
    target: FiniteRng
    map: np.ndarray

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    def violations(self) -> list[Violation]:
        f, S, T = self.map, self.source, self.target
        out = []
        for axiom, lhs, rhs in (
            ("additive", f[S.add], T.add[f[:, None], f[None, :]]),
            ("multiplicative", f[S.mul], T.mul[f[:, None], f[None, :]]),
        ):
            hits = np.argwhere(lhs != rhs)
            if len(hits):
                out.append(Violation(axiom, tuple(int(v) for v in hits[0]), len(hits)))
        return out

    @property
    def is_morphism(self) -> bool:
        return not self.violations()

    @property
    def is_surjective(self) -> bool:
        return len(np.unique(self.map)) == self.target.order

    @property
    def is_injective(self) -> bool:
        return len(np.unique(self.map)) == self.source.order

    def kernel(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(self.map == 0))

    def compose(self, other: "RngMorphism") -> "RngMorphism":
        """self after other."""
        return RngMorphism(other.source, self.target, self.map[other.map])


def identity_morphism(R: FiniteRng) -> RngMorphism:
    return RngMorphism(R, R, _frozen(np.arange(R.order)))


def canonical_map(R: FiniteRng, S: FiniteRng) -> RngMorphism:
    """The evident unital ring map R -> S used to make S an R-rng.

    Supported: identical tables (identity), Z/n -> S (k -> k*1),
    UT_k(B) -> Mat_k(B) (inclusion), and R -> product of targets (diagonal).
    """
    if R.unit is None:
        raise ValueError(f"{R.name} is not unital")
    if R.order == S.order and np.array_equal(R.add, S.add) and np.array_equal(R.mul, S.mul):
        return identity_morphism(R) if R is S else RngMorphism(R, S, _frozen(np.arange(R.order)))
    if S.info[0] == "product":
        parts = [canonical_map(R, f).map for f in S.info[1]]
        weights = [int(np.prod([f.order for f in S.info[1][p + 1:]], dtype=np.int64))
                   for p in range(len(parts))]
        m = sum(p.astype(np.int64) * w for p, w in zip(parts, weights))
        return _checked(RngMorphism(R, S, _frozen(m)))
    if R.info[0] == "Z":
        if S.unit is None:
            raise ValueError(f"cannot map Z/{R.order} into non-unital {S.name}")
        m = [S.times(k, S.unit) for k in range(R.order)]
        return _checked(RngMorphism(R, S, _frozen(m)))
    if R.info[0] == "UT" and S.info[0] == "Mat" and R.info[2] == S.info[2]:
        rb, sb = R.info[1], S.info[1]
        if rb is sb or (np.array_equal(rb.add, sb.add) and np.array_equal(rb.mul, sb.mul)):
            m = [matrix_index(S, matrix_entries(R, x)) for x in range(R.order)]
            return _checked(RngMorphism(R, S, _frozen(m)))
    raise ValueError(f"no canonical map {R.name} -> {S.name}; give the map explicitly")


def _checked(f: RngMorphism) -> RngMorphism:
    bad = f.violations()
    if bad:
        raise AxiomViolation(bad)
    if f.target.unit is not None and f(f.source.unit) != f.target.unit:
        raise AxiomViolation([Violation("unital", (f.source.unit,))])
    return f


# -- subsets and quotients -----------------------------------------------------------


def _members_mask(R: FiniteRng, members: Iterable[int]) -> np.ndarray:
    mask = np.zeros(R.order, dtype=bool)
    idx = np.fromiter((int(m) for m in members), dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= R.order):
        raise DimensionMismatch(f"subset member outside rng of order {R.order}")
    mask[idx] = True
    return mask


def is_two_sided_ideal(R: FiniteRng, mask: np.ndarray) -> bool:
    if not mask[0]:
        return False
    idx = np.flatnonzero(mask)
    return bool(mask[R.add[np.ix_(idx, idx)]].all() and mask[R.neg[idx]].all()
                and mask[R.mul[:, idx]].all() and mask[R.mul[idx, :]].all())


@dataclass(frozen=True)
class Quotient:
    ring: FiniteRng
    projection: RngMorphism
    representatives: np.ndarray  # quotient index -> minimal element of its coset


def coset_partition(R: FiniteRng, mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(coset index of each element, minimal representative of each coset).

    Cosets are numbered by ascending representative, so the subgroup itself
    is coset 0."""
    K = np.flatnonzero(mask)
    coset_of = np.full(R.order, -1, dtype=np.int64)
    reps = []
    for x in range(R.order):
        if coset_of[x] < 0:
            coset_of[R.add[x, K]] = len(reps)
            reps.append(x)
    return coset_of, np.array(reps, dtype=np.int64)


def quotient_rng(R: FiniteRng, members: Iterable[int]) -> Quotient:
    """R/K for a two-sided ideal K; cosets are represented by their minimal index."""
    mask = _members_mask(R, members)
    if not is_two_sided_ideal(R, mask):
        raise NotAnIdeal(f"{sorted(np.flatnonzero(mask).tolist())} is not an ideal of {R.name}")
    coset_of, reps = coset_partition(R, mask)
    add = coset_of[R.add[np.ix_(reps, reps)]]
    mul = coset_of[R.mul[np.ix_(reps, reps)]]
    unit = None if R.unit is None else int(coset_of[R.unit])
    gens = ",".join(R.labels[x] for x in np.flatnonzero(mask))
    Q = _make(add, mul, [R.labels[r] for r in reps], f"{R.name}/{{{gens}}}",
              ("quotient", R, tuple(np.flatnonzero(mask).tolist())), unit=unit)
    return Quotient(Q, RngMorphism(R, Q, _frozen(coset_of)), reps)


# -- isomorphism (test support) ------------------------------------------------------


def find_isomorphism(A: FiniteRng, B: FiniteRng, budget: int | None = None) -> RngMorphism | None:
    """Backtracking search over images of an additive generating set of A."""
    from .homsearch import additive_maps

    if A.order != B.order:
        return None
    for img in additive_maps(A.add, range(A.order), B.add, range(B.order), budget=budget):
        if len(np.unique(img)) != A.order:
            continue
        if np.array_equal(img[A.mul], B.mul[img[:, None], img[None, :]]):
            return RngMorphism(A, B, _frozen(img))
    return None


def describe(R: FiniteRng) -> dict[str, Any]:
    return {
        "order": R.order,
        "unit": None if R.unit is None else R.labels[R.unit],
        "commutative": R.is_commutative,
    }
