"""R-rng structures, the ideal extension E(R, I), R-homomorphisms, and the
involution built from a multiplicative retraction."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .core import (
    FiniteRng,
    RngMorphism,
    _frozen,
    _make,
    check_order,
    coset_partition,
    direct_product,
    identity_morphism,
    is_two_sided_ideal,
    product_components,
    quotient_rng,
    trivial_mult_rng,
)
from .errors import AxiomViolation, DimensionMismatch, NotAnIdeal, NotARetraction, Violation
from .homsearch import additive_maps
from .subsets import IdealSubset
from . import kernels


@dataclass(frozen=True, eq=False)
class RRngStructure:
    """A unital ring R acting on both sides of a rng I.

    ``left[r, i]`` is r.i and ``right[i, r]`` is i.r.  ``embedding`` is set
    when I came from an ideal of R (I-index -> R-index), ``factors`` when I
    is a direct product of R-rngs.
    """

    R: FiniteRng
    I: FiniteRng
    left: np.ndarray
    right: np.ndarray
    name: str = ""
    embedding: np.ndarray | None = field(default=None, repr=False)
    factors: tuple["RRngStructure", ...] = ()
    cache: dict = field(default_factory=dict, repr=False)

    def subset(self, members: Iterable[int]) -> IdealSubset:
        return IdealSubset.of(self.I, members, context=self)

    def subset_from_mask(self, mask: np.ndarray) -> IdealSubset:
        return IdealSubset.from_mask(self.I, mask, context=self)

    @property
    def whole(self) -> IdealSubset:
        return self.subset(range(self.I.order))

    @property
    def zero(self) -> IdealSubset:
        return self.subset([0])

    def __repr__(self) -> str:
        return f"RRngStructure({self.name or '?'}: {self.R.name} on {self.I.name})"


# -- validation -----------------------------------------------------------------


def rrng_violations(R: FiniteRng, I: FiniteRng, left, right) -> list[Violation]:
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    nR, nI = R.order, I.order
    if left.shape != (nR, nI) or right.shape != (nI, nR):
        raise DimensionMismatch(
            f"left must be {nR}x{nI} and right {nI}x{nR}; got {left.shape}, {right.shape}")
    for t in (left, right):
        if t.size and (t.min() < 0 or t.max() >= nI):
            raise DimensionMismatch("action table entry outside I")
    out: list[Violation] = []
    if R.unit is None:
        return [Violation("R unital", ())]

    def record(axiom: str, bad: np.ndarray) -> None:
        hits = np.argwhere(bad)
        if len(hits):
            out.append(Violation(axiom, tuple(int(v) for v in hits[0]), len(hits)))

    Ra, Rm, Ia, Im = R.add, R.mul, I.add, I.mul
    r = np.arange(nR)
    i = np.arange(nI)
    r3, s3 = r[:, None, None], r[None, :, None]
    # (r, s, i)
    record("left additivity in R", left[Ra[r3, s3], i[None, None, :]]
           != Ia[left[r3, i[None, None, :]], left[s3, i[None, None, :]]])
    # (r, i, j)
    ri, rj = left[:, :, None], left[:, None, :]
    record("left additivity in I", left[r[:, None, None], Ia[None, :, :]] != Ia[ri, rj])
    # (i, r, s)
    record("right additivity in R", right[i[:, None, None], Ra[None, :, :]]
           != Ia[right[:, :, None], right[:, None, :]])
    # (i, j, r)
    record("right additivity in I", right[Ia[:, :, None], r[None, None, :]]
           != Ia[right[:, None, :], right[None, :, :]])
    record("left unitality", left[R.unit] != i)
    record("right unitality", right[:, R.unit] != i)
    # (r, s, i): (rs).i = r.(s.i)
    record("left module associativity", left[Rm[:, :, None], i[None, None, :]]
           != left[r3, left[None, :, :]])
    # (i, r, s): i.(rs) = (i.r).s
    record("right module associativity", right[i[:, None, None], Rm[None, :, :]]
           != right[right[:, :, None], r[None, None, :]])
    # (r, i, s): (r.i).s = r.(i.s)
    record("bimodule associativity", right[left[:, :, None], r[None, None, :]]
           != left[r[:, None, None], right[None, :, :]])
    # (r, i, j): r(ij) = (ri)j
    record("compatibility r(ij)=(ri)j", left[r[:, None, None], Im[None, :, :]]
           != Im[left[:, :, None], i[None, None, :]])
    # (i, r, j): i(rj) = (ir)j
    record("compatibility i(rj)=(ir)j", Im[i[:, None, None], left[None, :, :]]
           != Im[right[:, :, None], i[None, None, :]])
    # (i, j, r): (ij)r = i(jr)
    record("compatibility (ij)r=i(jr)", right[Im[:, :, None], r[None, None, :]]
           != Im[i[:, None, None], right[None, :, :]])
    return out


def validate_rrng(R: FiniteRng, I: FiniteRng, left, right, name: str = "") -> RRngStructure:
    bad = rrng_violations(R, I, left, right)
    if bad:
        raise AxiomViolation(bad)
    return RRngStructure(R, I, _frozen(left), _frozen(right), name)


def revalidate_rrng(X: RRngStructure) -> list[Violation]:
    return rrng_violations(X.R, X.I, X.left, X.right)


# -- builders -------------------------------------------------------------------


def ideal_as_rrng(R: FiniteRng, members: Iterable[int] | IdealSubset, name: str = "") -> RRngStructure:
    """An ideal K of R viewed as an R-rng under the multiplication of R."""
    K = members if isinstance(members, IdealSubset) else IdealSubset.of(R, members)
    if not K.is_ideal:
        raise NotAnIdeal(f"{K.labels()} is not an ideal of {R.name}")
    idx = K.idx
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[idx] = np.arange(len(idx))
    I = _make(pos[R.add[np.ix_(idx, idx)]], pos[R.mul[np.ix_(idx, idx)]],
              [R.labels[x] for x in idx], name or f"K<{R.name}", ("ideal", R, K.members))
    left = pos[R.mul[:, idx]]
    right = pos[R.mul[idx, :]]
    return RRngStructure(R, I, _frozen(left), _frozen(right), name, embedding=_frozen(idx))


def rrng_via_map(f: RngMorphism, trivial: bool = False, name: str = "") -> RRngStructure:
    """S as an R-rng through a unital ring map f: R -> S (optionally with all
    products in S replaced by zero)."""
    R, S = f.source, f.target
    I = trivial_mult_rng(S) if trivial else S
    left = S.mul[f.map, :]
    right = S.mul[:, f.map]
    return validate_rrng(R, I, left, right, name)


def trivial_rrng(X: RRngStructure, name: str = "") -> RRngStructure:
    return RRngStructure(X.R, trivial_mult_rng(X.I), X.left, X.right, name)


def product_rrng(parts: Sequence[RRngStructure], name: str = "") -> RRngStructure:
    parts = list(parts)
    R = parts[0].R
    for P in parts[1:]:
        if not (P.R is R or (np.array_equal(P.R.add, R.add) and np.array_equal(P.R.mul, R.mul))):
            raise ValueError("product of R-rngs needs a common ring R")
    I = direct_product([P.I for P in parts])
    comps = np.array([product_components(I, x) for x in range(I.order)], dtype=np.int64)
    orders = [P.I.order for P in parts]
    weights = [int(np.prod(orders[k + 1:], dtype=np.int64)) for k in range(len(parts))]
    left = np.zeros((R.order, I.order), dtype=np.int64)
    right = np.zeros((I.order, R.order), dtype=np.int64)
    for k, P in enumerate(parts):
        left += P.left[:, comps[:, k]] * weights[k]
        right += P.right[comps[:, k], :] * weights[k]
    return RRngStructure(R, I, _frozen(left), _frozen(right), name, factors=tuple(parts))


def factor_projection(X: RRngStructure, k: int) -> np.ndarray:
    """I-index -> index in the k-th factor's I."""
    return np.array([product_components(X.I, x)[k] for x in range(X.I.order)], dtype=np.int64)


def factor_injection(X: RRngStructure, k: int) -> np.ndarray:
    """k-th factor's I-index -> I-index (zero elsewhere)."""
    orders = [P.I.order for P in X.factors]
    w = int(np.prod(orders[k + 1:], dtype=np.int64))
    return np.arange(orders[k], dtype=np.int64) * w


@dataclass(frozen=True)
class QuotientStructure:
    structure: RRngStructure
    r_projection: np.ndarray
    i_projection: np.ndarray


def quotient_rrng(X: RRngStructure, A: IdealSubset, J: IdealSubset) -> QuotientStructure:
    """(R/A, I/J) for an ideal A of R and an R-ideal J of I with AI + IA inside J."""
    Jc = J.with_context(X)
    if not Jc.is_r_ideal:
        raise NotAnIdeal("J is not an R-ideal of I")
    if not (Jc.mask[X.left[A.idx, :]].all() and Jc.mask[X.right[:, A.idx]].all()):
        raise NotAnIdeal("AI + IA is not contained in J")
    QR = quotient_rng(X.R, A.members)
    QI = quotient_rng(X.I, J.members)
    ci, _ = coset_partition(X.I, Jc.mask)
    rr, ri = QR.representatives, QI.representatives
    left = ci[X.left[np.ix_(rr, ri)]]
    right = ci[X.right[np.ix_(ri, rr)]]
    S = RRngStructure(QR.ring, QI.ring, _frozen(left), _frozen(right), f"{X.name}/(A,J)")
    return QuotientStructure(S, QR.projection.map, QI.projection.map)


# -- the extension ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DorrohRing:
    """E(R, I) on pairs (r, i) encoded as r*|I| + i."""

    ring: FiniteRng
    source: RRngStructure

    @property
    def R(self) -> FiniteRng:
        return self.source.R

    @property
    def I(self) -> FiniteRng:
        return self.source.I

    @property
    def order(self) -> int:
        return self.ring.order

    def encode(self, r: int, i: int) -> int:
        return int(r) * self.I.order + int(i)

    def decode(self, x: int) -> tuple[int, int]:
        r, i = divmod(int(x), self.I.order)
        return r, i

    @cached_property
    def r_part(self) -> np.ndarray:
        return np.arange(self.order) // self.I.order

    @cached_property
    def i_part(self) -> np.ndarray:
        return np.arange(self.order) % self.I.order

    def subset(self, members: Iterable[int]) -> IdealSubset:
        return IdealSubset.of(self.ring, members)

    def pairs(self, pairs: Iterable[tuple[int, int]]) -> IdealSubset:
        return self.subset(self.encode(r, i) for r, i in pairs)

    def direct_sum(self, A: Iterable[int], J: Iterable[int]) -> IdealSubset:
        return self.pairs((a, j) for a in A for j in J)

    @property
    def base_copy(self) -> IdealSubset:
        return self.direct_sum(range(self.R.order), [0])

    @property
    def ideal_copy(self) -> IdealSubset:
        return self.direct_sum([0], range(self.I.order))

    def __repr__(self) -> str:
        return f"DorrohRing({self.ring.name}, order={self.order})"


def dorroh_extend(X: RRngStructure, name: str = "") -> DorrohRing:
    """(r, i)(p, j) = (rp, ip + rj + ij) on R + I."""
    R, I = X.R, X.I
    nI = I.order
    check_order(R.order * nI)
    N = R.order * nI
    r = np.arange(N) // nI
    i = np.arange(N) % nI
    rc, rr = r[:, None], r[None, :]
    ic, ir = i[:, None], i[None, :]
    add = R.add[rc, rr] * nI + I.add[ic, ir]
    second = I.add[I.add[X.right[ic, rr], X.left[rc, ir]], I.mul[ic, ir]]
    mul = R.mul[rc, rr] * nI + second
    labels = [f"({R.labels[a]},{I.labels[b]})" for a, b in zip(r, i)]
    ring = _make(add, mul, labels, name or f"E({R.name},{I.name})", ("dorroh", X),
                 unit=int(R.unit) * nI)
    return DorrohRing(ring, X)


# -- annihilator and central generation -------------------------------------------


def annihilator(X: RRngStructure) -> IdealSubset:
    """ann_R(I) = {r : rI = Ir = 0}."""
    mask = (X.left == 0).all(axis=1) & (X.right == 0).all(axis=0)
    return IdealSubset.from_mask(X.R, mask)


@dataclass(frozen=True)
class CentralGeneration:
    holds: bool
    central: tuple[int, ...]
    generated: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.holds


def is_centrally_generated(X: RRngStructure) -> CentralGeneration:
    """Does the set of elements commuting with R generate I as a left R-module?"""
    central = (X.left == X.right.T).all(axis=0)
    span = kernels.closure(X.I.add, central, X.left)
    return CentralGeneration(bool(span.all()), tuple(np.flatnonzero(central).tolist()),
                             tuple(np.flatnonzero(span).tolist()))


# -- R-homomorphisms -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RHomomorphism:
    """An R-homomorphism from an R-subrng J of I into a ring T on which R
    acts through ``projection`` (T = R, or T = R/Z with the quotient map).

    ``images`` covers all of I, with -1 off the domain.
    """

    structure: RRngStructure
    domain: IdealSubset
    target: FiniteRng
    projection: np.ndarray
    images: np.ndarray

    def __call__(self, j: int) -> int:
        v = int(self.images[j])
        if v < 0:
            raise KeyError(f"{j} is outside the domain")
        return v

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(int(self.images[j]) for j in self.domain.members)

    @property
    def is_total(self) -> bool:
        return self.domain.is_whole

    @property
    def is_injective(self) -> bool:
        return len(set(self.key)) == len(self.domain)

    @property
    def is_zero(self) -> bool:
        return not any(self.key)

    def kernel(self) -> IdealSubset:
        return self.structure.subset(j for j in self.domain.members if self.images[j] == 0)

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.key)))

    def restrict(self, J: IdealSubset) -> "RHomomorphism":
        imgs = np.full_like(self.images, -1)
        imgs[J.idx] = self.images[J.idx]
        return RHomomorphism(self.structure, J.with_context(self.structure), self.target,
                             self.projection, imgs)

    def violations(self) -> list[Violation]:
        return _hom_violations(self.structure, self.domain, self.target, self.projection,
                               self.images)

    def __repr__(self) -> str:
        return f"RHomomorphism({dict(zip(self.domain.members, self.key))})"


def _hom_violations(X, J, T, proj, img) -> list[Violation]:
    I = X.I
    j = J.idx
    out = []
    checks = [
        ("additive", img[I.add[np.ix_(j, j)]], T.add[img[j][:, None], img[j][None, :]]),
        ("multiplicative", img[I.mul[np.ix_(j, j)]], T.mul[img[j][:, None], img[j][None, :]]),
        ("left equivariant", img[X.left[:, j]], T.mul[proj[:, None], img[j][None, :]]),
        ("right equivariant", img[X.right[j, :]], T.mul[img[j][:, None], proj[None, :]]),
    ]
    for axiom, lhs, rhs in checks:
        hits = np.argwhere(lhs != rhs)
        if len(hits):
            out.append(Violation(axiom, tuple(int(v) for v in hits[0]), len(hits)))
    if img[0] != 0:
        out.append(Violation("zero", (0,)))
    return out


def hom_target(X: RRngStructure, Z: IdealSubset | None = None) -> tuple[FiniteRng, np.ndarray]:
    """R itself, or R/Z with its projection, as the codomain of R-homomorphisms."""
    if Z is None or Z.is_zero:
        return X.R, identity_morphism(X.R).map
    q = quotient_rng(X.R, Z.members)
    return q.ring, q.projection.map


def enumerate_r_homs(X: RRngStructure, J: IdealSubset | Iterable[int],
                     Z: IdealSubset | None = None, budget: int | None = None) -> list[RHomomorphism]:
    """All R-homomorphisms J -> R (or J -> R/Z), ordered by image tuple."""
    J = J.with_context(X) if isinstance(J, IdealSubset) else X.subset(J)
    if not J.is_r_subrng:
        raise NotAnIdeal(f"{J.labels()} is not an R-subrng of {X.I.name}")
    key = ("r_homs", J.members, None if Z is None else Z.members)
    if key in X.cache:
        return X.cache[key]
    T, proj = hom_target(X, Z)
    I = X.I
    j = J.idx
    found = []
    for img in additive_maps(I.add, J.members, T.add, range(T.order), budget=budget):
        ij = img[j]
        if not np.array_equal(img[I.mul[np.ix_(j, j)]], T.mul[ij[:, None], ij[None, :]]):
            continue
        if not np.array_equal(img[X.left[:, j]], T.mul[proj[:, None], ij[None, :]]):
            continue
        if not np.array_equal(img[X.right[j, :]], T.mul[ij[:, None], proj[None, :]]):
            continue
        found.append(RHomomorphism(X, J, T, proj, _frozen(img)))
    found.sort(key=lambda h: h.key)
    X.cache[key] = found
    return found


def hom_from_table(X: RRngStructure, table: Sequence[int], Z: IdealSubset | None = None) -> RHomomorphism:
    """A total R-homomorphism I -> R (or R/Z) given as I-index -> target-index."""
    T, proj = hom_target(X, Z)
    img = np.asarray(table, dtype=np.int64)
    if img.shape != (X.I.order,) or img.min() < 0 or img.max() >= T.order:
        raise DimensionMismatch(f"map needs {X.I.order} images in [0, {T.order})")
    h = RHomomorphism(X, X.whole, T, proj, _frozen(img))
    bad = h.violations()
    if bad:
        raise AxiomViolation(bad)
    return h


def inclusion_hom(X: RRngStructure) -> RHomomorphism:
    if X.embedding is None:
        raise ValueError("structure did not come from an ideal of R")
    return hom_from_table(X, X.embedding)


def retraction_violation(X: RRngStructure, phi: RHomomorphism) -> tuple[str, int, int] | None:
    """First (identity, i, j) breaking i.phi(j) = ij = phi(i).j, else None."""
    if not phi.is_total or phi.target is not X.R:
        return ("total map into R", -1, -1)
    I, f = X.I, phi.images
    a = X.right[:, f]  # [i, j] -> i.phi(j)
    b = X.left[f, :]  # [i, j] -> phi(i).j
    for name, lhs in (("i.phi(j) = ij", a), ("phi(i).j = ij", b)):
        hits = np.argwhere(lhs != I.mul)
        if len(hits):
            return (name, int(hits[0][0]), int(hits[0][1]))
    return None


def is_multiplicative_retraction(X: RRngStructure, phi: RHomomorphism) -> bool:
    return retraction_violation(X, phi) is None


def find_retractions(X: RRngStructure, budget: int | None = None) -> list[RHomomorphism]:
    key = ("retractions",)
    if key not in X.cache:
        X.cache[key] = [h for h in enumerate_r_homs(X, X.whole, budget=budget)
                        if is_multiplicative_retraction(X, h)]
    return X.cache[key]


def psi_automorphism(E: DorrohRing, phi: RHomomorphism) -> RngMorphism:
    """(r, i) -> (r + phi(i), -i)."""
    X = E.source
    if retraction_violation(X, phi) is not None:
        raise NotARetraction(f"{phi} is not a multiplicative retraction")
    r, i = E.r_part, E.i_part
    m = X.R.add[r, phi.images[i]] * X.I.order + X.I.neg[i]
    return RngMorphism(E.ring, E.ring, _frozen(m))


def graph_subset(E: DorrohRing, phi: RHomomorphism, J: IdealSubset | None = None) -> IdealSubset:
    """J_phi = {(phi(j), -j) : j in J} (J = I by default)."""
    J = E.source.whole if J is None else J
    return E.pairs((phi(j), int(E.I.neg[j])) for j in J.members)


def dorroh_ideal_check(E: DorrohRing) -> bool:
    return is_two_sided_ideal(E.ring, E.ideal_copy.mask)
