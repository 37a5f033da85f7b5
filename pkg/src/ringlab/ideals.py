"""Ideal generation and enumeration, nil/nilpotent tests, and the
(A, Z, J, phi) description of ideals and left ideals of E(R, I)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .config import limits
from .core import FiniteRng, coset_partition
from .errors import InvalidDecomposition, NotAnIdeal, OrderCapExceeded, TheoremDiscrepancy
from .rrng import DorrohRing, RRngStructure, annihilator
from .subsets import IdealSubset

KINDS = ("subgroup", "left", "right", "two-sided", "left-R-submodule", "R-bimodule",
         "R-subrng", "R-ideal", "left-R-ideal")


def subset_predicates(ambient: FiniteRng, members: Iterable[int],
                      context: RRngStructure | None = None) -> IdealSubset:
    S = IdealSubset.of(ambient, members, context)
    S.flags()  # populate the cache
    return S


def _operators(ambient: FiniteRng, kind: str, context: RRngStructure | None) -> np.ndarray:
    """Stacked unary operator tables the substructure must be stable under."""
    mul = ambient.mul
    parts: list[np.ndarray] = []
    if kind in ("left", "two-sided", "R-ideal", "left-R-ideal"):
        parts.append(mul)
    if kind in ("right", "two-sided", "R-ideal"):
        parts.append(mul.T)
    if kind in ("left-R-submodule", "R-bimodule", "R-subrng", "R-ideal", "left-R-ideal"):
        if context is None or context.I is not ambient:
            raise ValueError(f"kind {kind!r} needs an R-rng context over this rng")
        parts.append(context.left)
        if kind in ("R-bimodule", "R-subrng", "R-ideal"):
            parts.append(context.right.T)
    if not parts:
        return np.zeros((0, ambient.order), dtype=np.int32)
    return np.ascontiguousarray(np.concatenate(parts), dtype=np.int32)


def _close(ambient: FiniteRng, seed: np.ndarray, kind: str, ops: np.ndarray) -> np.ndarray:
    mask = kernels.closure(ambient.add, seed, ops)
    if kind != "R-subrng":
        return mask
    while True:
        idx = np.flatnonzero(mask)
        prods = ambient.mul[np.ix_(idx, idx)]
        if mask[prods].all():
            return mask
        grown = mask.copy()
        grown[prods.ravel()] = True
        mask = kernels.closure(ambient.add, grown, ops)


def generated_ideal(ambient: FiniteRng, seed: Iterable[int], kind: str = "two-sided",
                    context: RRngStructure | None = None) -> IdealSubset:
    """Least substructure of the given kind containing ``seed``."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    ops = _operators(ambient, kind, context)
    mask = np.zeros(ambient.order, dtype=bool)
    mask[list(seed)] = True
    return IdealSubset.from_mask(ambient, _close(ambient, mask, kind, ops), context)


def enumerate_ideals(ambient: FiniteRng, kind: str = "two-sided",
                     context: RRngStructure | None = None) -> list[IdealSubset]:
    """Every substructure of the given kind, ordered by (size, members).

    Built as the join-closure of the principal substructures.
    """
    if ambient.order > limits.enumeration_cap:
        raise OrderCapExceeded(ambient.order, limits.enumeration_cap, "ideal enumeration")
    store = context.cache if context is not None else ambient.cache
    key = ("substructures", kind, id(ambient))
    if key in store:
        return store[key]
    ops = _operators(ambient, kind, context)
    n = ambient.order

    def close(mask):
        return _close(ambient, mask, kind, ops)

    principal = {}
    for x in range(n):
        seed = np.zeros(n, dtype=bool)
        seed[x] = True
        m = close(seed)
        principal.setdefault(m.tobytes(), m)
    gens = list(principal.values())
    found = {}
    zero = close(np.zeros(n, dtype=bool))
    found[zero.tobytes()] = zero
    work = [zero]
    while work:
        cur = work.pop()
        for g in gens:
            if (g <= cur).all():
                continue
            j = close(cur | g)
            k = j.tobytes()
            if k not in found:
                found[k] = j
                work.append(j)
    out = sorted((IdealSubset.from_mask(ambient, m, context) for m in found.values()),
                 key=IdealSubset.sort_key)
    store[key] = out
    return out


# -- nil and nilpotent ---------------------------------------------------------


@dataclass(frozen=True)
class NilResult:
    holds: bool
    exponent: int | None

    def __bool__(self) -> bool:
        return self.holds


def is_nilpotent_ideal(R: FiniteRng, K: IdealSubset | Iterable[int]) -> NilResult:
    """Least n with every n-fold product from K equal to zero (product sets)."""
    members = K.members if isinstance(K, IdealSubset) else tuple(sorted(set(K)))
    kid = np.array(members, dtype=np.int64)
    cur = np.unique(kid)
    for n in range(1, len(members) + 2):
        if not cur.any():
            return NilResult(True, n)
        cur = np.unique(R.mul[np.ix_(cur, kid)])
    return NilResult(False, None)


def is_nil_ideal(R: FiniteRng, K: IdealSubset | Iterable[int]) -> NilResult:
    """Every element nilpotent; exponent is the largest element index of nilpotency."""
    worst = 1
    for x in K:
        e = R.nilpotency_index(x)
        if e is None:
            return NilResult(False, None)
        worst = max(worst, e)
    return NilResult(True, worst)


def rng_annihilator(I: FiniteRng) -> IdealSubset:
    mask = (I.mul == 0).all(axis=1) & (I.mul == 0).all(axis=0)
    return IdealSubset.from_mask(I, mask)


def r_span(X: RRngStructure, J: IdealSubset) -> IdealSubset:
    """Additive span of {r j s : r, s in R, j in J}."""
    prods = X.left[:, X.right[J.idx, :]]  # [r, j, s]
    seed = np.zeros(X.I.order, dtype=bool)
    seed[prods.ravel()] = True
    return X.subset_from_mask(kernels.closure(X.I.add, seed))


# -- the (A, Z, J, phi) description ------------------------------------------


@dataclass(frozen=True, eq=False)
class IdealDecomposition:
    """K = {(a, -j) : a in A, j in J, a + Z = phi(j)}.

    ``phi`` maps each member of J to a representative in R of its coset
    modulo Z; equality of decompositions compares cosets, not representatives.
    """

    E: DorrohRing
    A: IdealSubset
    Z: IdealSubset
    J: IdealSubset
    phi: dict[int, int]
    kind: str = "two-sided"

    @property
    def coset(self) -> np.ndarray:
        """R-index -> coset number modulo Z."""
        return coset_partition(self.E.R, self.Z.mask)[0]

    def phi_coset(self, j: int) -> int:
        return int(self.coset[self.phi[j]])

    def kernel(self) -> IdealSubset:
        zc = self.coset[0]
        return self.E.source.subset(j for j in self.J.members if self.coset[self.phi[j]] == zc)

    def is_injective(self) -> bool:
        return self.kernel().is_zero

    def is_zero_map(self) -> bool:
        return len(self.kernel()) == len(self.J)

    def pairs(self) -> list[tuple[int, int]]:
        """Members of the described set as (a, -j) pairs."""
        c = self.coset
        neg = self.E.I.neg
        return [(a, int(neg[j])) for j in self.J.members for a in self.A.members
                if c[a] == c[self.phi[j]]]

    def equivalent(self, other: "IdealDecomposition") -> bool:
        if (self.A.members, self.Z.members, self.J.members) != (
                other.A.members, other.Z.members, other.J.members):
            return False
        c = self.coset
        return all(c[self.phi[j]] == c[other.phi[j]] for j in self.J.members)

    def __repr__(self) -> str:
        R = self.E.R
        phi = {self.E.I.labels[j]: R.labels[a] for j, a in self.phi.items()}
        return (f"IdealDecomposition(A={self.A.labels()}, Z={self.Z.labels()}, "
                f"J={self.J.labels()}, phi={phi})")


def _ideal_test(E: DorrohRing, K: IdealSubset, kind: str) -> bool:
    return K.is_ideal if kind == "two-sided" else K.is_left_ideal


def decompose_ideal(E: DorrohRing, K: IdealSubset | Iterable[int], kind: str = "two-sided") -> IdealDecomposition:
    if kind not in ("two-sided", "left"):
        raise ValueError("kind must be 'two-sided' or 'left'")
    K = K if isinstance(K, IdealSubset) else E.subset(K)
    if not _ideal_test(E, K, kind):
        raise NotAnIdeal(f"{K.labels()} is not a {kind} ideal of {E.ring.name}")
    X = E.source
    rs, is_ = E.r_part[K.idx], E.i_part[K.idx]
    A = IdealSubset.of(E.R, rs.tolist())
    J = X.subset(X.I.neg[is_].tolist())
    Z = IdealSubset.of(E.R, rs[is_ == 0].tolist())
    phi: dict[int, int] = {}
    for a, i in zip(rs.tolist(), is_.tolist()):
        j = int(X.I.neg[i])
        if j not in phi or a < phi[j]:
            phi[j] = a
    return IdealDecomposition(E, A, Z, J, phi, kind)


def decomposition_violations(d: IdealDecomposition) -> list[tuple[str, tuple]]:
    """Each failed requirement on (A, Z, J, phi) with a witness."""
    E, X = d.E, d.E.source
    R, I = X.R, X.I
    A, Z, J = d.A, d.Z, d.J.with_context(X)
    left = d.kind == "left"
    bad: list[tuple[str, tuple]] = []
    if not (A.is_left_ideal if left else A.is_ideal):
        bad.append(("A is an ideal of R", tuple(A.members)))
    if not (Z.is_left_ideal if left else Z.is_ideal):
        bad.append(("Z is an ideal of R", tuple(Z.members)))
    if not Z <= A:
        bad.append(("Z inside A", tuple(Z.members)))
    if not (J.is_left_r_submodule if left else J.is_r_subrng):
        bad.append(("J is a left R-submodule" if left else "J is an R-subrng", tuple(J.members)))
    if set(d.phi) != set(J.members):
        bad.append(("phi defined on J", tuple(sorted(d.phi))))
        return bad
    if bad:
        return bad
    c = d.coset
    zc = c[0]
    pc = {j: c[a] for j, a in d.phi.items()}
    if any(not A.mask[a] for a in d.phi.values()):
        bad.append(("phi lands in A/Z", tuple(j for j, a in d.phi.items() if not A.mask[a])[:1]))
    js = J.members
    for j in js:
        for k in js:
            if pc[int(I.add[j, k])] != c[R.add[d.phi[j], d.phi[k]]]:
                bad.append(("phi additive", (j, k)))
                return bad
    for r in range(R.order):
        for j in js:
            if pc[int(X.left[r, j])] != c[R.mul[r, d.phi[j]]]:
                bad.append(("phi left R-linear", (r, j)))
                return bad
            if not left and pc[int(X.right[j, r])] != c[R.mul[d.phi[j], r]]:
                bad.append(("phi right R-linear", (j, r)))
                return bad
    if not left:
        for j in js:
            for k in js:
                if pc[int(I.mul[j, k])] != c[R.mul[d.phi[j], d.phi[k]]]:
                    bad.append(("phi multiplicative", (j, k)))
                    return bad
    if {int(c[a]) for a in A.members} != set(pc.values()):
        bad.append(("phi surjective onto A/Z", ()))
        return bad
    ker = np.zeros(I.order, dtype=bool)
    for j in js:
        if pc[j] == zc:
            ker[j] = True
    for a, mj in d.pairs():
        j = int(I.neg[mj])
        ai_ji = I.add[X.left[a, :], I.neg[I.mul[j, :]]]  # a i - j i
        ia_ij = I.add[X.right[:, a], I.neg[I.mul[:, j]]]  # i a - i j
        if not left:
            hits = np.flatnonzero(~ker[ai_ji])
            if len(hits):
                bad.append(("(a) ai - ji in ker(phi)", (a, mj, int(hits[0]))))
                return bad
        hits = np.flatnonzero(~ker[ia_ij])
        if len(hits):
            bad.append(("(b) ia - ij in ker(phi)", (a, mj, int(hits[0]))))
            return bad
    return bad


def check_decomposition(d: IdealDecomposition) -> None:
    bad = decomposition_violations(d)
    if bad:
        raise InvalidDecomposition(*bad[0])


def reconstruct_ideal(E: DorrohRing, d: IdealDecomposition, kind: str | None = None,
                      check: bool = True) -> IdealSubset:
    """Rebuild K from (A, Z, J, phi); ``check=False`` skips the hypotheses."""
    if kind is not None and kind != d.kind:
        d = IdealDecomposition(d.E, d.A, d.Z, d.J, d.phi, kind)
    if check:
        check_decomposition(d)
    K = E.pairs(d.pairs())
    if check and not _ideal_test(E, K, d.kind):
        raise TheoremDiscrepancy("reconstructed set is an ideal", True, False, K.members)
    return K


def decomposition_from_hom(E: DorrohRing, A: IdealSubset, Z: IdealSubset, J: IdealSubset,
                           images: dict[int, int], kind: str = "two-sided") -> IdealDecomposition:
    return IdealDecomposition(E, A, Z, J.with_context(E.source), dict(images), kind)


# -- direct sums --------------------------------------------------------------


@dataclass(frozen=True)
class DirectSumCase:
    hypothesis: bool
    is_ideal: bool


def direct_sum_ideal_tests(E: DorrohRing, A: IdealSubset | None = None,
                           J: IdealSubset | None = None) -> dict[str, DirectSumCase]:
    """The three sufficient conditions for A + J to be an ideal of E."""
    X = E.source
    out: dict[str, DirectSumCase] = {}
    if J is not None:
        Jc = J.with_context(X)
        out["0+J"] = DirectSumCase(Jc.is_r_ideal, E.direct_sum([0], J.members).is_ideal)
    if A is not None:
        ann = annihilator(X)
        out["A+0"] = DirectSumCase(A <= ann, E.direct_sum(A.members, [0]).is_ideal)
    if A is not None and J is not None:
        absorbed = bool(J.mask[X.left[A.idx, :]].all() and J.mask[X.right[:, A.idx]].all())
        out["A+J"] = DirectSumCase(absorbed, E.direct_sum(A.members, J.members).is_ideal)
    for name, case in out.items():
        if case.hypothesis and not case.is_ideal:
            raise TheoremDiscrepancy(f"{name} is an ideal", True, False, None)
    return out
