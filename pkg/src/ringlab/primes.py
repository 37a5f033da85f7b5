"""Semiprime and prime structure: definitional tests, the characterizations
for E(R, I), and the classification of prime and maximal ideals of E(R, I)
in the presence of a multiplicative retraction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .core import FiniteRng
from .errors import EmptyRng, HypothesisViolated, NotARetraction, NotCommutative, TheoremDiscrepancy
from .ideals import enumerate_ideals
from .rrng import (
    DorrohRing,
    RHomomorphism,
    RRngStructure,
    annihilator,
    enumerate_r_homs,
    factor_projection,
    quotient_rrng,
    retraction_violation,
)
from .subsets import IdealSubset


@dataclass(frozen=True)
class PrimenessVerdict:
    """``witness`` explains a negative verdict: an ideal, a pair of ideals,
    or a (J, phi) pair, depending on ``condition``."""

    verdict: bool
    condition: str | None = None
    witness: Any = None
    conditions: dict[str, bool] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict


def _products_vanish(R: FiniteRng, A: IdealSubset, B: IdealSubset, inside: np.ndarray | None = None) -> bool:
    prods = R.mul[np.ix_(A.idx, B.idx)]
    return bool((prods == 0).all() if inside is None else inside[prods].all())


def is_semiprime_rng(I: FiniteRng) -> PrimenessVerdict:
    for K in enumerate_ideals(I):
        if not K.is_zero and _products_vanish(I, K, K):
            return PrimenessVerdict(False, "square-zero ideal", K)
    return PrimenessVerdict(True)


def is_prime_rng(I: FiniteRng) -> PrimenessVerdict:
    if I.order == 1:
        return PrimenessVerdict(False, "zero rng")
    nonzero = [K for K in enumerate_ideals(I) if not K.is_zero]
    for A in nonzero:
        for B in nonzero:
            if _products_vanish(I, A, B):
                return PrimenessVerdict(False, "zero product", (A, B))
    return PrimenessVerdict(True)


def _over(R: FiniteRng, K: IdealSubset) -> list[IdealSubset]:
    return [B for B in enumerate_ideals(R) if K <= B]


def is_prime_ideal(R: FiniteRng, K: IdealSubset) -> bool:
    """R/K is a prime rng, read off the ideals of R containing K."""
    if K.is_whole:
        return False
    above = [B for B in _over(R, K) if B != K]
    return not any(_products_vanish(R, B1, B2, K.mask) for B1 in above for B2 in above)


def is_semiprime_ideal(R: FiniteRng, K: IdealSubset) -> bool:
    return not any(B != K and _products_vanish(R, B, B, K.mask) for B in _over(R, K))


def is_maximal_ideal(R: FiniteRng, K: IdealSubset) -> bool:
    return not K.is_whole and not any(B != K and not B.is_whole for B in _over(R, K))


def prime_ideals(R: FiniteRng) -> list[IdealSubset]:
    return [K for K in enumerate_ideals(R) if is_prime_ideal(R, K)]


def maximal_ideals(R: FiniteRng) -> list[IdealSubset]:
    return [K for K in enumerate_ideals(R) if is_maximal_ideal(R, K)]


# -- the (J, phi) obstruction -------------------------------------------------


def absorbs(X: RRngStructure, phi: RHomomorphism) -> bool:
    """ij = i phi(j) and ji = phi(j) i for all i in I, j in the domain."""
    j = phi.domain.idx
    f = phi.images[j]
    return bool(np.array_equal(X.I.mul[:, j], X.right[:, f])
                and np.array_equal(X.I.mul[j, :], X.left[f, :]))


def obstruction(X: RRngStructure, injective: bool, square_zero: bool,
                budget: int | None = None) -> tuple[IdealSubset, RHomomorphism] | None:
    """First nonzero R-subrng J with an R-homomorphism J -> R absorbing the
    multiplication of I (optionally injective, optionally with J^2 = 0)."""
    for J in enumerate_ideals(X.I, "R-subrng", X):
        if J.is_zero:
            continue
        if square_zero and not _products_vanish(X.I, J, J):
            continue
        for phi in enumerate_r_homs(X, J, budget=budget):
            if injective and not phi.is_injective:
                continue
            if absorbs(X, phi):
                return J, phi
    return None


def _crosscheck(what: str, theorem: bool, oracle: bool, witness: Any) -> None:
    if theorem != oracle:
        raise TheoremDiscrepancy(what, oracle, theorem, witness)


def semiprime_via_theorem(E: DorrohRing, crosscheck: bool = True,
                          budget: int | None = None) -> PrimenessVerdict:
    X = E.source
    c1 = is_semiprime_rng(X.I)
    ann = annihilator(X)
    bad_a = next((A for A in enumerate_ideals(X.R)
                  if not A.is_zero and A <= ann and _products_vanish(X.R, A, A)), None)
    ob = obstruction(X, injective=True, square_zero=True, budget=budget)
    ob_any = obstruction(X, injective=False, square_zero=True, budget=budget)
    conds = {"1": bool(c1), "2": bad_a is None, "3": ob is None, "3'": ob_any is None}
    if conds["1"] and conds["3"] != conds["3'"]:
        raise TheoremDiscrepancy("semiprime conditions (3) and (3') agree", conds["3"],
                                 conds["3'"], ob_any)
    verdict = conds["1"] and conds["2"] and conds["3"]
    if not conds["1"]:
        out = PrimenessVerdict(False, "1", c1.witness, conds)
    elif not conds["2"]:
        out = PrimenessVerdict(False, "2", bad_a, conds)
    elif not conds["3"]:
        out = PrimenessVerdict(False, "3", ob, conds)
    else:
        out = PrimenessVerdict(True, None, None, conds)
    if crosscheck:
        _crosscheck("semiprime characterization", verdict, bool(is_semiprime_rng(E.ring)), E.ring.name)
    return out


def prime_via_theorem(E: DorrohRing, crosscheck: bool = True,
                      budget: int | None = None) -> PrimenessVerdict:
    X = E.source
    if X.I.order == 1:
        raise EmptyRng("the prime characterization needs a nonzero I")
    c1 = is_prime_rng(X.I)
    ann = annihilator(X)
    ob = obstruction(X, injective=True, square_zero=False, budget=budget)
    ob_any = obstruction(X, injective=False, square_zero=False, budget=budget)
    conds = {"1": bool(c1), "2": ann.is_zero, "3": ob is None, "3'": ob_any is None}
    if conds["1"] and conds["3"] != conds["3'"]:
        raise TheoremDiscrepancy("prime conditions (3) and (3') agree", conds["3"],
                                 conds["3'"], ob_any)
    verdict = conds["1"] and conds["2"] and conds["3"]
    if not conds["1"]:
        out = PrimenessVerdict(False, "1", c1.witness, conds)
    elif not conds["2"]:
        out = PrimenessVerdict(False, "2", ann, conds)
    elif not conds["3"]:
        out = PrimenessVerdict(False, "3", ob, conds)
    else:
        out = PrimenessVerdict(True, None, None, conds)
    if crosscheck:
        _crosscheck("prime characterization", verdict, bool(is_prime_rng(E.ring)), E.ring.name)
    return out


def witness_holds(E: DorrohRing, v: PrimenessVerdict) -> bool:
    """Re-check a negative verdict's witness from scratch."""
    if v.verdict:
        return v.witness is None
    X = E.source
    w = v.witness
    if v.condition == "square-zero ideal":
        return w.is_ideal and not w.is_zero and _products_vanish(w.ambient, w, w)
    if v.condition == "zero product":
        A, B = w
        return A.is_ideal and B.is_ideal and not (A.is_zero or B.is_zero) and \
            _products_vanish(A.ambient, A, B)
    if v.condition == "zero rng":
        return True
    if v.condition == "1":
        inner = PrimenessVerdict(False, "square-zero ideal" if isinstance(w, IdealSubset)
                                 else ("zero rng" if w is None else "zero product"), w)
        return witness_holds(E, inner)
    if v.condition == "2":
        ann = annihilator(X)
        return w.is_ideal and w <= ann and (w == ann or _products_vanish(X.R, w, w))
    if v.condition == "3":
        J, phi = w
        Jc = J.with_context(X)
        return (Jc.is_r_subrng and not J.is_zero and not phi.violations()
                and phi.is_injective and absorbs(X, phi))
    return False


# -- ideals of the form A + J ---------------------------------------------------


def _check_aj(E: DorrohRing, A: IdealSubset, J: IdealSubset) -> IdealSubset:
    X = E.source
    Jc = J.with_context(X)
    if not (A.is_ideal and Jc.is_r_ideal):
        raise HypothesisViolated("A must be an ideal of R and J an R-ideal of I")
    if not (J.mask[X.left[A.idx, :]].all() and J.mask[X.right[:, A.idx]].all()):
        raise HypothesisViolated("AI + IA is not contained in J")
    return E.direct_sum(A.members, J.members)


def _absorber(X: RRngStructure, J: IdealSubset) -> IdealSubset:
    """{r : rI + Ir inside J}."""
    mask = J.mask[X.left].all(axis=1) & J.mask[X.right].all(axis=0)
    return IdealSubset.from_mask(X.R, mask)


def prime_AJ_via_corollary(E: DorrohRing, A: IdealSubset, J: IdealSubset,
                           crosscheck: bool = True) -> PrimenessVerdict:
    K = _check_aj(E, A, J)
    X = E.source
    if J.is_whole:
        # E/(A + I) is R/A, outside the corollary's proper-J hypothesis
        verdict = is_prime_ideal(X.R, A)
        out = PrimenessVerdict(verdict, None if verdict else "R/A not prime", None,
                               {"R/A prime": verdict})
    else:
        Q = quotient_rrng(X, A, J).structure
        c1 = is_prime_rng(Q.I)
        c2 = _absorber(X, J) == A
        ob = obstruction(Q, injective=False, square_zero=False)
        conds = {"1": bool(c1), "2": c2, "3": ob is None}
        verdict = all(conds.values())
        first = next((k for k, v in conds.items() if not v), None)
        out = PrimenessVerdict(verdict, first, {"1": c1.witness, "2": None, "3": ob}.get(first), conds)
    if crosscheck:
        _crosscheck("prime A+J criterion", out.verdict, is_prime_ideal(E.ring, K), (A.members, J.members))
    return out


def semiprime_AJ_via_corollary(E: DorrohRing, A: IdealSubset, J: IdealSubset,
                               crosscheck: bool = True) -> PrimenessVerdict:
    K = _check_aj(E, A, J)
    X = E.source
    Q = quotient_rrng(X, A, J).structure
    c1 = is_semiprime_rng(Q.I)
    absorb = _absorber(X, J)
    bad_b = next((B for B in _over(X.R, A) if B != A and B <= absorb
                  and _products_vanish(X.R, B, B, A.mask)), None)
    ob = obstruction(Q, injective=False, square_zero=True)
    conds = {"1": bool(c1), "2": bad_b is None, "3": ob is None}
    verdict = all(conds.values())
    first = next((k for k, v in conds.items() if not v), None)
    out = PrimenessVerdict(verdict, first, {"1": c1.witness, "2": bad_b, "3": ob}.get(first), conds)
    if crosscheck:
        _crosscheck("semiprime A+J criterion", verdict, is_semiprime_ideal(E.ring, K),
                    (A.members, J.members))
    return out


# -- classification with a retraction --------------------------------------------


@dataclass(frozen=True)
class ClassifiedPrime:
    form: str  # "SUM" or "GRAPH"
    base: IdealSubset
    members: IdealSubset
    factor: int | None = None


def graph_ideal(E: DorrohRing, images: np.ndarray, Z: IdealSubset) -> IdealSubset:
    """{(a, -i) : a - phi(i) in Z} for a total map phi given by ``images``."""
    X = E.source
    R, I = X.R, X.I
    a = np.arange(R.order)[:, None]
    i = np.arange(I.order)[None, :]
    keep = Z.mask[R.add[a, R.neg[images[i]]]]
    rs, is_ = np.nonzero(keep)
    return E.subset((rs * I.order + I.neg[is_]).tolist())


def _require_retraction(X: RRngStructure, phi: RHomomorphism) -> None:
    bad = retraction_violation(X, phi)
    if bad is not None:
        raise NotARetraction(f"{bad[0]} fails at {bad[1:]}")


def _classify(E: DorrohRing, graphs: list[tuple[np.ndarray, int | None]], maximal: bool,
              crosscheck: bool) -> list[ClassifiedPrime]:
    X = E.source
    bases = maximal_ideals(X.R) if maximal else prime_ideals(X.R)
    full = list(range(X.I.order))
    out: list[ClassifiedPrime] = [ClassifiedPrime("SUM", A, E.direct_sum(A.members, full))
                                  for A in bases]
    seen = {c.members for c in out}
    for images, factor in graphs:
        for Z in bases:
            if Z.mask[images].all():
                continue
            K = graph_ideal(E, images, Z)
            if K not in seen:
                seen.add(K)
                out.append(ClassifiedPrime("GRAPH", Z, K, factor))
    if crosscheck:
        test = is_maximal_ideal if maximal else is_prime_ideal
        oracle = {K for K in enumerate_ideals(E.ring) if test(E.ring, K)}
        if seen != oracle:
            extra = sorted(K.members for K in seen - oracle)
            missing = sorted(K.members for K in oracle - seen)
            raise TheoremDiscrepancy("maximal ideal classification" if maximal
                                     else "prime ideal classification",
                                     len(oracle), len(seen), {"extra": extra, "missing": missing})
    return out


def classify_prime_ideals(E: DorrohRing, phi: RHomomorphism, maximal: bool = False,
                          crosscheck: bool = True) -> list[ClassifiedPrime]:
    _require_retraction(E.source, phi)
    return _classify(E, [(np.asarray(phi.images), None)], maximal, crosscheck)


def classify_maximal_ideals(E: DorrohRing, phi: RHomomorphism,
                            crosscheck: bool = True) -> list[ClassifiedPrime]:
    return classify_prime_ideals(E, phi, maximal=True, crosscheck=crosscheck)


def classify_primes_direct_sum(E: DorrohRing, phis: Sequence[RHomomorphism],
                               maximal: bool = False, crosscheck: bool = True) -> list[ClassifiedPrime]:
    """I = J_1 x ... x J_n with a retraction phi_k on each factor."""
    X = E.source
    if len(X.factors) != len(phis) or not X.factors:
        raise ValueError("need one retraction per direct factor of I")
    graphs = []
    for k, (P, phi) in enumerate(zip(X.factors, phis)):
        _require_retraction(P, phi)
        graphs.append((np.asarray(phi.images)[factor_projection(X, k)], k))
    return _classify(E, graphs, maximal, crosscheck)


def is_local(R: FiniteRng) -> bool:
    return len(maximal_ideals(R)) == 1


def local_via_corollary(E: DorrohRing, phi: RHomomorphism, crosscheck: bool = True) -> bool:
    """R local and phi(I) a proper subset of R, for commutative E."""
    if not E.ring.is_commutative:
        raise NotCommutative(f"{E.ring.name} is not commutative")
    _require_retraction(E.source, phi)
    verdict = is_local(E.R) and len(phi.image()) < E.R.order
    if crosscheck:
        _crosscheck("local criterion", verdict, is_local(E.ring), E.ring.name)
    return verdict
