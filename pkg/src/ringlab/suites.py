"""Theorem-verification suites.

Each suite runs a family of structural statements about E(R, I) against
brute-force computations on every given instance.  A disagreement is an
implementation failure and is recorded (never silently dropped).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np

from .errors import TheoremDiscrepancy
from .ideals import (
    IdealDecomposition,
    decompose_ideal,
    decomposition_violations,
    direct_sum_ideal_tests,
    enumerate_ideals,
    generated_ideal,
    is_nil_ideal,
    is_nilpotent_ideal,
    r_span,
    reconstruct_ideal,
)
from .primes import (
    absorbs,
    classify_maximal_ideals,
    classify_prime_ideals,
    classify_primes_direct_sum,
    is_local,
    is_prime_ideal,
    is_semiprime_ideal,
    local_via_corollary,
    prime_AJ_via_corollary,
    prime_via_theorem,
    semiprime_AJ_via_corollary,
    semiprime_via_theorem,
    witness_holds,
    is_prime_rng,
    is_semiprime_rng,
)
from .radicals import (
    _criterion,
    jacobson_radical,
    power_form_check,
    rad_direct_sum_criterion,
    unital_radical,
    upper_nil_radical,
)
from .rrng import (
    DorrohRing,
    annihilator,
    enumerate_r_homs,
    find_retractions,
    graph_subset,
    hom_target,
    is_centrally_generated,
    psi_automorphism,
)
from .subsets import IdealSubset

LEFT_ORDER_LIMIT = 64


@dataclass
class Failure:
    instance: str
    check: str
    expected: Any
    actual: Any
    witness: Any = None


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class _Recorder:
    def __init__(self, result: SuiteResult, instance: str):
        self.result = result
        self.instance = instance

    def check(self, what: str, expected: Any, actual: Any, witness: Any = None) -> bool:
        self.result.cases += 1
        if expected != actual:
            self.result.failures.append(Failure(self.instance, what, expected, actual, witness))
            return False
        return True

    def masks(self, what: str, expected: np.ndarray, actual: np.ndarray, E: DorrohRing | None = None) -> None:
        self.result.cases += len(expected)
        diff = np.flatnonzero(expected != actual)
        if len(diff):
            x = int(diff[0])
            self.result.failures.append(Failure(
                self.instance, what, bool(expected[x]), bool(actual[x]),
                E.decode(x) if E is not None else x))

    def guard(self, fn: Callable[[], Any]) -> Any:
        """Run a self-checking call, turning a discrepancy into a failure."""
        try:
            return fn()
        except TheoremDiscrepancy as e:
            self.result.cases += 1
            self.result.failures.append(Failure(self.instance, e.what, e.expected, e.actual, e.witness))
            return None


# -- radicals -------------------------------------------------------------------


def suite_rad(rec: _Recorder, E: DorrohRing) -> None:
    X = E.source
    rad_e = rec.guard(lambda: jacobson_radical(E.ring))
    theorem = rec.guard(lambda: _criterion(E, "rad"))
    if rad_e is None or theorem is None:
        return
    rec.masks("rad(E) membership criterion", rad_e.radical.mask, theorem, E)
    rad_i = jacobson_radical(X.I).radical
    rec.check("rad(I) is an R-ideal", True, rad_i.with_context(X).is_r_ideal, rad_i.members)
    rec.masks("I meets rad(E) in rad(I)", rad_i.mask, rad_e.radical.mask[E.ideal_copy.idx])
    direct = rec.guard(lambda: rad_direct_sum_criterion(E))
    if is_centrally_generated(X):
        rec.check("centrally generated I gives rad(E) = rad(R) + rad(I)", True, direct)
    for ring in (X.R, E.ring):
        rec.check(f"unital radical of {ring.name}", jacobson_radical(ring).members,
                  unital_radical(ring).members)
    nil_e = upper_nil_radical(E.ring).radical
    rec.check("Nil*(E) inside rad(E)", True, nil_e <= rad_e.radical, nil_e.members)


def suite_nil(rec: _Recorder, E: DorrohRing) -> None:
    X = E.source
    nil_e = rec.guard(lambda: upper_nil_radical(E.ring, crosscheck=True))
    theorem = rec.guard(lambda: _criterion(E, "nil"))
    if nil_e is None or theorem is None:
        return
    rec.masks("Nil*(E) membership criterion", nil_e.radical.mask, theorem, E)
    nil_i = upper_nil_radical(X.I).radical
    rec.check("Nil*(I) is an R-ideal", True, nil_i.with_context(X).is_r_ideal, nil_i.members)
    rec.masks("(0, i) in Nil*(E) iff i in Nil*(I)", nil_i.mask,
              nil_e.radical.mask[E.ideal_copy.idx])
    same_r = jacobson_radical(X.R).radical == upper_nil_radical(X.R).radical
    same_i = jacobson_radical(X.I).radical == upper_nil_radical(X.I).radical
    if same_r and same_i:
        rec.check("Nil*(E) = rad(E) when the radicals of R and I agree",
                  jacobson_radical(E.ring).members, nil_e.members)
    for x in range(E.order):
        r, i = E.decode(x)
        for n in (1, 2, 3):
            for side in ("left", "right"):
                j = rec.guard(lambda: power_form_check(E, r, i, n, side))
                if j is not None:
                    rec.result.cases += 1
                    if n == 1 and side == "left":
                        rec.check("power form base case witness", 0, j, (r, i))


# -- ideal correspondence -----------------------------------------------------------


def _absorbed(X, A: IdealSubset, J: IdealSubset) -> bool:
    return bool(J.mask[X.left[A.idx, :]].all() and J.mask[X.right[:, A.idx]].all())


def suite_ideal_correspondence(rec: _Recorder, E: DorrohRing) -> None:
    X = E.source
    ann = annihilator(X)
    for K in enumerate_ideals(E.ring):
        d = decompose_ideal(E, K)
        bad = decomposition_violations(d)
        if not rec.check("decomposition satisfies its conditions", [], [b[0] for b in bad], K.members):
            continue
        back = reconstruct_ideal(E, d)
        rec.check("reconstruct(decompose(K)) = K", K.members, back.members)
        rec.check("decompose(reconstruct(d)) equivalent to d", True,
                  decompose_ideal(E, back).equivalent(d), K.members)
        J = d.J.with_context(X)
        rec.check("(1) J is an R-ideal iff AI + IA inside J", J.is_r_ideal,
                  _absorbed(X, d.A, d.J), K.members)
        a_is_z = d.A == d.Z
        is_sum = K == E.direct_sum(d.A.members, d.J.members)
        rec.check("(2) A = Z iff phi = 0 iff K = A + J", (a_is_z, a_is_z),
                  (d.is_zero_map(), is_sum), K.members)
        if d.is_injective():
            rec.check("(3) injective phi gives Z inside ann(I)", True, d.Z <= ann, K.members)
        ker = d.kernel()
        inner = E.direct_sum(d.Z.members, ker.members)
        rec.check("(4) Z + ker(phi) is an ideal inside K", (True, True),
                  (inner.is_ideal, inner <= K), K.members)
        rec.check("(4) ker(phi) is an R-ideal", True, ker.with_context(X).is_r_ideal, K.members)
    _extension_corollary(rec, E)
    _direct_sum_lemma(rec, E)


def extension_ideal(E: DorrohRing, h, J: IdealSubset) -> IdealSubset:
    """{(a, -j) : j in J, a + Z = h(j)} for a total R-homomorphism h: I -> R/Z."""
    X = E.source
    proj = h.projection
    return E.pairs((a, int(X.I.neg[j])) for j in J.members
                   for a in range(X.R.order) if proj[a] == h.images[j])


def _extension_corollary(rec: _Recorder, E: DorrohRing) -> None:
    """Restrictions of total R-homomorphisms I -> R/Z to R-subrngs J
    containing the kernel give ideals.  Without the kernel condition the
    claim fails (zero map, J a non-ideal subrng), so that case is skipped."""
    X = E.source
    subrngs = [J for J in enumerate_ideals(X.I, "R-subrng", X)]
    for Z in enumerate_ideals(X.R):
        homs = enumerate_r_homs(X, X.whole, None if Z.is_zero else Z)
        for h in homs:
            ker = h.kernel()
            for J in subrngs:
                if not ker <= J:
                    continue
                K = extension_ideal(E, h, J)
                rec.check("restricted total homomorphism gives an ideal", True, K.is_ideal,
                          (Z.members, J.members, h.key))


def _direct_sum_lemma(rec: _Recorder, E: DorrohRing) -> None:
    X = E.source
    for A in enumerate_ideals(X.R):
        for J in enumerate_ideals(X.I, "R-ideal", X):
            cases = rec.guard(lambda: direct_sum_ideal_tests(E, A, J))
            if cases is not None:
                rec.result.cases += len(cases)


# -- nil / nilpotent ideals -----------------------------------------------------------


def suite_nil_ideals(rec: _Recorder, E: DorrohRing) -> None:
    X = E.source
    for K in enumerate_ideals(E.ring):
        d = decompose_ideal(E, K)
        ker = d.kernel()
        for name, test in (("nilpotent", is_nilpotent_ideal), ("nil", is_nil_ideal)):
            k, a, j, kk = (test(E.ring, K), test(X.R, d.A), test(X.I, d.J), test(X.I, ker))
            rec.check(f"{name}: K iff (A and J) iff (A and ker phi)",
                      (bool(k), bool(k)), (bool(a) and bool(j), bool(a) and bool(kk)), K.members)
            if name == "nilpotent" and k and a and kk:
                rec.check("nilpotency exponent of K at most n*m", True,
                          k.exponent <= a.exponent * kk.exponent,
                          (K.members, k.exponent, a.exponent, kk.exponent))
    for J in enumerate_ideals(X.I):
        K = generated_ideal(X.I, J.members, "R-ideal", X)
        rec.check("generated R-ideal equals RJR", K.members, r_span(X, J).members, J.members)
        cube = X.I.mul[X.I.mul[np.ix_(K.idx, K.idx)][:, :, None], K.idx[None, None, :]]
        rec.check("K^3 inside J", True, bool(J.mask[cube].all()), J.members)
        for name, test in (("nilpotent", is_nilpotent_ideal), ("nil", is_nil_ideal)):
            rec.check(f"J {name} iff K {name}", bool(test(X.I, J)), bool(test(X.I, K)), J.members)


# -- semiprime / prime ------------------------------------------------------------------


def _aj_pairs(E: DorrohRing) -> Iterable[tuple[IdealSubset, IdealSubset]]:
    X = E.source
    for A in enumerate_ideals(X.R):
        for J in enumerate_ideals(X.I, "R-ideal", X):
            if _absorbed(X, A, J):
                yield A, J


def suite_semiprime(rec: _Recorder, E: DorrohRing) -> None:
    X = E.source
    v = rec.guard(lambda: semiprime_via_theorem(E))
    if v is not None:
        rec.check("semiprime witness re-verifies", True, witness_holds(E, v), v.condition)
    ann = annihilator(X)
    i_semiprime = bool(is_semiprime_rng(X.I))
    e_semiprime = bool(is_semiprime_rng(E.ring))
    if i_semiprime:
        for J in enumerate_ideals(X.I, "R-subrng", X):
            if J.is_zero:
                continue
            for phi in enumerate_r_homs(X, J):
                if absorbs(X, phi):
                    rec.check("absorbing homomorphism on semiprime I is injective", True,
                              phi.is_injective, (J.members, phi.key))
    if e_semiprime and is_semiprime_ideal(X.R, ann):
        rec.check("semiprime E with semiprime ann(I) has R semiprime", True,
                  bool(is_semiprime_rng(X.R)))
    if is_centrally_generated(X):
        if i_semiprime:
            rec.check("central semiprime I has semiprime ann(I)", True,
                      is_semiprime_ideal(X.R, ann), ann.members)
        if bool(is_prime_rng(X.I)):
            rec.check("central prime I has prime ann(I)", True, is_prime_ideal(X.R, ann), ann.members)
        if e_semiprime:
            rec.check("central I and semiprime E give semiprime R", True, bool(is_semiprime_rng(X.R)))
    for A, J in _aj_pairs(E):
        rec.guard(lambda: semiprime_AJ_via_corollary(E, A, J))
        rec.result.cases += 1


def suite_prime(rec: _Recorder, E: DorrohRing) -> None:
    X = E.source
    if X.I.order > 1:
        v = rec.guard(lambda: prime_via_theorem(E))
        if v is not None:
            rec.check("prime witness re-verifies", True, witness_holds(E, v), v.condition)
        if X.embedding is not None:
            rec.check("E(R, K) is not prime for an ideal K of R", False, bool(is_prime_rng(E.ring)))
        for A, J in _aj_pairs(E):
            rec.guard(lambda: prime_AJ_via_corollary(E, A, J))
            rec.result.cases += 1
    for phi in find_retractions(X):
        subrngs = enumerate_ideals(X.I, "R-subrng", X)
        r_ideals = enumerate_ideals(X.I, "R-ideal", X)
        rec.check("with a retraction, R-subrngs are the R-ideals",
                  [J.members for J in subrngs], [J.members for J in r_ideals], phi.key)
        r_prime = bool(is_prime_rng(X.R))
        for J in r_ideals:
            if J.is_zero:
                continue
            graph = graph_subset(E, phi, J)
            plain = E.direct_sum([0], J.members)
            expected = J.is_whole and r_prime
            rec.check("J_phi prime iff 0+J prime iff (J = I and R prime)",
                      (expected, expected),
                      (is_prime_ideal(E.ring, graph), is_prime_ideal(E.ring, plain)),
                      (phi.key, J.members))
            for psi in enumerate_r_homs(X, J):
                if not absorbs(X, psi):
                    continue
                Jpsi = graph_subset(E, psi, J)
                if Jpsi.is_ideal and is_prime_ideal(E.ring, Jpsi):
                    agrees = all(psi.images[j] == phi.images[j] for j in J.members)
                    rec.check("prime J_psi forces psi = phi on J", True, agrees,
                              (phi.key, J.members, psi.key))


# -- classification, involution, left ideals -----------------------------------------------


def suite_classification(rec: _Recorder, E: DorrohRing) -> None:
    X = E.source
    results = []
    for phi in find_retractions(X):
        primes = rec.guard(lambda: classify_prime_ideals(E, phi))
        maxes = rec.guard(lambda: classify_maximal_ideals(E, phi))
        if primes is not None:
            rec.result.cases += len(primes)
            results.append(frozenset(c.members for c in primes))
            for c in primes:
                if c.form == "GRAPH":
                    rec.check("GRAPH form has phi(I) outside Z", False,
                              bool(c.base.mask[phi.images].all()), c.base.members)
        if maxes is not None:
            rec.result.cases += len(maxes)
        if E.ring.is_commutative:
            rec.guard(lambda: local_via_corollary(E, phi))
            rec.result.cases += 1
    if len(set(results)) > 1:
        rec.check("classification independent of the retraction", 1, len(set(results)))
    if X.factors:
        per_factor = [find_retractions(P) for P in X.factors]
        if all(per_factor):
            listed = rec.guard(lambda: classify_primes_direct_sum(E, [p[0] for p in per_factor]))
            if listed is not None:
                rec.result.cases += len(listed)


def suite_psi(rec: _Recorder, E: DorrohRing) -> None:
    X = E.source
    base = E.base_copy
    for phi in find_retractions(X):
        psi = psi_automorphism(E, phi)
        rec.check("psi is a ring homomorphism", [], [v.axiom for v in psi.violations()], phi.key)
        rec.check("psi is bijective", True, psi.is_injective and psi.is_surjective, phi.key)
        twice = psi.compose(psi)
        rec.check("psi squared is the identity", True,
                  bool(np.array_equal(twice.map, np.arange(E.order))), phi.key)
        image = E.subset(psi.map[E.ideal_copy.idx].tolist())
        rec.check("psi(0 + I) = I_phi", graph_subset(E, phi).members, image.members, phi.key)
        rec.check("psi fixes R + 0", base.members,
                  E.subset(psi.map[base.idx].tolist()).members, phi.key)


def suite_left(rec: _Recorder, E: DorrohRing) -> None:
    if E.order > LEFT_ORDER_LIMIT:
        return
    X = E.source
    for K in enumerate_ideals(E.ring, "left"):
        d = decompose_ideal(E, K, "left")
        bad = decomposition_violations(d)
        if not rec.check("left decomposition satisfies its conditions", [], [b[0] for b in bad],
                         K.members):
            continue
        back = reconstruct_ideal(E, d)
        rec.check("left round trip", K.members, back.members)
        rec.check("reconstruction is a left ideal", True, back.is_left_ideal, K.members)
        ker = d.kernel()
        rec.check("ker(phi) is a left R-ideal", True, ker.with_context(X).is_left_r_ideal, K.members)


SUITES: dict[str, Callable[[_Recorder, DorrohRing], None]] = {
    "rad": suite_rad,
    "nil": suite_nil,
    "ideal-correspondence": suite_ideal_correspondence,
    "nil-ideals": suite_nil_ideals,
    "semiprime": suite_semiprime,
    "prime": suite_prime,
    "classification": suite_classification,
    "psi": suite_psi,
    "left": suite_left,
}


def run_suite(name: str, instances: Iterable[tuple[str, DorrohRing]]) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; have {', '.join(SUITES)}")
    result = SuiteResult(name)
    for label, E in instances:
        SUITES[name](_Recorder(result, label), E)
    return result


def run_suites(instances: list[tuple[str, DorrohRing]], names: Iterable[str] | None = None) -> list[SuiteResult]:
    return [run_suite(n, instances) for n in (names or SUITES)]
