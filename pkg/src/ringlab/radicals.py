"""Jacobson and upper nil radicals, by definition and by the membership
criteria for E(R, I)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .core import FiniteRng
from .errors import TheoremDiscrepancy
from .ideals import enumerate_ideals, generated_ideal, is_nil_ideal
from .rrng import DorrohRing
from .subsets import IdealSubset


@dataclass(frozen=True)
class RadicalReport:
    radical: IdealSubset
    method: str  # "definition" or "theorem"
    witnesses: dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def members(self) -> tuple[int, ...]:
        return self.radical.members


@dataclass(frozen=True)
class QuasiRegularity:
    holds: bool
    witness: int | None

    def __bool__(self) -> bool:
        return self.holds


def _qr(I: FiniteRng, side: str) -> np.ndarray:
    key = ("qr", side)
    if key not in I.cache:
        w = kernels.quasi_regular_witnesses(I.add, I.mul, side == "left")
        w.setflags(write=False)
        I.cache[key] = w
    return I.cache[key]


def is_quasi_regular(I: FiniteRng, i: int, side: str = "left") -> QuasiRegularity:
    """Left: i + k + ki = 0 for some k.  Right: i + k + ik = 0."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    k = int(_qr(I, side)[i])
    return QuasiRegularity(k >= 0, k if k >= 0 else None)


def jacobson_radical(I: FiniteRng) -> RadicalReport:
    if "jacobson" in I.cache:
        return I.cache["jacobson"]
    ql = _qr(I, "left") >= 0
    qr = _qr(I, "right") >= 0
    left_set = ql[I.mul].all(axis=0)  # column i holds j*i over all j
    right_set = qr[I.mul].all(axis=1)  # row i holds i*j
    if not np.array_equal(left_set, right_set):
        bad = int(np.flatnonzero(left_set != right_set)[0])
        raise TheoremDiscrepancy("left and right radical sets agree", bool(left_set[bad]),
                                 bool(right_set[bad]), bad)
    if not (ql[left_set].all() and qr[left_set].all()):
        raise TheoremDiscrepancy("radical members are quasi-regular", True, False, None)
    rad = IdealSubset.from_mask(I, left_set)
    if not rad.is_ideal:
        raise TheoremDiscrepancy("radical is an ideal", True, False, rad.members)
    wl = _qr(I, "left")
    report = RadicalReport(rad, "definition", {x: int(wl[x]) for x in rad.members})
    I.cache["jacobson"] = report
    return report


def unital_radical(R: FiniteRng) -> IdealSubset:
    """{i : 1 - ji has a left inverse for every j}, for unital R."""
    if R.unit is None:
        raise ValueError("needs a unital ring")
    one_minus = R.add[R.unit, R.neg[R.mul]]  # [j, i] -> 1 - ji
    has_left_inv = (R.mul == R.unit).any(axis=0)  # x with kx = 1 for some k
    return IdealSubset.from_mask(R, has_left_inv[one_minus].all(axis=0))


# -- membership criteria in E(R, I) ------------------------------------------


def _criterion_masks(E: DorrohRing, radR: np.ndarray, radI: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Over all pairs (r, i) of E: condition with jr + ji, and with rj + ij."""
    X = E.source
    I = X.I
    r, i = E.r_part, E.i_part
    # [x, j]: j r + j i
    c2 = I.add[X.right[:, r].T, I.mul[:, i].T]
    # [x, j]: r j + i j
    c3 = I.add[X.left[r, :], I.mul[i, :]]
    return radR[r] & radI[c2].all(axis=1), radR[r] & radI[c3].all(axis=1)


def _criterion(E: DorrohRing, kind: str) -> np.ndarray:
    key = ("criterion", kind)
    if key in E.ring.cache:
        return E.ring.cache[key]
    rad = jacobson_radical if kind == "rad" else upper_nil_radical
    m2, m3 = _criterion_masks(E, rad(E.R).radical.mask, rad(E.I).radical.mask)
    if not np.array_equal(m2, m3):
        x = int(np.flatnonzero(m2 != m3)[0])
        raise TheoremDiscrepancy(f"{kind} criterion (2) agrees with (3)", bool(m2[x]),
                                 bool(m3[x]), E.decode(x))
    m2.setflags(write=False)
    E.ring.cache[key] = m2
    return m2


def rad_theorem_radical(E: DorrohRing) -> RadicalReport:
    return RadicalReport(IdealSubset.from_mask(E.ring, _criterion(E, "rad")), "theorem")


def nil_theorem_radical(E: DorrohRing) -> RadicalReport:
    return RadicalReport(IdealSubset.from_mask(E.ring, _criterion(E, "nil")), "theorem")


def _membership(E: DorrohRing, r: int, i: int, kind: str, crosscheck: bool) -> bool:
    x = E.encode(r, i)
    verdict = bool(_criterion(E, kind)[x])
    if crosscheck:
        rad = jacobson_radical if kind == "rad" else upper_nil_radical
        actual = x in rad(E.ring).radical
        if actual != verdict:
            raise TheoremDiscrepancy(f"{kind} membership criterion", actual, verdict, (r, i))
    return verdict


def rad_membership_theorem(E: DorrohRing, r: int, i: int, crosscheck: bool = True) -> bool:
    """r in rad(R) and jr + ji in rad(I) for all j."""
    return _membership(E, r, i, "rad", crosscheck)


def nil_membership_theorem(E: DorrohRing, r: int, i: int, crosscheck: bool = True) -> bool:
    """r in Nil*(R) and jr + ji in Nil*(I) for all j."""
    return _membership(E, r, i, "nil", crosscheck)


def rad_direct_sum_criterion(E: DorrohRing) -> bool:
    """Whether rad(E) = rad(R) + rad(I); asserts the two one-sided tests agree."""
    X = E.source
    radR = jacobson_radical(E.R).radical
    radI = jacobson_radical(E.I).radical
    equal = jacobson_radical(E.ring).radical == E.direct_sum(radR.members, radI.members)
    i_radR = bool(radI.mask[X.right[:, radR.idx]].all())
    radR_i = bool(radI.mask[X.left[radR.idx, :]].all())
    if not (equal == i_radR == radR_i):
        raise TheoremDiscrepancy("direct-sum radical criteria agree", equal, (i_radR, radR_i))
    return equal


# -- upper nil radical -----------------------------------------------------------


def nilpotent_mask(I: FiniteRng) -> np.ndarray:
    key = "nilpotent_mask"
    if key not in I.cache:
        x = np.arange(I.order)
        p = x.copy()
        seen = p == 0
        for _ in range(I.order):
            p = I.mul[p, x]
            seen |= p == 0
        seen.setflags(write=False)
        I.cache[key] = seen
    return I.cache[key]


def upper_nil_radical(I: FiniteRng, crosscheck: bool = False) -> RadicalReport:
    """{i : the ideal generated by i is nil}."""
    if "nil" not in I.cache:
        nilp = nilpotent_mask(I)
        mask = np.zeros(I.order, dtype=bool)
        for x in np.flatnonzero(nilp):
            if mask[x]:
                continue
            gen = generated_ideal(I, [int(x)])
            if nilp[gen.idx].all():
                mask[gen.idx] = True
        rad = IdealSubset.from_mask(I, mask)
        if not rad.is_ideal:
            raise TheoremDiscrepancy("upper nil radical is an ideal", True, False, rad.members)
        I.cache["nil"] = RadicalReport(
            rad, "definition", {x: I.nilpotency_index(x) for x in rad.members})
    report = I.cache["nil"]
    if crosscheck:
        nil_ideals = [K for K in enumerate_ideals(I) if is_nil_ideal(I, K)]
        union = np.zeros(I.order, dtype=bool)
        for K in nil_ideals:
            union |= K.mask
        if not np.array_equal(union, report.radical.mask):
            raise TheoremDiscrepancy("upper nil radical is the sum of nil ideals",
                                     tuple(np.flatnonzero(union)), report.members)
    return report


def power_form_check(E: DorrohRing, r: int, i: int, n: int, side: str = "left") -> int:
    """Smallest j with (r, i)^n = (r^n, jr + ji + r^(n-1) i), or with
    side="right", smallest k with (r, i)^n = (r^n, rk + ik + i r^(n-1))."""
    if n < 1:
        raise ValueError("n must be positive")
    X = E.source
    R, I = X.R, X.I
    pr, pi = E.decode(E.ring.power(E.encode(r, i), n))
    if pr != R.power(r, n):
        raise TheoremDiscrepancy("first coordinate of the power", R.power(r, n), pr, (r, i, n))
    rn1 = R.power(r, n - 1)
    if side == "left":
        cands = I.add[I.add[X.right[:, r], I.mul[:, i]], X.left[rn1, i]]
    else:
        cands = I.add[I.add[X.left[r, :], I.mul[i, :]], X.right[i, rn1]]
    hits = np.flatnonzero(cands == pi)
    if not len(hits):
        raise TheoremDiscrepancy(f"{side} power form", "some j", None, (r, i, n))
    return int(hits[0])
