import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringlab.core import canonical_map, cyclic_ring, direct_product, matrix_ring, upper_triangular_ring
from ringlab.errors import AxiomViolation, DimensionMismatch, NotAnIdeal, NotARetraction
from ringlab.ideals import enumerate_ideals
from ringlab.rrng import (
    annihilator, dorroh_extend, enumerate_r_homs, find_retractions, hom_from_table, ideal_as_rrng,
    inclusion_hom, is_centrally_generated, is_multiplicative_retraction, product_rrng,
    psi_automorphism, retraction_violation, revalidate_rrng, rrng_via_map, trivial_rrng,
    validate_rrng,
)
from ringlab.core import revalidate
from ringlab.subsets import IdealSubset

F2 = cyclic_ring(2)
Z4 = cyclic_ring(4)
T2 = upper_triangular_ring(F2, 2)
M2 = matrix_ring(F2, 2)


def t2_m2():
    return rrng_via_map(canonical_map(T2, M2))


def z4_on_z2(trivial=True):
    return rrng_via_map(canonical_map(Z4, F2), trivial=trivial)


def test_reduction_action_is_valid():
    X = z4_on_z2()
    assert revalidate_rrng(X) == []
    assert not X.I.mul.any()


def test_matrix_action_is_valid():
    X = t2_m2()
    assert (X.R.order, X.I.order) == (8, 16)
    assert revalidate_rrng(X) == []


def test_transposed_left_action_rejected():
    X = t2_m2()
    with pytest.raises(AxiomViolation) as info:
        validate_rrng(X.R, X.I, X.right.T, X.right)
    assert "left module associativity" in info.value.axioms
    v = next(v for v in info.value.violations if v.axiom == "left module associativity")
    r, s, i = v.witness
    bad = X.right.T
    assert bad[X.R.mul[r, s], i] != bad[r, bad[s, i]]


def test_action_dimension_mismatch():
    X = t2_m2()
    with pytest.raises(DimensionMismatch):
        validate_rrng(X.R, X.I, X.left[:4], X.right)


def test_ideal_as_rrng_examples():
    X = ideal_as_rrng(Z4, [0, 2])
    assert X.I.order == 2 and not X.I.mul.any()
    Z6 = cyclic_ring(6)
    Y = ideal_as_rrng(Z6, range(6))
    assert np.array_equal(Y.I.mul, Z6.mul)
    W = ideal_as_rrng(cyclic_ring(12), [0, 6])
    assert W.I.order == 2 and not W.I.mul.any()
    with pytest.raises(NotAnIdeal):
        ideal_as_rrng(M2, [0, M2.index_of("[0,1;0,0]")])


def test_dorroh_examples():
    E = dorroh_extend(trivial_rrng(ideal_as_rrng(F2, [0, 1])))
    assert E.order == 4
    x = E.encode(0, 1)
    assert E.ring.mul[x, x] == E.encode(0, 0)
    E = dorroh_extend(ideal_as_rrng(F2, [0, 1]))
    x = E.encode(1, 1)
    assert E.ring.mul[x, x] == x
    E = dorroh_extend(t2_m2())
    assert E.order == 128
    assert revalidate(E.ring) == []
    assert E.ring.unit == E.encode(T2.unit, 0)


def test_annihilator_examples():
    assert annihilator(z4_on_z2()).members == (0, 2)
    assert annihilator(t2_m2()).members == (0,)
    zero_i = rrng_via_map(canonical_map(Z4, cyclic_ring(1)))
    assert annihilator(zero_i).members == (0, 1, 2, 3)


def test_central_generation():
    assert is_centrally_generated(z4_on_z2())
    c = is_centrally_generated(t2_m2())
    assert not c
    # central elements of M2 under T2 are 0 and 1; their T2-span is T2 itself (8 elements)
    assert len(c.central) == 2 and len(c.generated) == 8
    assert is_centrally_generated(rrng_via_map(canonical_map(Z4, cyclic_ring(1))))


def test_homs_from_trivial_z2_into_z4():
    X = z4_on_z2()
    homs = enumerate_r_homs(X, X.whole)
    assert [h.key for h in homs] == [(0, 0), (0, 2)]
    assert all(h.violations() == [] for h in homs)
    assert [h.key for h in find_retractions(X)] == [(0, 0), (0, 2)]


def test_homs_on_zero_domain():
    X = z4_on_z2()
    homs = enumerate_r_homs(X, X.zero)
    assert len(homs) == 1 and homs[0].key == (0,)


def test_identity_is_hom_on_z6():
    Z6 = cyclic_ring(6)
    X = ideal_as_rrng(Z6, range(6))
    keys = [h.key for h in enumerate_r_homs(X, X.whole)]
    assert tuple(range(6)) in keys


def test_retractions():
    X = ideal_as_rrng(Z4, [0, 2])
    assert is_multiplicative_retraction(X, inclusion_hom(X))
    assert find_retractions(t2_m2()) == []
    P = product_rrng([ideal_as_rrng(F2, [0, 1])] * 2)
    first = hom_from_table(P, [0, 0, 1, 1])
    assert not is_multiplicative_retraction(P, first)
    assert retraction_violation(P, first) is not None
    zero = hom_from_table(z4_on_z2(), [0, 0])
    assert is_multiplicative_retraction(z4_on_z2(), zero)


def test_psi_on_z4_ideal():
    X = ideal_as_rrng(Z4, [0, 2])
    E = dorroh_extend(X)
    psi = psi_automorphism(E, inclusion_hom(X))
    i2 = X.I.index_of("2")
    assert E.decode(psi(E.encode(1, i2))) == (3, i2)
    for r in range(4):
        assert psi(E.encode(r, 0)) == E.encode(r, 0)
    assert all(psi(psi(x)) == x for x in range(E.order))


def test_psi_requires_retraction():
    P = product_rrng([ideal_as_rrng(F2, [0, 1])] * 2)
    with pytest.raises(NotARetraction):
        psi_automorphism(dorroh_extend(P), hom_from_table(P, [0, 0, 1, 1]))


def test_catalog_structures(extensions):
    for name, E in extensions:
        X = E.source
        assert revalidate(E.ring) == [], name
        assert E.ideal_copy.is_ideal, name
        base = E.base_copy
        assert base.is_multiplicatively_closed and E.ring.unit in base, name
        ann = annihilator(X)
        assert ann.is_ideal
        assert not X.left[ann.idx].any() and not X.right[:, ann.idx].any()
        for phi in find_retractions(X):
            psi = psi_automorphism(E, phi)
            assert psi.is_morphism and psi.is_injective
            assert np.array_equal(psi.map[psi.map], np.arange(E.order))
            assert set(psi.map[base.idx].tolist()) == set(base.members)


def test_central_generation_gives_equal_products(extensions):
    for name, E in extensions:
        X = E.source
        if not is_centrally_generated(X):
            continue
        for A in enumerate_ideals(X.R):
            AI = set(X.left[np.ix_(A.idx, range(X.I.order))].ravel().tolist())
            IA = set(X.right[:, A.idx].ravel().tolist())
            assert AI == IA, name
            # closure of the products is an R-ideal
            from ringlab.ideals import generated_ideal
            G = generated_ideal(X.I, AI, "R-ideal", X)
            assert G.with_context(X).is_r_ideal


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([2, 3, 4, 6, 8, 9, 12]), st.data())
def test_ideal_rrng_properties(n, data):
    R = cyclic_ring(n)
    d = data.draw(st.sampled_from([d for d in range(1, n + 1) if n % d == 0]))
    K = sorted({(d * k) % n for k in range(n)})
    X = ideal_as_rrng(R, K)
    E = dorroh_extend(X)
    assert revalidate(E.ring) == []
    assert E.ideal_copy.is_ideal
    inc = inclusion_hom(X)
    assert is_multiplicative_retraction(X, inc)
    ann = annihilator(X)
    expected = [r for r in range(n) if all((r * k) % n == 0 for k in K)]
    assert list(ann.members) == expected
    for h in enumerate_r_homs(X, X.whole):
        assert h.violations() == []
