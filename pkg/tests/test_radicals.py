import pytest
from hypothesis import given, settings, strategies as st

import oracle
from ringlab.core import cyclic_ring, direct_product, matrix_ring, trivial_mult_rng, upper_triangular_ring
from ringlab.radicals import (
    is_quasi_regular, jacobson_radical, nil_membership_theorem, nil_theorem_radical,
    power_form_check, rad_direct_sum_criterion, rad_membership_theorem, rad_theorem_radical,
    unital_radical, upper_nil_radical,
)

F2 = cyclic_ring(2)
M2 = matrix_ring(F2, 2)
T2 = upper_triangular_ring(F2, 2)


def test_quasi_regularity_examples():
    T = trivial_mult_rng(cyclic_ring(5))
    for i in range(5):
        q = is_quasi_regular(T, i)
        assert q and q.witness == T.neg[i]
    Z4 = cyclic_ring(4)
    q = is_quasi_regular(Z4, 2)
    assert q and q.witness == 2
    assert not is_quasi_regular(M2, M2.index_of("[1,0;0,0]"))
    with pytest.raises(ValueError):
        is_quasi_regular(Z4, 1, "middle")


def test_quasi_regular_witness_equation():
    for R in (M2, T2, cyclic_ring(12)):
        for i in range(R.order):
            for side in ("left", "right"):
                q = is_quasi_regular(R, i, side)
                if q:
                    k = q.witness
                    prod = R.mul[k, i] if side == "left" else R.mul[i, k]
                    assert R.add[R.add[i, k], prod] == 0


def test_jacobson_examples():
    assert jacobson_radical(cyclic_ring(4)).members == (0, 2)
    assert jacobson_radical(M2).members == (0,)
    assert [T2.labels[x] for x in jacobson_radical(T2).members] == ["[0,0;0,0]", "[0,1;0,0]"]


def test_matrix_example_radical(catalog):
    E = catalog("t2_m2")
    rad = jacobson_radical(E.ring)
    e12r, e12i = E.R.index_of("[0,1;0,0]"), E.I.index_of("[0,1;0,0]")
    assert rad.members == (0, E.encode(e12r, e12i))
    assert rad_theorem_radical(E).radical == rad.radical
    assert rad_membership_theorem(E, e12r, e12i)
    assert not rad_direct_sum_criterion(E)
    assert upper_nil_radical(E.ring).radical == rad.radical
    assert nil_theorem_radical(E).radical == rad.radical


def test_membership_clauses(extensions):
    for name, E in extensions:
        X = E.source
        radR = jacobson_radical(X.R).radical
        radI = jacobson_radical(X.I).radical
        for r in radR.members:
            absorbed = all(radI.mask[X.left[r]]) and all(radI.mask[X.right[:, r]])
            if absorbed:
                assert rad_membership_theorem(E, r, 0), name
        for i in range(X.I.order):
            assert rad_membership_theorem(E, 0, i) == (i in radI), name
            assert nil_membership_theorem(E, 0, i) == (i in upper_nil_radical(X.I).radical), name


def test_direct_sum_criterion_examples(catalog):
    assert rad_direct_sum_criterion(catalog("z6_z6"))
    assert rad_direct_sum_criterion(catalog("z4_trivial_z2"))


def test_upper_nil_examples():
    assert upper_nil_radical(cyclic_ring(12), crosscheck=True).members == (0, 6)
    assert upper_nil_radical(M2, crosscheck=True).members == (0,)
    assert len(upper_nil_radical(trivial_mult_rng(cyclic_ring(3))).members) == 3


def test_nil_membership_z12(catalog):
    E = catalog("z12_trivial_z2")
    assert E.R.order == 12 and E.I.order == 2
    assert nil_membership_theorem(E, 6, 0)


def test_power_form_examples(catalog, extensions):
    for name, E in extensions:
        for x in range(E.order):
            r, i = E.decode(x)
            assert power_form_check(E, r, i, 1) == 0
    E = catalog("z2_ideal_z2")
    assert E.decode(E.ring.power(E.encode(1, 1), 2))[0] == 1
    power_form_check(E, 1, 1, 2)
    E = catalog("z4_2")
    for x in range(E.order):
        r, i = E.decode(x)
        for side in ("left", "right"):
            j = power_form_check(E, r, i, 3, side)
            assert 0 <= j < E.I.order
    with pytest.raises(ValueError):
        power_form_check(E, 1, 0, 0)


def test_unital_radical_matches(extensions):
    for R in (M2, T2, cyclic_ring(12)):
        assert unital_radical(R) == jacobson_radical(R).radical
    for name, E in extensions:
        assert unital_radical(E.ring) == jacobson_radical(E.ring).radical, name


def _as_oracle(R):
    return oracle.Rng(list(range(R.order)), lambda a, b: int(R.add[a, b]),
                      lambda a, b: int(R.mul[a, b]), 0, R.unit)


@pytest.mark.parametrize("entry", ["z4_z4", "z12_6", "f2_m2", "z6_z6", "z8_4"])
def test_radicals_match_reference(catalog, entry):
    E = catalog(entry)
    ref = _as_oracle(E.ring)
    assert set(jacobson_radical(E.ring).members) == set(oracle.jacobson(ref))
    assert set(upper_nil_radical(E.ring).members) == set(oracle.upper_nil(ref))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(2, 9), min_size=1, max_size=2), st.booleans())
def test_radicals_random_products(ns, flat):
    parts = [cyclic_ring(n) for n in ns]
    if flat:
        parts[0] = trivial_mult_rng(parts[0])
    R = direct_product(parts)
    ref = _as_oracle(R)
    rad = jacobson_radical(R).radical
    assert set(rad.members) == set(oracle.jacobson(ref))
    nil = upper_nil_radical(R).radical
    assert set(nil.members) == set(oracle.upper_nil(ref))
    assert nil <= rad


def _first_row_analog():
    """R = T3(F2) acting on first-row 3x3 matrices; order 64 * 8 = 512."""
    import itertools
    import numpy as np
    from ringlab.core import matrix_entries, validate_rng
    from ringlab.rrng import dorroh_extend, validate_rrng

    R = upper_triangular_ring(F2, 3)
    vecs = list(itertools.product(range(2), repeat=3))
    at = {v: n for n, v in enumerate(vecs)}
    add = [[at[tuple((a + b) % 2 for a, b in zip(u, v))] for v in vecs] for u in vecs]
    mul = [[at[tuple(u[0] * b for b in v)] for v in vecs] for u in vecs]
    I = validate_rng(np.array(add), np.array(mul), labels=[str(list(v)) for v in vecs])
    mats = [matrix_entries(R, x) for x in range(R.order)]
    left = [[at[tuple(m[0, 0] * np.array(v) % 2)] for v in vecs] for m in mats]
    right = [[at[tuple(np.array(v) @ m % 2)] for m in mats] for v in vecs]
    return dorroh_extend(validate_rrng(R, I, np.array(left), np.array(right)))


def test_first_row_analog_radical():
    import numpy as np
    E = _first_row_analog()
    assert E.order == 512 and E.I.unit is None
    rad = jacobson_radical(E.ring)
    # independent check: in a finite ring x is in rad iff every yx is nilpotent
    nil = np.zeros(E.order, dtype=bool)
    for x in range(E.order):
        nil[x] = E.ring.nilpotency_index(x) is not None
    oracle_mask = np.array([nil[E.ring.mul[:, x]].all() for x in range(E.order)])
    assert np.array_equal(rad.radical.mask, oracle_mask)
    assert rad_theorem_radical(E).radical == rad.radical
    # a finite non-unital I cannot be semiprimitive, so rad(I) is nonzero here
    rad_i = jacobson_radical(E.I).members
    assert [E.I.labels[i] for i in rad_i] == ["[0, 0, 0]", "[0, 0, 1]", "[0, 1, 0]", "[0, 1, 1]"]
    rad_r = jacobson_radical(E.R).members
    assert len(rad_r) == 8
    assert set(rad.members) == {E.encode(r, i) for r in rad_r for i in rad_i}
    assert rad_direct_sum_criterion(E)
