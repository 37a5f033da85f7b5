from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from ringlab.dsl import (
    ArityError, Binding, Call, Int, SpecSyntaxError, SpecTypeError, UnknownName, evaluate,
    format_spec, load, parse_spec,
)
from ringlab.errors import AxiomViolation
from ringlab.library import catalog_names, catalog_text, load_catalog
from ringlab.rrng import DorrohRing, RHomomorphism

FIXTURES = Path(__file__).parent / "fixtures"


def test_three_bindings():
    doc = parse_spec("ring R = Z(4)\nrng I = ideal_of(R, {0,2})\next E = dorroh(I)")
    assert [(b.kind, b.name) for b in doc.bindings] == [("ring", "R"), ("rng", "I"), ("ext", "E")]
    assert doc["R"].expr == Call("Z", (Int(4),), ())


@pytest.mark.parametrize("fixture, error, line, column", [
    ("unclosed_call.ring", SpecSyntaxError, 1, 12),
    ("unknown_name.ring", UnknownName, 2, 16),
    ("missing_equals.ring", SpecSyntaxError, 3, 7),
])
def test_error_fixtures(fixture, error, line, column):
    with pytest.raises(error) as info:
        parse_spec((FIXTURES / fixture).read_text())
    assert (info.value.line, info.value.column) == (line, column)


def test_unknown_name_carries_name():
    with pytest.raises(UnknownName) as info:
        parse_spec("ext E = dorroh(X)")
    assert info.value.name == "X"
    with pytest.raises(UnknownName):
        parse_spec("ring R = Zed(4)")


@pytest.mark.parametrize("text", [
    "ring R = Z(4, 5)",
    "ring R = Z()",
    "rng T = tables(add=[[0]])",
    "ring R = Z(2)\nrrng I = action(R, R, colour=1)",
])
def test_arity_errors(text):
    with pytest.raises(ArityError):
        parse_spec(text)


@pytest.mark.parametrize("text, expected", [
    ("ring R = Z(2)\nring R = Z(3)", SpecTypeError),
    ("ring R = Z(2) Z(3)", SpecSyntaxError),
    ("ring R = Z(2)\nrng I = ideal_of(R, {0, 2})", SpecTypeError),
    ("ring R = Z(2)\next E = dorroh(R)", SpecTypeError),
    ("rng N = trivial(Z(2))\nring R = N", SpecTypeError),
    ("ring M = Mat(Z(2), 2)\nrng I = ideal_of(M, {0, [0,1;0,0]})", Exception),
    ("widget W = Z(2)", SpecSyntaxError),
])
def test_semantic_and_syntax_errors(text, expected):
    with pytest.raises(expected):
        load(text)


def test_labels_in_sets():
    doc, env = load("ring T = UT(Z(2), 2)\nrng K = ideal_of(T, {0, [0,1;0,0]})\next E = dorroh(K)")
    assert env["K"].I.order == 2 and isinstance(env["E"], DorrohRing)


def test_comments_and_blank_lines():
    doc = parse_spec("# header\n\n  ring R = Z(3)  # trailing\n\n")
    assert doc.names() == ["R"]


def test_corrupted_table_fixture():
    with pytest.raises(AxiomViolation) as info:
        load((FIXTURES / "corrupted_table.ring").read_text())
    assert info.value.binding == "R"
    assert all(len(v.witness) == 3 for v in info.value.violations)


def test_phi_builders():
    _, env = load("ring R = Z(4)\nrrng I = ideal_of(R, {0, 2})\nphi f = inclusion(I)\n"
                  "phi g = zero(I)\nphi h = retraction(I, 1)\nphi k = hom(I, [0, 2])")
    assert all(isinstance(env[n], RHomomorphism) for n in "fghk")
    assert env["f"].key == env["h"].key == env["k"].key == (0, 2)
    with pytest.raises(SpecTypeError):
        load("ring R = Z(4)\nrrng I = ideal_of(R, {0, 2})\nphi f = retraction(I, 5)")


def test_action_with_map():
    _, env = load("ring R = Z(4)\nring S = Z(2)\nrrng I = action(R, S, map=[0, 1, 0, 1], trivial=1)")
    assert not env["I"].I.mul.any()
    with pytest.raises(SpecTypeError):
        load("ring R = Z(4)\nring S = Z(2)\nrrng I = action(R, S, map=[0, 1, 1, 1])")


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_round_trips(name):
    text = catalog_text(name)
    doc = parse_spec(text)
    printed = format_spec(doc)
    assert parse_spec(printed) == doc
    assert format_spec(parse_spec(printed)) == printed
    load_catalog(name)


def test_catalog_contents():
    names = catalog_names()
    assert len(names) >= 10
    exts = [(n, b) for n in names for b in load_catalog(n)[1].of_kind("ext")]
    assert len(exts) >= 10


_names = st.sampled_from(["A", "B", "Rx", "r_2"])
_ints = st.integers(0, 30).map(lambda v: Int(v))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(["ring", "rng", "rrng", "ext", "phi"]),
                          st.sampled_from(["Z", "trivial", "dorroh"]),
                          st.lists(st.integers(0, 99), min_size=1, max_size=3)),
                min_size=1, max_size=5))
def test_printer_round_trip(stmts):
    lines = []
    for n, (kind, func, nums) in enumerate(stmts):
        args = ", ".join(str(x) for x in nums[:1])
        elems = ", ".join(str(x) for x in nums)
        lines.append(f"{kind} x{n} = {func}({args})" if n % 2 else
                     f"{kind} x{n} = ideal_of(Z({args}), {{{elems}}})")
    doc = parse_spec("\n".join(lines))
    assert parse_spec(format_spec(doc)) == doc
