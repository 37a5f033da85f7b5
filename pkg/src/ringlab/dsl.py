"""A small declarative language for describing rings, R-rngs and extensions.

    # comments run to end of line
    ring R = Z(4)
    rng  I = ideal_of(R, {0, 2})
    ext  E = dorroh(I)
    phi  f = inclusion(I)

Each statement binds a name to an expression built from:

    Z(n)  Mat(ring, k)  UT(ring, k)  product(x, ...)  trivial(x)
    ideal_of(ring, {elements})  quotient(ring, {elements})
    action(R, S[, map=[...]])  dorroh(rrng)  tables(add=[[...]], mul=[[...]])
    retraction(X[, k])  inclusion(X)  zero(X)  hom(X, [...])

Set elements are integers (element indices) or bracketed / parenthesized
labels such as ``[0,1;0,0]`` or ``(1,0)``.  Parsing resolves every name;
``evaluate`` builds the objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

from .errors import RinglabError

KINDS = ("ring", "rng", "rrng", "ext", "phi")


# -- errors -----------------------------------------------------------------------


class SpecError(RinglabError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SpecSyntaxError(SpecError):
    def __init__(self, line: int, column: int, expected: str, found: str = ""):
        self.expected = expected
        msg = f"expected {expected}" + (f", found {found!r}" if found else "")
        super().__init__(msg, line, column)


class UnknownName(SpecError):
    def __init__(self, name: str, line: int, column: int):
        self.name = name
        super().__init__(f"unknown name {name!r}", line, column)


class ArityError(SpecError):
    def __init__(self, func: str, message: str, line: int, column: int):
        self.func = func
        super().__init__(f"{func}: {message}", line, column)


class SpecTypeError(SpecError):
    pass


# -- AST --------------------------------------------------------------------------


@dataclass(frozen=True)
class Pos:
    line: int
    column: int


@dataclass(frozen=True)
class Int:
    value: int
    pos: Pos = field(default=Pos(0, 0), compare=False)


@dataclass(frozen=True)
class Label:
    text: str
    pos: Pos = field(default=Pos(0, 0), compare=False)


@dataclass(frozen=True)
class Name:
    id: str
    pos: Pos = field(default=Pos(0, 0), compare=False)


@dataclass(frozen=True)
class SetLit:
    elements: tuple[Union[Int, Label], ...]
    pos: Pos = field(default=Pos(0, 0), compare=False)


@dataclass(frozen=True)
class ListLit:
    items: tuple["Expr", ...]
    pos: Pos = field(default=Pos(0, 0), compare=False)


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple["Expr", ...]
    kwargs: tuple[tuple[str, "Expr"], ...]
    pos: Pos = field(default=Pos(0, 0), compare=False)


Expr = Union[Int, Name, SetLit, ListLit, Call]


@dataclass(frozen=True)
class Binding:
    kind: str
    name: str
    expr: Expr
    pos: Pos = field(default=Pos(0, 0), compare=False)


@dataclass(frozen=True)
class SpecDocument:
    bindings: tuple[Binding, ...]

    def names(self) -> list[str]:
        return [b.name for b in self.bindings]

    def __getitem__(self, name: str) -> Binding:
        for b in self.bindings:
            if b.name == name:
                return b
        raise KeyError(name)


# builder -> (min positional, max positional or None, allowed keywords)
SIGNATURES: dict[str, tuple[int, int | None, frozenset[str]]] = {
    "Z": (1, 1, frozenset()),
    "Mat": (2, 2, frozenset()),
    "UT": (2, 2, frozenset()),
    "product": (1, None, frozenset()),
    "trivial": (1, 1, frozenset()),
    "ideal_of": (2, 2, frozenset()),
    "quotient": (2, 2, frozenset()),
    "action": (2, 2, frozenset({"map", "trivial"})),
    "dorroh": (1, 1, frozenset()),
    "tables": (0, 0, frozenset({"add", "mul", "labels"})),
    "retraction": (1, 2, frozenset()),
    "inclusion": (1, 1, frozenset()),
    "zero": (1, 1, frozenset()),
    "hom": (2, 2, frozenset()),
}
REQUIRED_KWARGS = {"tables": frozenset({"add", "mul"})}


# -- parser -----------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0
        self.line = 1
        self.col = 1
        self.declared: set[str] = set()

    # character level
    def _peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def _advance(self) -> str:
        ch = self.text[self.i]
        self.i += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def _skip_inline(self) -> None:
        """Spaces, tabs and comments, but not newlines."""
        while True:
            ch = self._peek()
            if ch in (" ", "\t", "\r"):
                self._advance()
            elif ch == "#":
                while self._peek() not in ("", "\n"):
                    self._advance()
            else:
                return

    def _skip_all(self) -> None:
        while True:
            self._skip_inline()
            if self._peek() == "\n":
                self._advance()
            else:
                return

    def _pos(self) -> Pos:
        return Pos(self.line, self.col)

    def _fail(self, expected: str):
        ch = self._peek()
        found = "end of line" if ch == "\n" else ("end of input" if ch == "" else ch)
        raise SpecSyntaxError(self.line, self.col, expected, found)

    def _expect(self, ch: str) -> None:
        self._skip_inline()
        if self._peek() != ch:
            self._fail(repr(ch))
        self._advance()

    def _ident(self, what: str = "a name") -> tuple[str, Pos]:
        self._skip_inline()
        pos = self._pos()
        ch = self._peek()
        if not (ch.isalpha() or ch == "_"):
            self._fail(what)
        start = self.i
        while self._peek().isalnum() or self._peek() == "_":
            self._advance()
        return self.text[start:self.i], pos

    def _int(self) -> Int:
        pos = self._pos()
        start = self.i
        if self._peek() == "-":
            self._advance()
        if not self._peek().isdigit():
            self._fail("a digit")
        while self._peek().isdigit():
            self._advance()
        return Int(int(self.text[start:self.i]), pos)

    # grammar
    def document(self) -> SpecDocument:
        out = []
        self._skip_all()
        while self._peek():
            out.append(self.binding())
            self._skip_inline()
            if self._peek() not in ("", "\n"):
                self._fail("end of line")
            self._skip_all()
        return SpecDocument(tuple(out))

    def binding(self) -> Binding:
        kind, pos = self._ident("a declaration keyword (ring, rng, rrng, ext, phi)")
        if kind not in KINDS:
            raise SpecSyntaxError(pos.line, pos.column, "one of " + ", ".join(KINDS), kind)
        name, npos = self._ident()
        if name in self.declared:
            raise SpecTypeError(f"{name!r} is already declared", npos.line, npos.column)
        self._expect("=")
        expr = self.expr()
        self.declared.add(name)
        return Binding(kind, name, expr, pos)

    def expr(self) -> Expr:
        self._skip_inline()
        ch = self._peek()
        pos = self._pos()
        if ch.isdigit() or ch == "-":
            return self._int()
        if ch == "{":
            return self.set_lit()
        if ch == "[":
            return self.list_lit()
        if ch.isalpha() or ch == "_":
            ident, pos = self._ident()
            self._skip_inline()
            if self._peek() == "(":
                return self.call(ident, pos)
            if ident not in self.declared:
                raise UnknownName(ident, pos.line, pos.column)
            return Name(ident, pos)
        self._fail("an expression")

    def call(self, func: str, pos: Pos) -> Call:
        if func not in SIGNATURES:
            raise UnknownName(func, pos.line, pos.column)
        self._advance()  # "("
        args: list[Expr] = []
        kwargs: list[tuple[str, Expr]] = []
        self._skip_all()
        if self._peek() == ")":
            self._advance()
        else:
            while True:
                self._skip_all()
                save = (self.i, self.line, self.col)
                key = None
                if self._peek().isalpha():
                    ident, _ = self._ident()
                    self._skip_inline()
                    if self._peek() == "=":
                        self._advance()
                        key = ident
                    else:
                        self.i, self.line, self.col = save
                value = self.expr()
                if key is None:
                    if kwargs:
                        raise SpecSyntaxError(value.pos.line, value.pos.column,
                                              "a keyword argument (positional arguments come first)")
                    args.append(value)
                else:
                    kwargs.append((key, value))
                self._skip_all()
                if self._peek() == ",":
                    self._advance()
                    continue
                if self._peek() == ")":
                    self._advance()
                    break
                self._fail("',' or ')'")
        lo, hi, allowed = SIGNATURES[func]
        if len(args) < lo or (hi is not None and len(args) > hi):
            want = f"{lo}" if lo == hi else (f"at least {lo}" if hi is None else f"{lo} to {hi}")
            raise ArityError(func, f"takes {want} positional arguments, got {len(args)}",
                             pos.line, pos.column)
        for k, _ in kwargs:
            if k not in allowed:
                raise ArityError(func, f"unexpected keyword {k!r}", pos.line, pos.column)
        missing = REQUIRED_KWARGS.get(func, frozenset()) - {k for k, _ in kwargs}
        if missing:
            raise ArityError(func, f"missing keyword {sorted(missing)[0]!r}", pos.line, pos.column)
        return Call(func, tuple(args), tuple(kwargs), pos)

    def _raw_group(self) -> Label:
        """Bracketed or parenthesized label text, copied verbatim."""
        pos = self._pos()
        start = self.i
        depth = 0
        while True:
            ch = self._peek()
            if ch in ("", "\n"):
                self._fail("a closing bracket")
            self._advance()
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
                if depth == 0:
                    return Label(self.text[start:self.i], pos)

    def set_lit(self) -> SetLit:
        pos = self._pos()
        self._advance()  # "{"
        elems: list[Union[Int, Label]] = []
        self._skip_all()
        if self._peek() == "}":
            self._advance()
            return SetLit((), pos)
        while True:
            self._skip_all()
            ch = self._peek()
            if ch.isdigit() or ch == "-":
                elems.append(self._int())
            elif ch in "([":
                elems.append(self._raw_group())
            else:
                self._fail("an element (integer or bracketed label)")
            self._skip_all()
            if self._peek() == ",":
                self._advance()
            elif self._peek() == "}":
                self._advance()
                return SetLit(tuple(elems), pos)
            else:
                self._fail("',' or '}'")

    def list_lit(self) -> ListLit:
        pos = self._pos()
        self._advance()  # "["
        items: list[Expr] = []
        self._skip_all()
        if self._peek() == "]":
            self._advance()
            return ListLit((), pos)
        while True:
            items.append(self.expr())
            self._skip_all()
            if self._peek() == ",":
                self._advance()
                self._skip_all()
            elif self._peek() == "]":
                self._advance()
                return ListLit(tuple(items), pos)
            else:
                self._fail("',' or ']'")


def parse_spec(text: str) -> SpecDocument:
    return _Parser(text).document()


# -- canonical printer ------------------------------------------------------------


def format_expr(e: Expr) -> str:
    if isinstance(e, Int):
        return str(e.value)
    if isinstance(e, Name):
        return e.id
    if isinstance(e, Label):
        return e.text
    if isinstance(e, SetLit):
        return "{" + ", ".join(format_expr(x) for x in e.elements) + "}"
    if isinstance(e, ListLit):
        return "[" + ", ".join(format_expr(x) for x in e.items) + "]"
    if isinstance(e, Call):
        parts = [format_expr(a) for a in e.args]
        parts += [f"{k}={format_expr(v)}" for k, v in e.kwargs]
        return f"{e.func}(" + ", ".join(parts) + ")"
    raise TypeError(f"not an expression: {e!r}")


def format_spec(doc: SpecDocument) -> str:
    return "".join(f"{b.kind} {b.name} = {format_expr(b.expr)}\n" for b in doc.bindings)


# -- evaluation -------------------------------------------------------------------


class Environment(dict):
    """Name -> built object, in declaration order; ``kinds`` keeps the keyword."""

    def __init__(self):
        super().__init__()
        self.kinds: dict[str, str] = {}

    def of_kind(self, *kinds: str) -> list[str]:
        return [n for n in self if self.kinds[n] in kinds]


def evaluate(doc: SpecDocument) -> Environment:
    from . import core, rrng  # local import keeps parsing free of numpy work

    env = Environment()

    def err(msg: str, node) -> SpecTypeError:
        return SpecTypeError(msg, node.pos.line, node.pos.column)

    def want(value, types, node, what):
        if not isinstance(value, types):
            raise err(f"expected {what}", node)
        return value

    def as_int(node) -> int:
        if not isinstance(node, Int):
            raise err("expected an integer", node)
        return node.value

    def as_table(node) -> list:
        if isinstance(node, Int):
            return node.value
        if not isinstance(node, ListLit):
            raise err("expected a list", node)
        return [as_table(x) for x in node.items]

    def elements(ring: core.FiniteRng, node) -> list[int]:
        if not isinstance(node, SetLit):
            raise err("expected a set literal", node)
        out = []
        for x in node.elements:
            try:
                out.append(ring.index_of(x.value if isinstance(x, Int) else x.text))
            except (KeyError, IndexError, ValueError):
                raise err(f"{format_expr(x)} is not an element of {ring.name}", x) from None
        return out

    def ring_of(value, node) -> core.FiniteRng:
        if isinstance(value, rrng.RRngStructure):
            return value.I
        if isinstance(value, rrng.DorrohRing):
            return value.ring
        return want(value, core.FiniteRng, node, "a rng")

    def structure_of(value, node) -> rrng.RRngStructure:
        if isinstance(value, rrng.DorrohRing):
            return value.source
        return want(value, rrng.RRngStructure, node, "an R-rng or extension")

    def ev(node, name: str = ""):
        if isinstance(node, Name):
            return env[node.id]
        if isinstance(node, Int):
            return node.value
        if not isinstance(node, Call):
            raise err("unexpected literal", node)
        f, a, kw = node.func, node.args, dict(node.kwargs)
        if f == "Z":
            n = as_int(a[0])
            if n < 1:
                raise err("Z(n) needs n >= 1", a[0])
            R = core.cyclic_ring(n)
        elif f in ("Mat", "UT"):
            base = want(ev(a[0]), core.FiniteRng, a[0], "a ring")
            build = core.matrix_ring if f == "Mat" else core.upper_triangular_ring
            R = build(base, as_int(a[1]))
        elif f == "product":
            parts = [ev(x) for x in a]
            if all(isinstance(p, rrng.RRngStructure) for p in parts):
                return rrng.product_rrng(parts, name)
            return core.direct_product([ring_of(p, x) for p, x in zip(parts, a)])
        elif f == "trivial":
            v = ev(a[0])
            if isinstance(v, rrng.RRngStructure):
                return rrng.trivial_rrng(v, name)
            R = core.trivial_mult_rng(ring_of(v, a[0]))
        elif f == "ideal_of":
            base = want(ev(a[0]), core.FiniteRng, a[0], "a ring")
            return rrng.ideal_as_rrng(base, elements(base, a[1]), name)
        elif f == "quotient":
            base = want(ev(a[0]), core.FiniteRng, a[0], "a ring")
            R = core.quotient_rng(base, elements(base, a[1])).ring
        elif f == "action":
            src = want(ev(a[0]), core.FiniteRng, a[0], "a ring")
            dst = ring_of(ev(a[1]), a[1])
            if "map" in kw:
                m = core.RngMorphism(src, dst, core._frozen(as_table(kw["map"])))
                bad = m.violations()
                if bad:
                    raise err("map is not a ring homomorphism: " + str(bad[0]), kw["map"])
            else:
                try:
                    m = core.canonical_map(src, dst)
                except ValueError as e:
                    raise err(str(e), node) from None
            return rrng.rrng_via_map(m, trivial=bool(as_int(kw.get("trivial", Int(0)))), name=name)
        elif f == "dorroh":
            return rrng.dorroh_extend(structure_of(ev(a[0]), a[0]), name)
        elif f == "tables":
            labels = kw.get("labels")
            R = core.validate_rng(as_table(kw["add"]), as_table(kw["mul"]), name=name,
                                  labels=None if labels is None else
                                  [format_expr(x) for x in labels.items])
            return R
        elif f in ("retraction", "inclusion", "zero", "hom"):
            X = structure_of(ev(a[0]), a[0])
            if f == "retraction":
                k = as_int(a[1]) if len(a) > 1 else 0
                found = rrng.find_retractions(X)
                if not found:
                    raise err("no multiplicative retraction exists", node)
                if not 0 <= k < len(found):
                    raise err(f"only {len(found)} retractions exist", node)
                return found[k]
            if f == "inclusion":
                try:
                    return rrng.inclusion_hom(X)
                except ValueError as e:
                    raise err(str(e), node) from None
            if f == "zero":
                return rrng.hom_from_table(X, [0] * X.I.order)
            return rrng.hom_from_table(X, as_table(a[1]))
        else:  # pragma: no cover - parser rejects unknown builders
            raise err(f"unknown builder {f}", node)
        return R

    for b in doc.bindings:
        try:
            value = ev(b.expr, b.name)
        except RinglabError as e:
            if getattr(e, "binding", None) is None:
                e.binding = b.name
            raise
        if b.kind == "ext":
            want(value, rrng.DorrohRing, b.expr, "an extension (dorroh(...))")
        elif b.kind == "phi":
            want(value, rrng.RHomomorphism, b.expr, "a homomorphism")
        elif b.kind == "rrng":
            want(value, rrng.RRngStructure, b.expr, "an R-rng")
        elif b.kind == "ring":
            want(value, core.FiniteRng, b.expr, "a ring")
            if value.unit is None:
                raise err("declared as ring but has no unit", b.expr)
        elif b.kind == "rng":
            want(value, (core.FiniteRng, rrng.RRngStructure), b.expr, "a rng")
        env[b.name] = value
        env.kinds[b.name] = b.kind
    return env


def load(text: str) -> tuple[SpecDocument, Environment]:
    doc = parse_spec(text)
    return doc, evaluate(doc)
