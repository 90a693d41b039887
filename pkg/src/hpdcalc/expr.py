"""A small language for naming equivariant objects.

    expr   := term {"+" term}
    term   := base ["*"] ["(" twist ")"] ["[" int "]"]
    base   := atom | func
    atom   := "O" | "U" | "Q" | "K" | "Kperp" | "W"
    func   := ("S^" int | "L^" int | "Sigma[" int {"," int} "]") "(" atom ["*"] ")"
    twist  := int | int "G" [("+" | "-") int "Y"] | int "Y"

Whitespace is ignored.  U and K both name the tautological subbundle,
Q = W/U, Kperp = U^perp and W is the trivial bundle with fibre W.  Twists
are O(a) on a Grassmannian and O(a H_G + b H_Y) on TY; [k] is the shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .cohom.objects import EquivariantObject, GrassmannianSpace, ResolutionSpace, SchurBundle, Term
from .schur import VirtualRep
from .weights import DominantWeight, RankMismatch, dual_weight

ATOMS = ("Kperp", "O", "U", "Q", "K", "W")  # longest first for the lexer


class ParseError(ValueError):
    """Syntax error at a 1-based character offset."""

    def __init__(self, offset: int, expected: Tuple[str, ...], text: str):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        self.text = text
        want = ", ".join(repr(e) for e in self.expected)
        super().__init__(f"parse error at offset {offset}: expected {want}")


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    name: str
    dual: bool = False

    def pretty(self) -> str:
        return self.name + ("*" if self.dual else "")


@dataclass(frozen=True)
class Func:
    kind: str  # "S", "L" or "Sigma"
    index: Union[int, Tuple[int, ...]]
    arg: Atom

    def pretty(self) -> str:
        if self.kind == "Sigma":
            head = "Sigma[" + ",".join(str(x) for x in self.index) + "]"
        else:
            head = f"{self.kind}^{self.index}"
        return f"{head}({self.arg.pretty()})"


@dataclass(frozen=True)
class TermExpr:
    base: Union[Atom, Func]
    dual: bool = False
    twist: Optional[Tuple[int, int]] = None
    shift: Optional[int] = None

    def pretty(self) -> str:
        out = self.base.pretty()
        if self.dual:
            out += "*"
        if self.twist is not None:
            a, b = self.twist
            if b == 0:
                out += f"({a})"
            else:
                out += f"({a}G{'+' if b >= 0 else '-'}{abs(b)}Y)"
        if self.shift is not None:
            out += f"[{self.shift}]"
        return out


@dataclass(frozen=True)
class BundleExpr:
    terms: Tuple[TermExpr, ...]

    def pretty(self) -> str:
        return " + ".join(t.pretty() for t in self.terms)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _fail(self, *expected: str):
        self._skip()
        raise ParseError(self.pos + 1, expected, self.text)

    def _peek(self, s: str) -> bool:
        self._skip()
        return self.text.startswith(s, self.pos)

    def _eat(self, s: str) -> bool:
        if self._peek(s):
            self.pos += len(s)
            return True
        return False

    def _expect(self, s: str) -> None:
        if not self._eat(s):
            self._fail(s)

    def _int(self, signed: bool = True) -> int:
        self._skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self._fail("integer")
        return int(self.text[start:self.pos])

    def parse(self) -> BundleExpr:
        terms = [self._term()]
        while self._eat("+"):
            terms.append(self._term())
        self._skip()
        if self.pos != len(self.text):
            self._fail("+", "end of input")
        return BundleExpr(tuple(terms))

    def _atom(self) -> Atom:
        for name in ATOMS:
            if self._peek(name):
                self.pos += len(name)
                return Atom(name, self._eat("*"))
        self._fail(*ATOMS)

    def _base(self) -> Union[Atom, Func]:
        if self._eat("Sigma["):
            entries = [self._int()]
            while self._eat(","):
                entries.append(self._int())
            self._expect("]")
            kind, index = "Sigma", tuple(entries)
        elif self._peek("S^") or self._peek("L^"):
            kind = self.text[self.pos]
            self.pos += 2
            index = self._int(signed=False)
        else:
            if any(self._peek(a) for a in ATOMS):
                return self._atom()
            self._fail("S^", "L^", "Sigma[", *ATOMS)
        self._expect("(")
        arg = self._atom()
        self._expect(")")
        return Func(kind, index, arg)

    def _twist(self) -> Tuple[int, int]:
        a = self._int()
        if self._eat("G"):
            if self._peek("+") or self._peek("-"):
                sign = -1 if self.text[self.pos] == "-" else 1
                self.pos += 1
                b = self._int(signed=False)
                self._expect("Y")
                return a, sign * b
            return a, 0
        if self._eat("Y"):
            return 0, a
        return a, 0

    def _term(self) -> TermExpr:
        base = self._base()
        dual = self._eat("*")
        twist = shift = None
        if self._eat("("):
            twist = self._twist()
            self._expect(")")
        if self._eat("["):
            shift = self._int()
            self._expect("]")
        return TermExpr(base, dual, twist, shift)


def parse_bundle(text: str) -> BundleExpr:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# elaboration
# ---------------------------------------------------------------------------


@dataclass
class Elaborated:
    obj: EquivariantObject
    warnings: List[str]


def _slot(space: GrassmannianSpace, atom: Atom):
    """(slot, sign) with slot 'beta' (U*) or 'gamma' (U^perp); sign -1 means dual."""
    base = {"U": ("beta", -1), "K": ("beta", -1), "Q": ("gamma", -1), "Kperp": ("gamma", 1)}[atom.name]
    return base[0], -base[1] if atom.dual else base[1]


def _weight_for(kind: str, index, rank: int, warnings: List[str]) -> Optional[Tuple[int, ...]]:
    if kind == "S":
        return (index,) + (0,) * (rank - 1)
    if kind == "L":
        if index > rank:
            warnings.append(f"L^{index} of a rank {rank} bundle is zero")
            return None
        return (1,) * index + (0,) * (rank - index)
    lam = tuple(index)
    if len(lam) != rank:
        raise RankMismatch(f"Sigma weight of length {len(lam)} applied to a rank {rank} bundle")
    DominantWeight(lam)
    return lam


def _elaborate_term(term: TermExpr, space) -> Tuple[Optional[EquivariantObject], List[str]]:
    warnings: List[str] = []
    base = space.base
    n, k = base.n, base.k
    zero_b, zero_g = (0,) * k, (0,) * (n - k)
    coeff = VirtualRep.trivial(n)
    beta, gamma = zero_b, zero_g

    node = term.base
    atom = node.arg if isinstance(node, Func) else node
    if isinstance(node, Func) and atom.name == "O":
        raise ValueError("functors apply to U, K, Q, Kperp or W, not O")
    if atom.name == "W":
        lam = (1,) + (0,) * (n - 1) if not isinstance(node, Func) else _weight_for(node.kind, node.index, n, warnings)
        if lam is None:
            return None, warnings
        # record on W*: W itself is the dual of the standard representation of W*
        rep = VirtualRep.irreducible(lam if atom.dual else dual_weight(lam))
        coeff = rep
    elif atom.name != "O":
        slot, sign = _slot(base, atom)
        rank = k if slot == "beta" else n - k
        if isinstance(node, Func):
            lam = _weight_for(node.kind, node.index, rank, warnings)
            if lam is None:
                return None, warnings
        else:
            lam = (1,) + (0,) * (rank - 1)
        w = tuple(lam) if sign > 0 else tuple(dual_weight(lam))
        if slot == "beta":
            beta = w
        else:
            gamma = w
    obj = EquivariantObject(space, (Term(SchurBundle(base, beta, gamma), 0, 0, coeff),))
    if term.dual:
        obj = obj.dual()
    if term.twist is not None:
        a, b = term.twist
        if b and isinstance(space, GrassmannianSpace):
            raise ValueError("H_Y twists only make sense on ty(n)")
        obj = obj.twist(a, b)
    if term.shift is not None:
        obj = obj.shift(term.shift)
    return obj, warnings


def elaborate(expr: BundleExpr, space) -> Elaborated:
    out = EquivariantObject.zero(space)
    warnings: List[str] = []
    for t in expr.terms:
        obj, w = _elaborate_term(t, space)
        warnings.extend(w)
        if obj is not None:
            out = out + obj
    return Elaborated(out.canonical(), warnings)


def parse_object(text: str, space) -> Elaborated:
    return elaborate(parse_bundle(text), space)
