from pathlib import Path

import pytest

from hpdcalc.cohom import EquivariantObject, GrassmannianSpace, parse_space
from hpdcalc.expr import Atom, Func, ParseError, TermExpr, parse_bundle, parse_object
from hpdcalc.weights import RankMismatch

CORPUS = [
    tuple(part.strip() for part in line.split("|", 1))
    for line in (Path(__file__).parent / "data" / "expr_corpus.txt").read_text().splitlines()
    if line.strip() and not line.startswith("#")
]
GR26 = GrassmannianSpace(2, 6)


@pytest.mark.parametrize("space,text", CORPUS)
def test_round_trip(space, text):
    ast = parse_bundle(text)
    assert parse_bundle(ast.pretty()) == ast
    sp = parse_space(space)
    assert parse_object(ast.pretty(), sp).obj == parse_object(text, sp).obj


def test_u_dual():
    obj = parse_object("U*", GR26).obj
    assert obj == EquivariantObject.bundle(GR26, (1, 0), (0, 0, 0, 0)).canonical()


def test_sym_square_twisted():
    obj = parse_object("S^2(U)(1)", GR26).obj
    assert obj == EquivariantObject.bundle(GR26, (1, -1)).canonical()


def test_wedge_of_quotient():
    obj = parse_object("L^2(Q)", GR26).obj
    assert obj == EquivariantObject.bundle(GR26, (0, 0), (0, 0, -1, -1)).canonical()


def test_ast_shape():
    ast = parse_bundle("S^2(U*)(1G-2Y)[3]")
    (term,) = ast.terms
    assert term == TermExpr(Func("S", 2, Atom("U", True)), False, (1, -2), 3)


def test_unclosed_paren_offset():
    with pytest.raises(ParseError) as info:
        parse_bundle("S^2(U")
    assert info.value.offset == 6
    assert info.value.expected == (")",)


@pytest.mark.parametrize("text,offset", [("", 1), ("U +", 4), ("X", 1), ("U(1", 4), ("Sigma[1,](U)", 9), ("U[", 3)])
def test_error_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_bundle(text)
    assert info.value.offset == offset


def test_exterior_power_too_large_is_zero_with_warning():
    res = parse_object("L^3(U)", GR26)
    assert res.obj.is_zero()
    assert res.warnings and "zero" in res.warnings[0]


def test_sigma_length_mismatch():
    with pytest.raises(RankMismatch):
        parse_object("Sigma[1,0,0](U)", GR26)


def test_functor_of_structure_sheaf_rejected():
    with pytest.raises(ValueError):
        parse_object("S^2(O)", GR26)


def test_hy_twist_needs_ty():
    with pytest.raises(ValueError):
        parse_object("O(1G+1Y)", GR26)
