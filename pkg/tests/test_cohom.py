from fractions import Fraction
from math import comb

import pytest

from hpdcalc.bundles import e_object, f_dual, f_left, f_object
from hpdcalc.cohom import (
    EquivariantObject,
    GradedRep,
    GrassmannianSpace,
    ResolutionSpace,
    SpaceMismatch,
    cohomology,
    convention_self_test,
    euler_characteristic,
    ext,
    fiber_pushforward,
    projbundle_pushforward,
    push_to_base,
    serre_check,
)
from hpdcalc.cohom.hilbert import chi_ty_object, interpolate
from hpdcalc.schur import VirtualRep, dimension

GR26 = GrassmannianSpace(2, 6)


def test_convention_self_test_passes():
    convention_self_test()


# direct images of O(-t H_Y) for n = 6, t = 1..8, with the homological degree as a shift
GOLDEN_N6 = {
    1: [], 2: [], 3: [], 4: [], 5: [],
    6: [((3, 3, 3, 3), -5)],
    7: [((4, 4, 3, 3), -5)],
    8: [((5, 5, 3, 3), -5), ((4, 4, 4, 4), -5)],
}


@pytest.mark.parametrize("t", range(1, 9))
def test_pushforward_golden_table(t):
    got = projbundle_pushforward(6, -t).canonical()
    want = EquivariantObject.zero(GrassmannianSpace(2, 6))
    for gamma, shift in GOLDEN_N6[t]:
        want = want + EquivariantObject.bundle(GrassmannianSpace(2, 6), (0, 0), gamma, shift=-shift)
    assert got == want.canonical()


@pytest.mark.parametrize("m", range(0, 5))
def test_positive_twist_is_symmetric_power(m):
    got = projbundle_pushforward(7, m).canonical()
    assert len(got.terms) >= 1
    assert all(t.shift == 0 for t in got.terms)
    # S^m Lambda^2 (W/K) has rank C(m + 5, m)
    total = sum(dimension(t.bundle.gamma) * t.mult for t in got.terms)
    assert total == comb(5 + m, m)


def test_fiber_pushforward_vanishing_window():
    for t in range(-5, 0):
        assert fiber_pushforward(t) == ()
    for t in range(-4, 0):
        assert fiber_pushforward(t, quotient=True) == ()
    ((deg, rep),) = fiber_pushforward(-5, quotient=True)
    assert deg == 4 and rep == VirtualRep.irreducible((3, 3, 3, 3))


def test_quotient_pushforward_is_effective():
    for t in range(-14, 8):
        for _, rep in fiber_pushforward(t, quotient=True):
            assert rep.is_effective()


def test_hom_structure_sheaf():
    O = EquivariantObject.structure_sheaf(ResolutionSpace(6))
    ans = ext(O, O)
    assert ans.exact
    assert ans.graded.degrees == {0: VirtualRep.trivial(6)}


def test_fkl_examples():
    n6 = ext(f_dual(6, 1), f_dual(6, 1).twist(0, -4))
    assert n6.exact and n6.is_zero()
    n7 = ext(f_object(7, 0), f_object(7, 0, quotient_form=True).twist(0, -1))
    assert n7.exact and n7.is_zero()


def test_f0_forms_agree_in_euler_characteristic():
    for n in (6, 7):
        a, b = f_object(n, 0), f_object(n, 0, quotient_form=True)
        for t in range(-12, 6):
            assert chi_ty_object(n, a, t) == chi_ty_object(n, b, t)


def test_left_dual_objects_reproduce_e_homs():
    for n in (6, 7):
        for k in range(3):
            for l in range(3):
                got = ext(f_left(n, k), f_left(n, l)).euler
                want = ext(e_object(n, k), e_object(n, l)).euler
                assert got == want


def test_euler_characteristic_of_graded():
    w = VirtualRep.irreducible((1, 0, 0))
    assert euler_characteristic(GradedRep(3, {0: w})) == w
    assert euler_characteristic(GradedRep(3, {0: w, 1: w})) == VirtualRep.zero(3)


def test_single_bundles_are_concentrated(rng):
    for _ in range(200):
        beta = sorted((rng.randint(-4, 4) for _ in range(2)), reverse=True)
        gamma = sorted((rng.randint(-4, 4) for _ in range(4)), reverse=True)
        ans = cohomology(EquivariantObject.bundle(GR26, beta, gamma))
        assert ans.exact and len(ans.upper.degrees) <= 1


@pytest.mark.parametrize("k", range(3))
@pytest.mark.parametrize("l", range(3))
@pytest.mark.parametrize("t", range(-6, 1))
def test_serre_duality_sweep(k, l, t):
    assert serre_check(e_object(6, k), e_object(6, l).twist(t)) is True


def test_serre_examples():
    O = EquivariantObject.structure_sheaf(GR26)
    assert serre_check(O, O)
    assert serre_check(e_object(6, 1), O)
    assert serre_check(e_object(6, 2), e_object(6, 0).twist(-6))


def _random_ty_object(rng, n):
    space = ResolutionSpace(n)
    k = space.k
    beta = tuple(sorted((rng.randint(-2, 2) for _ in range(k)), reverse=True))
    gamma = tuple(sorted((rng.randint(-2, 2) for _ in range(4)), reverse=True))
    return EquivariantObject.bundle(space, beta, gamma, hy=rng.randint(-3, 3), shift=rng.randint(-1, 1))


def test_euler_characteristic_commutes_with_pushforward(rng):
    for _ in range(100):
        n = rng.choice((6, 7))
        obj = _random_ty_object(rng, n).twist(0, rng.randint(-10, 10))
        on_ty = cohomology(obj).euler
        on_base = cohomology(push_to_base(obj)).euler
        assert on_ty == on_base


def test_euler_characteristic_is_polynomial_in_twist(rng):
    # values at large twists use only S^t V*; negative twists use the top direct image
    for _ in range(12):
        obj = _random_ty_object(rng, 6)
        start = 3
        coeffs = interpolate([chi_ty_object(6, obj, t) for t in range(start, start + 14)], start=start)
        for t in range(-10, 0):
            value = sum(c * Fraction(t) ** i for i, c in enumerate(coeffs))
            assert value == chi_ty_object(6, obj, t)


def test_exact_answers_are_effective(rng):
    for _ in range(40):
        a = _random_ty_object(rng, 6)
        b = _random_ty_object(rng, 6)
        ans = ext(a, b)
        assert ans.lower.is_effective() and ans.upper.is_effective()
        if ans.exact:
            assert ans.graded.is_effective()


def test_space_mismatch():
    with pytest.raises(SpaceMismatch):
        EquivariantObject.structure_sheaf(GR26) + EquivariantObject.structure_sheaf(ResolutionSpace(6))
    with pytest.raises(SpaceMismatch):
        EquivariantObject.structure_sheaf(GR26).twist(0, 1)
