"""Named objects: E_k on X = Gr(2, W) and F_k, F'_k, 'F_k on TY.

On TY the multiplicity spaces W, S^2 W of the mutated objects are recorded
on W* like every other representation, so W itself is the weight
(0, ..., 0, -1).
"""

from __future__ import annotations

from .cohom.objects import EquivariantObject, GrassmannianSpace, ResolutionSpace
from .schur import VirtualRep


def e_object(n: int, k: int) -> EquivariantObject:
    """E_0 = O, E_1 = U, E_2 = S^2 U on Gr(2, n)."""
    if k not in (0, 1, 2):
        raise ValueError("E_k exists for k = 0, 1, 2")
    return EquivariantObject.bundle(GrassmannianSpace(2, n), (0, -k))


def _w(n: int, m: int) -> VirtualRep:
    """S^m W recorded on W*."""
    return VirtualRep.irreducible((0,) * (n - 1) + (-m,))


def f_object(n: int, k: int, *, quotient_form: bool = False) -> EquivariantObject:
    """F_2 = O, F_1 = W/K and F_0 = coker(O(H_G - H_Y) -> Lambda^2(W/K)).

    By default F_0 is the two-term complex.  ``quotient_form`` gives the same
    sheaf as Q (x) det(W/K), with Q the tautological quotient of
    Lambda^2 K^perp, whose direct images are computed without cancellation.
    """
    space = ResolutionSpace(n)
    zero = (0,) * space.k
    if k == 2:
        return EquivariantObject.structure_sheaf(space)
    if k == 1:
        return EquivariantObject.bundle(space, zero, (0, 0, 0, -1))
    if k == 0:
        if quotient_form:
            return EquivariantObject.bundle(space, zero, (-1, -1, -1, -1), quotient=True)
        return EquivariantObject.bundle(space, zero, (-1, -1, -1, -1), shift=-1, hy=-1) + \
            EquivariantObject.bundle(space, zero, (0, 0, -1, -1))
    raise ValueError("F_k exists for k = 0, 1, 2")


def f_dual(n: int, k: int) -> EquivariantObject:
    return f_object(n, k).dual()


def f_prime(n: int, k: int) -> EquivariantObject:
    """F'_2 = F_2, F'_1 = {W (x) F_2 -> F_1}, F'_0 = {S^2 W (x) F_2 -> W (x) F_1 -> F_0}."""
    if k == 2:
        return f_object(n, 2)
    if k == 1:
        return f_object(n, 2).with_coeff(_w(n, 1)).shift(1) + f_object(n, 1)
    if k == 0:
        return (
            f_object(n, 2).with_coeff(_w(n, 2)).shift(2)
            + f_object(n, 1).with_coeff(_w(n, 1)).shift(1)
            + f_object(n, 0)
        )
    raise ValueError("F'_k exists for k = 0, 1, 2")


def f_left(n: int, k: int) -> EquivariantObject:
    """'F_0 = F_0^*, 'F_1 = {W (x) F_0^* -> F_1^*}, 'F_2 = {S^2 W (x) F_0^* -> W (x) F_1^* -> F_2^*}.

    These are only determined up to shift; the first term of each complex
    sits in degree 0, which makes Hom('F_k, 'F_l) agree with Hom(E_k, E_l)
    in every degree parity.
    """
    if k == 0:
        return f_dual(n, 0)
    if k == 1:
        return f_dual(n, 0).with_coeff(_w(n, 1)) + f_dual(n, 1).shift(-1)
    if k == 2:
        return (
            f_dual(n, 0).with_coeff(_w(n, 2))
            + f_dual(n, 1).with_coeff(_w(n, 1)).shift(-1)
            + f_dual(n, 2).shift(-2)
        )
    raise ValueError("'F_k exists for k = 0, 1, 2")


def wedge_quotient(space: GrassmannianSpace, k: int) -> EquivariantObject:
    """Lambda^k(W/U) = Sigma^(0,..,0,-1,..,-1) U^perp."""
    r = space.n - space.k
    if not 0 <= k <= r:
        return EquivariantObject.zero(space)
    return EquivariantObject.bundle(space, (0,) * space.k, (0,) * (r - k) + (-1,) * k)
