"""Cohomology and Ext of formal equivariant objects.

Single bundles are handled exactly by Borel-Bott-Weil.  For formal
complexes we only know the first page of the hypercohomology spectral
sequence, so answers are marked exact only when no differential could
possibly be nonzero (see :class:`ExtAnswer`).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from ..schur import VirtualRep, sym_power_of_wedge2
from ..weights import DominantWeight, bbw_reduce
from .objects import (
    EquivariantObject,
    GrassmannianSpace,
    ResolutionSpace,
    SchurBundle,
    SpaceMismatch,
    Term,
)

FIBER_RANK = 6  # rank of Lambda^2 K^perp


class InexactCohomology(ArithmeticError):
    """Raised when an exact graded answer was requested but cancellation is possible."""


class GradedRep:
    """Finitely supported map: cohomological degree -> VirtualRep of GL(W) on W*."""

    def __init__(self, rank: int, degrees: Mapping[int, VirtualRep] = ()):
        self.rank = rank
        items = degrees.items() if isinstance(degrees, Mapping) else degrees
        acc: Dict[int, VirtualRep] = {}
        for d, rep in items:
            if rep.rank != rank:
                raise ValueError("all degrees must carry GL(rank) representations")
            acc[int(d)] = acc.get(int(d), VirtualRep.zero(rank)) + rep
        self.degrees = {d: r for d, r in sorted(acc.items()) if r}

    def __getitem__(self, d: int) -> VirtualRep:
        return self.degrees.get(d, VirtualRep.zero(self.rank))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedRep):
            return NotImplemented
        return self.rank == other.rank and self.degrees == other.degrees

    def __bool__(self) -> bool:
        return bool(self.degrees)

    def is_zero(self) -> bool:
        return not self.degrees

    def euler(self) -> VirtualRep:
        out = VirtualRep.zero(self.rank)
        for d, rep in self.degrees.items():
            out = out + (rep if d % 2 == 0 else -rep)
        return out

    def dims(self) -> Dict[int, int]:
        return {d: r.dimension() for d, r in self.degrees.items()}

    def is_effective(self) -> bool:
        return all(r.is_effective() for r in self.degrees.values())

    def __repr__(self) -> str:
        if not self.degrees:
            return "GradedRep(0)"
        body = ", ".join(f"H^{d}: {r.pretty('W*')}" for d, r in self.degrees.items())
        return f"GradedRep({body})"

    def to_json(self) -> dict:
        return {
            "degrees": {str(d): r.to_json() for d, r in self.degrees.items()},
            "dual_convention": "W*",
        }


@dataclass(frozen=True)
class ExtAnswer:
    """Either an exact graded answer or honest two-sided bounds.

    ``upper`` is the first page of the spectral sequence summed by total
    degree; ``lower`` keeps only what no differential can touch.  The two
    coincide exactly when the first-page entries are isolated.
    """

    upper: GradedRep
    lower: GradedRep
    euler: VirtualRep

    @property
    def exact(self) -> bool:
        return self.upper == self.lower

    @property
    def graded(self) -> GradedRep:
        if not self.exact:
            raise InexactCohomology("spectral sequence differentials may cancel terms")
        return self.upper

    def is_zero(self) -> bool:
        """True only when vanishing is certain."""
        return self.upper.is_zero()

    def to_json(self) -> dict:
        out = {"exact": self.exact, "euler": self.euler.to_json()}
        if self.exact:
            out["graded"] = self.upper.to_json()
        else:
            out["lower"] = self.lower.to_json()
            out["upper"] = self.upper.to_json()
        return out


# ---------------------------------------------------------------------------
# single bundles
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bbw_bundle(alpha: Tuple[int, ...]):
    return bbw_reduce(alpha)


def bundle_cohomology(bundle: SchurBundle) -> GradedRep:
    """H^*(Gr, Sigma^beta U* (x) Sigma^gamma U^perp) via Borel-Bott-Weil."""
    n = bundle.space.n
    out = _bbw_bundle(bundle.alpha)
    if out is None:
        return GradedRep(n)
    return GradedRep(n, {out.degree: VirtualRep.irreducible(out.weight)})


def _term_contribution(term: Term) -> List[Tuple[int, VirtualRep]]:
    out = _bbw_bundle(term.bundle.alpha)
    if out is None:
        return []
    return [(out.degree + term.shift, term.coeff * VirtualRep.irreducible(out.weight))]


# ---------------------------------------------------------------------------
# pushforward along TY -> G
# ---------------------------------------------------------------------------

def _sym_v(m: int, dual: bool = False) -> VirtualRep:
    """S^m V (or S^m V*) for V = Lambda^2 K^perp, as a GL(K^perp) representation."""
    if m < 0:
        return VirtualRep.zero(4)
    rep = VirtualRep(4, {lam: 1 for lam in sym_power_of_wedge2(m, 4)})
    return rep.dual() if dual else rep


_V = VirtualRep.irreducible((1, 1, 0, 0))
_DET_V = VirtualRep.irreducible((3, 3, 3, 3))


@lru_cache(maxsize=None)
def fiber_pushforward(t: int, quotient: bool = False) -> Tuple[Tuple[int, VirtualRep], ...]:
    """zeta_* O(t H_Y) (or zeta_* Q(t H_Y)) as (degree, GL(K^perp) rep) pairs.

    P(V) parametrises lines in V = Lambda^2 K^perp, so zeta_* O(t) = S^t V*
    for t >= 0, vanishes for -5 <= t <= -1, and for t <= -6 the only
    nonzero direct image is R^5 = S^(-t-6) V (x) det V.  det V = (det K^perp)^3.

    Q = V (x) O / O(-1).  Pushing 0 -> O(t-1) -> V (x) O(t) -> Q(t) -> 0 forward,
    the induced map of direct images is injective in every case where both
    sides are nonzero, so zeta_* Q(t) is its cokernel.
    """
    r = FIBER_RANK
    if not quotient:
        if t >= 0:
            return ((0, _sym_v(t, dual=True)),)
        if t > -r:
            return ()
        return ((r - 1, _sym_v(-t - r) * _DET_V),)
    if t >= 0:
        rep = _V * _sym_v(t, dual=True) - _sym_v(t - 1, dual=True)
        deg = 0
    elif t > -r + 1:
        return ()
    elif t == -r + 1:
        rep, deg = _DET_V, r - 2
    else:
        m = -t - r
        rep = (_V * _sym_v(m) - _sym_v(m + 1)) * _DET_V
        deg = r - 1
    assert rep.is_effective(), "direct image of Q must be an honest representation"
    return ((deg, rep),) if rep else ()


def _push_term(term: Term) -> List[Term]:
    base = term.bundle.space
    flat = Term(term.bundle, term.shift, 0, term.coeff)
    out = []
    for deg, rep in fiber_pushforward(term.hy, term.quotient):
        for gamma, mult in rep:
            extra = Term(SchurBundle(base, (0,) * base.k, gamma), deg, 0, mult)
            out.extend(flat.tensor(extra))
    return out


def projbundle_pushforward(n: int, t: int, obj: EquivariantObject = None) -> EquivariantObject:
    """zeta_*(zeta^* E (x) O(t H_Y)) for E on Gr(n-4, n), by the projection formula."""
    base = GrassmannianSpace(n - 4, n)
    if obj is None:
        obj = EquivariantObject.structure_sheaf(base)
    if obj.space != base:
        raise SpaceMismatch(f"pushforward input must live on {base}, got {obj.space}")
    if base.n - base.k != 4:
        raise ValueError("only Lambda^2 K^perp with K^perp of rank 4 is supported")
    lifted = [Term(x.bundle, x.shift, x.hy + t, x.coeff, x.quotient) for x in obj.terms]
    return EquivariantObject(base, tuple(y for x in lifted for y in _push_term(x)))


def push_to_base(obj: EquivariantObject) -> EquivariantObject:
    """zeta_* of an object on TY (identity on Grassmannian objects)."""
    if isinstance(obj.space, GrassmannianSpace):
        return obj
    return EquivariantObject(obj.space.base, tuple(y for x in obj.terms for y in _push_term(x)))


# ---------------------------------------------------------------------------
# honesty policy
# ---------------------------------------------------------------------------

def _answer(rank: int, contributions: List[Tuple[int, int, VirtualRep]]) -> ExtAnswer:
    """Assemble (source, degree, rep) first-page entries into an ExtAnswer.

    Entries from the same source are summands of a single bundle and never
    interact.  Entries from different sources in adjacent total degrees
    sharing an irreducible may be linked by an equivariant differential.
    """
    upper = GradedRep(rank, [(d, rep) for _, d, rep in contributions])
    by_degree: Dict[int, List[Tuple[int, VirtualRep]]] = defaultdict(list)
    for src, d, rep in contributions:
        by_degree[d].append((src, rep))

    exposed: Dict[Tuple[int, DominantWeight], int] = defaultdict(int)
    for d, entries in by_degree.items():
        for src, rep in entries:
            for w, m in rep:
                partners = sum(
                    max(other[w], 0)
                    for nd in (d - 1, d + 1)
                    for osrc, other in by_degree.get(nd, ())
                    if osrc != src
                )
                if partners:
                    exposed[(d, w)] += min(m, partners)

    if not exposed:
        return ExtAnswer(upper, upper, upper.euler())
    lower_terms = []
    for d, rep in upper.degrees.items():
        kept = {}
        for w, m in rep:
            nearby = upper[d - 1][w] + upper[d + 1][w]
            kept[w] = max(m - nearby, 0)
        lower_terms.append((d, VirtualRep(rank, kept)))
    return ExtAnswer(upper, GradedRep(rank, lower_terms), upper.euler())


def _contributions(obj: EquivariantObject, sources: Optional[List[int]] = None):
    sources = sources if sources is not None else list(range(len(obj.terms)))
    out = []
    for src, term in zip(sources, obj.terms):
        pieces = _push_term(term) if isinstance(obj.space, ResolutionSpace) else [term]
        for piece in pieces:
            for d, rep in _term_contribution(piece):
                out.append((src, d, rep))
    return out


def cohomology(obj: EquivariantObject) -> ExtAnswer:
    """Hypercohomology of a formal complex on Gr(k,n) or on TY."""
    return _answer(obj.space.base.n, _contributions(obj))


def cohomology_gr(obj: EquivariantObject) -> GradedRep:
    """Exact cohomology on a Grassmannian.

    Weights in the result are highest weights of representations on W*.
    Raises :class:`InexactCohomology` for a complex whose terms could cancel.
    """
    if not isinstance(obj.space, GrassmannianSpace):
        raise SpaceMismatch("cohomology_gr needs an object on a Grassmannian (no H_Y twist)")
    return cohomology(obj).graded


def hom_object(E: EquivariantObject, F: EquivariantObject) -> Tuple[EquivariantObject, List[int]]:
    """The formal complex E^dual (x) F, with the source pair of each term."""
    if E.space != F.space:
        raise SpaceMismatch(f"{E.space} vs {F.space}")
    terms, sources = [], []
    idx = 0
    for e in E.terms:
        de = e.dual()
        for f in F.terms:
            for t in de.tensor(f):
                terms.append(t)
                sources.append(idx)
            idx += 1
    return EquivariantObject(E.space, tuple(terms)), sources


def ext(E: EquivariantObject, F: EquivariantObject) -> ExtAnswer:
    """Ext^*(E, F) = H^*(E^dual (x) F) on Gr or TY, with the honesty policy."""
    obj, sources = hom_object(E, F)
    return _answer(E.space.base.n, _contributions(obj, sources))


def ext_gr(E: EquivariantObject, F: EquivariantObject) -> ExtAnswer:
    if not isinstance(E.space, GrassmannianSpace):
        raise SpaceMismatch("ext_gr works on Grassmannians; use cohomology_ty/ext on TY")
    return ext(E, F)


def cohomology_ty(n: int, obj: EquivariantObject) -> ExtAnswer:
    if n not in (6, 7):
        raise ValueError(f"cohomology on TY is supported for n = 6, 7 (got {n})")
    if obj.space != ResolutionSpace(n):
        raise SpaceMismatch(f"expected an object on ty({n}), got {obj.space}")
    return cohomology(obj)


def ext_ty(n: int, E: EquivariantObject, F: EquivariantObject) -> ExtAnswer:
    if n not in (6, 7):
        raise ValueError(f"cohomology on TY is supported for n = 6, 7 (got {n})")
    return ext(E, F)


def euler_characteristic(answer: Union[ExtAnswer, GradedRep]) -> VirtualRep:
    if isinstance(answer, ExtAnswer):
        return answer.euler
    return answer.euler()


def serre_check(E: EquivariantObject, F: EquivariantObject) -> Optional[bool]:
    """Serre duality on X = Gr(2, n): dim Ext^i(E,F) = dim Ext^(2n-4-i)(F, E(-n)).

    Returns ``None`` when either side is only known up to bounds.
    """
    space = E.space
    if not isinstance(space, GrassmannianSpace) or space.k != 2:
        raise SpaceMismatch("serre_check is for objects on Gr(2, n)")
    lhs = ext(E, F)
    rhs = ext(F, E.twist(-space.n))
    if not (lhs.exact and rhs.exact):
        return None
    d = space.dim
    a, b = lhs.upper.dims(), rhs.upper.dims()
    degrees = set(a) | {d - i for i in b}
    return all(a.get(i, 0) == b.get(d - i, 0) for i in degrees)


def convention_self_test() -> None:
    """zeta_* O(H_Y) must be (Lambda^2 K^perp)* = Lambda^2 (W/K)."""
    for n in (6, 7):
        base = GrassmannianSpace(n - 4, n)
        got = projbundle_pushforward(n, 1).canonical()
        want = EquivariantObject.bundle(base, (0,) * base.k, (0, 0, -1, -1)).canonical()
        if got != want:
            raise AssertionError(f"projectivisation convention broken for n={n}: {got.describe()}")
