"""Formal equivariant objects on Grassmannians and on the resolution TY.

Every homogeneous bundle on Gr(k, W) is written Sigma^beta U* (x) Sigma^gamma U^perp
with beta, gamma dominant.  Objects are finite formal complexes of such
bundles; each term carries a GL(W) multiplicity space, an H_Y twist (only
on TY) and a cohomological placement ``shift``: a term with shift d is
the bundle B[-d], i.e. B sitting in cohomological degree d.

On TY = P_G(Lambda^2 K^perp) over G = Gr(n-4, W) the tautological bundles
are pulled back from G, so the same (beta, gamma) pair describes them;
``hy`` records the twist by O(H_Y).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from ..schur import VirtualRep, lr_product
from ..weights import DominantWeight, RankMismatch, dual_weight, format_weight


class SpaceMismatch(ValueError):
    """Objects living on different spaces were combined."""


@dataclass(frozen=True)
class GrassmannianSpace:
    """Gr(k, n): tautological U of rank k, U^perp of rank n - k."""

    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"Gr({self.k},{self.n}) needs 1 <= k <= n-1")

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def base(self) -> "GrassmannianSpace":
        return self

    @property
    def label(self) -> str:
        return f"gr({self.k},{self.n})"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class ResolutionSpace:
    """TY = P_G(Lambda^2 K^perp) over G = Gr(n-4, n); lines in Lambda^2 K^perp."""

    n: int

    def __post_init__(self):
        if self.n < 5:
            raise ValueError("TY needs n >= 5")

    @property
    def base(self) -> GrassmannianSpace:
        return GrassmannianSpace(self.n - 4, self.n)

    @property
    def k(self) -> int:
        return self.n - 4

    @property
    def dim(self) -> int:
        return self.base.dim + 5

    @property
    def label(self) -> str:
        return f"ty({self.n})"

    def __str__(self) -> str:
        return self.label


Space = Union[GrassmannianSpace, ResolutionSpace]


@dataclass(frozen=True)
class SchurBundle:
    space: GrassmannianSpace
    beta: DominantWeight
    gamma: DominantWeight

    def __post_init__(self):
        object.__setattr__(self, "beta", DominantWeight(self.beta))
        object.__setattr__(self, "gamma", DominantWeight(self.gamma))
        if self.beta.rank != self.space.k or self.gamma.rank != self.space.n - self.space.k:
            raise RankMismatch(
                f"bundle weights ({format_weight(self.beta)} | {format_weight(self.gamma)}) "
                f"do not fit {self.space}"
            )

    @property
    def alpha(self) -> Tuple[int, ...]:
        return tuple(self.beta) + tuple(self.gamma)

    def dual(self) -> "SchurBundle":
        return SchurBundle(self.space, dual_weight(self.beta), dual_weight(self.gamma))

    def twist(self, a: int) -> "SchurBundle":
        """Tensor with O(a) = Sigma^(a,...,a) U*."""
        return SchurBundle(self.space, self.beta.shifted(a), self.gamma)

    def rank(self) -> int:
        from ..schur import dimension

        return dimension(self.beta) * dimension(self.gamma)

    def tensor(self, other: "SchurBundle") -> List[Tuple["SchurBundle", int]]:
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space} vs {other.space}")
        out = []
        for b, mb in lr_product(self.beta, other.beta):
            for g, mg in lr_product(self.gamma, other.gamma):
                out.append((SchurBundle(self.space, b, g), mb * mg))
        return out

    def __str__(self) -> str:
        return f"S[{format_weight(self.beta)}]U* x S[{format_weight(self.gamma)}]Uperp"


@dataclass(frozen=True)
class Term:
    """One summand ``coeff (x) bundle (x) O(hy H_Y) [-shift]`` of a formal complex.

    With ``quotient`` set the summand is additionally tensored with the
    tautological quotient Q = Lambda^2 K^perp / O(-H_Y) of rank 5 on TY.
    """

    bundle: SchurBundle
    shift: int = 0
    hy: int = 0
    coeff: VirtualRep = None  # GL(W) multiplicity space, recorded on W*
    quotient: bool = False

    def __post_init__(self):
        n = self.bundle.space.n
        if self.coeff is None:
            object.__setattr__(self, "coeff", VirtualRep.trivial(n))
        elif isinstance(self.coeff, int):
            object.__setattr__(self, "coeff", VirtualRep.trivial(n, self.coeff))
        if self.coeff.rank != n:
            raise RankMismatch("multiplicity space must be a GL(W) representation")

    @property
    def mult(self) -> int:
        return self.coeff.dimension()

    def dual(self) -> "Term":
        if self.quotient:
            raise NotImplementedError("the dual of the tautological quotient is not modelled")
        return Term(self.bundle.dual(), -self.shift, -self.hy, self.coeff.dual())

    def tensor(self, other: "Term") -> List["Term"]:
        if self.quotient and other.quotient:
            raise NotImplementedError("Q (x) Q is not modelled")
        coeff = self.coeff * other.coeff
        if not coeff:
            return []
        return [
            Term(b, self.shift + other.shift, self.hy + other.hy, coeff * m,
                 self.quotient or other.quotient)
            for b, m in self.bundle.tensor(other.bundle)
        ]


@dataclass(frozen=True)
class EquivariantObject:
    """A finite formal complex of homogeneous bundles on ``space``."""

    space: Space
    terms: Tuple[Term, ...] = field(default_factory=tuple)

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        for t in terms:
            if t.bundle.space != self.space.base:
                raise SpaceMismatch(f"term on {t.bundle.space} inside object on {self.space}")
            if isinstance(self.space, GrassmannianSpace) and (t.hy != 0 or t.quotient):
                raise SpaceMismatch("H_Y twists and Q only exist on TY")

    # constructors ----------------------------------------------------------
    @classmethod
    def bundle(cls, space: Space, beta: Iterable[int], gamma: Iterable[int] = None, *,
               shift: int = 0, hy: int = 0, coeff=None, quotient: bool = False) -> "EquivariantObject":
        base = space.base
        if gamma is None:
            gamma = (0,) * (base.n - base.k)
        return cls(space, (Term(SchurBundle(base, beta, gamma), shift, hy, coeff, quotient),))

    @classmethod
    def structure_sheaf(cls, space: Space) -> "EquivariantObject":
        base = space.base
        return cls.bundle(space, (0,) * base.k)

    @classmethod
    def zero(cls, space: Space) -> "EquivariantObject":
        return cls(space, ())

    # algebra ---------------------------------------------------------------
    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "EquivariantObject") -> "EquivariantObject":
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space} vs {other.space}")
        return EquivariantObject(self.space, self.terms + other.terms)

    def twist(self, a: int = 0, b: int = 0) -> "EquivariantObject":
        """Tensor with O(a H_G + b H_Y); on a plain Grassmannian ``a`` is O(a)."""
        if b and isinstance(self.space, GrassmannianSpace):
            raise SpaceMismatch("H_Y twists only exist on TY")
        return EquivariantObject(
            self.space, tuple(replace(t, bundle=t.bundle.twist(a), hy=t.hy + b) for t in self.terms)
        )

    def shift(self, k: int) -> "EquivariantObject":
        """The usual [k]: moves every term k steps to the left."""
        return EquivariantObject(self.space, tuple(replace(t, shift=t.shift - k) for t in self.terms))

    def dual(self) -> "EquivariantObject":
        return EquivariantObject(self.space, tuple(t.dual() for t in self.terms))

    def with_coeff(self, rep: VirtualRep) -> "EquivariantObject":
        """Tensor every term with a constant GL(W) representation."""
        return EquivariantObject(
            self.space, tuple(replace(t, coeff=t.coeff * rep) for t in self.terms if t.coeff * rep)
        )

    def tensor(self, other: "EquivariantObject") -> "EquivariantObject":
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space} vs {other.space}")
        return EquivariantObject(self.space, tuple(x for a in self for b in other for x in a.tensor(b)))

    def canonical(self) -> "EquivariantObject":
        """Merge equal (bundle, shift, hy) terms and drop zero ones; sorted."""
        acc = {}
        for t in self.terms:
            key = (t.bundle.beta, t.bundle.gamma, t.shift, t.hy, t.quotient)
            acc[key] = acc.get(key, VirtualRep.zero(self.space.base.n)) + t.coeff
        base = self.space.base
        terms = tuple(
            Term(SchurBundle(base, b, g), s, h, c, q)
            for (b, g, s, h, q), c in sorted(acc.items(), key=lambda kv: (kv[0][2], kv[0][3], kv[0][4], kv[0][0], kv[0][1]))
            if c
        )
        return EquivariantObject(self.space, terms)

    def is_zero(self) -> bool:
        return not self.canonical().terms

    def describe(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            s = str(t.bundle)
            if t.quotient:
                s = "Q x " + s
            if t.hy:
                s += f"(({t.hy})H_Y)"
            if t.shift:
                s += f"[{-t.shift}]"
            if t.coeff != VirtualRep.trivial(self.space.base.n):
                s = f"({t.coeff.pretty('W*')}) x " + s
            parts.append(s)
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "space": self.space.label,
            "terms": [
                {
                    "beta": [str(x) for x in t.bundle.beta],
                    "gamma": [str(x) for x in t.bundle.gamma],
                    "shift": t.shift,
                    "hy": t.hy,
                    "quotient": t.quotient,
                    "coeff": t.coeff.to_json(),
                }
                for t in self.canonical().terms
            ],
        }


def parse_space(text: str) -> Space:
    """``gr(k,n)`` or ``ty(n)``."""
    s = text.replace(" ", "").lower()
    try:
        if s.startswith("gr(") and s.endswith(")"):
            k, n = (int(x) for x in s[3:-1].split(","))
            return GrassmannianSpace(k, n)
        if s.startswith("ty(") and s.endswith(")"):
            return ResolutionSpace(int(s[3:-1]))
    except ValueError as exc:
        raise ValueError(f"malformed space {text!r}: {exc}") from exc
    raise ValueError(f"malformed space {text!r}; expected gr(k,n) or ty(n)")


def sequence_sum(space: Space, objects: Sequence[EquivariantObject]) -> EquivariantObject:
    out = EquivariantObject.zero(space)
    for o in objects:
        out = out + o
    return out
