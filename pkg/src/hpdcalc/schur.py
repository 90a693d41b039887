"""The virtual representation ring of GL(n).

Irreducibles are indexed by dominant weights; a :class:`VirtualRep` is a
finite signed integer combination of them.  Products use the
Littlewood-Richardson rule, enumerated directly as LR tableaux.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

from .weights import DominantWeight, RankMismatch, dual_weight, weight_from_json, weight_to_json


class VirtualRep:
    """A formal Z-linear combination of irreducible GL(rank) representations.

    Zero multiplicities are never stored.  Instances are immutable and
    hashable; iteration yields ``(weight, multiplicity)`` in lexicographic
    order of the weights.
    """

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Iterable[int], int] | Iterable = ()):
        if rank < 1:
            raise ValueError("rank must be >= 1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[DominantWeight, int] = {}
        for w, m in items:
            w = DominantWeight(w)
            if w.rank != rank:
                raise RankMismatch(f"weight {tuple(w)} does not have rank {rank}")
            acc[w] = acc.get(w, 0) + int(m)
        self.rank = rank
        self._terms = tuple(sorted((w, m) for w, m in acc.items() if m != 0))
        self._hash = None

    @classmethod
    def irreducible(cls, weight: Iterable[int], mult: int = 1) -> "VirtualRep":
        weight = DominantWeight(weight)
        return cls(weight.rank, {weight: mult})

    @classmethod
    def trivial(cls, rank: int, mult: int = 1) -> "VirtualRep":
        return cls(rank, {(0,) * rank: mult})

    @classmethod
    def zero(cls, rank: int) -> "VirtualRep":
        return cls(rank)

    # -- container protocol -------------------------------------------------
    def __iter__(self) -> Iterator[Tuple[DominantWeight, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, weight) -> int:
        weight = tuple(weight)
        for w, m in self._terms:
            if w == weight:
                return m
        return 0

    def terms(self) -> Dict[DominantWeight, int]:
        return dict(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, self._terms))
        return self._hash

    # -- ring operations ----------------------------------------------------
    def _check(self, other: "VirtualRep") -> None:
        if self.rank != other.rank:
            raise RankMismatch(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return VirtualRep(self.rank, list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self) -> "VirtualRep":
        return VirtualRep(self.rank, [(w, -m) for w, m in self._terms])

    def __sub__(self, other: "VirtualRep") -> "VirtualRep":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return VirtualRep(self.rank, [(w, m * other) for w, m in self._terms])
        if isinstance(other, VirtualRep):
            return tensor(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def dimension(self) -> int:
        """Signed dimension (the virtual dimension)."""
        return sum(m * dimension(w) for w, m in self._terms)

    def dual(self) -> "VirtualRep":
        return dualize(self)

    def is_effective(self) -> bool:
        return all(m > 0 for _, m in self._terms)

    def shifted(self, c: int) -> "VirtualRep":
        """Twist every summand by det^c."""
        return VirtualRep(self.rank, [(w.shifted(c), m) for w, m in self._terms])

    # -- display / serialisation --------------------------------------------
    def __repr__(self) -> str:
        if not self._terms:
            return f"VirtualRep({self.rank}, 0)"
        return f"VirtualRep({self.rank}, {self.pretty()})"

    def pretty(self, symbol: str = "S") -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, m in self._terms:
            label = f"{symbol}[{','.join(map(str, w))}]"
            if m == 1:
                parts.append(label)
            elif m == -1:
                parts.append(f"-{label}")
            else:
                parts.append(f"{m}*{label}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [{"weight": weight_to_json(w), "mult": str(m)} for w, m in self._terms],
        }

    @classmethod
    def from_json(cls, data: dict) -> "VirtualRep":
        return cls(
            int(data["rank"]),
            [(weight_from_json(t["weight"]), int(t["mult"])) for t in data["terms"]],
        )


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule
# ---------------------------------------------------------------------------

def _horizontal_strips(shape: Tuple[int, ...], k: int, max_rows: int) -> Iterator[Tuple[int, ...]]:
    """All shapes obtained from ``shape`` by adding a horizontal strip of k boxes."""
    rows = list(shape) + [0] * (max_rows - len(shape))

    def rec(i: int, left: int, acc: List[int]):
        if i == max_rows:
            if left == 0:
                yield tuple(acc)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            acc.append(rows[i] + add)
            yield from rec(i + 1, left - add, acc)
            acc.pop()

    yield from rec(0, k, [])


def _is_lattice(filling: List[List[int]]) -> bool:
    counts = Counter()
    for row in filling:
        for label in reversed(row):
            counts[label] += 1
            if label > 1 and counts[label] > counts[label - 1]:
                return False
    return True


@lru_cache(maxsize=None)
def _lr_partitions(lam: Tuple[int, ...], mu: Tuple[int, ...], max_rows: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """c^nu_{lam,mu} for partitions, keeping only nu with <= max_rows rows."""
    mu = tuple(p for p in mu if p > 0)
    result: Counter = Counter()

    def rec(idx: int, shape: Tuple[int, ...], filling: List[List[int]]):
        if idx == len(mu):
            result[shape] += 1
            return
        label = idx + 1
        for new in _horizontal_strips(shape, mu[idx], max_rows):
            grown = [list(r) for r in filling] + [[] for _ in range(len(new) - len(filling))]
            for r, (a, b) in enumerate(zip(list(shape) + [0] * (len(new) - len(shape)), new)):
                grown[r].extend([label] * (b - a))
            if _is_lattice(grown):
                rec(idx + 1, new, grown)

    base = tuple(lam) + (0,) * (max_rows - len(lam))
    rec(0, base, [[] for _ in range(max_rows)])
    return tuple(sorted(result.items()))


def lr_product(lam: Iterable[int], mu: Iterable[int]) -> VirtualRep:
    """Decompose Sigma^lam (x) Sigma^mu for GL(n), n = len(lam) = len(mu).

    Weights may have negative entries; both factors are normalised to
    partitions by a determinant shift before the combinatorics, and the
    shift is restored on the output.
    """
    lam, mu = DominantWeight(lam), DominantWeight(mu)
    if lam.rank != mu.rank:
        raise RankMismatch(f"rank mismatch: {lam.rank} vs {mu.rank}")
    n = lam.rank
    a, b = lam[-1], mu[-1]
    raw = _lr_partitions(tuple(x - a for x in lam), tuple(x - b for x in mu), n)
    return VirtualRep(n, [(tuple(x + a + b for x in nu), c) for nu, c in raw])


def tensor(a: VirtualRep, b: VirtualRep) -> VirtualRep:
    a._check(b)
    acc: Counter = Counter()
    for w1, m1 in a:
        for w2, m2 in b:
            for w, c in lr_product(w1, w2):
                acc[w] += m1 * m2 * c
    return VirtualRep(a.rank, acc)


def dualize(rep: VirtualRep) -> VirtualRep:
    return VirtualRep(rep.rank, [(dual_weight(w), m) for w, m in rep])


def dimension(lam: Iterable[int]) -> int:
    """Weyl dimension formula; exact integer arithmetic."""
    lam = tuple(lam)
    n = len(lam)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    value = Fraction(num, den)
    assert value.denominator == 1
    return int(value)


def sym_power_of_wedge2(t: int, r: int) -> List[DominantWeight]:
    """Highest weights of S^t(Lambda^2 E) for E of rank r.

    These are the partitions of 2t with at most r rows whose columns all
    have even height, i.e. rows come in equal pairs.
    """
    if t < 0 or r < 2:
        raise ValueError("need t >= 0 and r >= 2")
    pairs = r // 2
    out = []

    def rec(left: int, cap: int, acc: List[int]):
        if len(acc) == pairs:
            if left == 0:
                rows = [x for a in acc for x in (a, a)]
                out.append(DominantWeight(rows + [0] * (r - len(rows))))
            return
        for a in range(min(left, cap), -1, -1):
            rec(left - a, a, acc + [a])

    rec(t, t, [])
    return sorted(out)


def symmetric_power(m: int, n: int) -> DominantWeight:
    """Highest weight of S^m of the standard representation of GL(n)."""
    return DominantWeight((m,) + (0,) * (n - 1))


def exterior_power(m: int, n: int) -> DominantWeight:
    """Highest weight of Lambda^m of the standard representation (m <= n)."""
    if not 0 <= m <= n:
        raise ValueError(f"Lambda^{m} of a rank {n} representation is zero")
    return DominantWeight((1,) * m + (0,) * (n - m))
