"""GL(n) weight combinatorics and the Borel-Bott-Weil reduction step."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


class RankMismatch(ValueError):
    """Two weights (or representations) of different rank were combined."""


class Weight(tuple):
    """An integer weight of GL(n), stored as an immutable tuple of ints."""

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(entries)
        for e in entries:
            if isinstance(e, bool) or not isinstance(e, int):
                raise TypeError(f"weight entries must be integers, got {e!r}")
        if not entries:
            raise ValueError("a weight needs rank n >= 1")
        return super().__new__(cls, entries)

    @property
    def rank(self) -> int:
        return len(self)

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self, self[1:]))

    def __add__(self, other):
        _check_rank(self, other)
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _check_rank(self, other)
        return Weight(a - b for a, b in zip(self, other))

    def shifted(self, c: int) -> "Weight":
        """Add ``c`` to every entry (a twist by det^c)."""
        return type(self)(e + c for e in self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_weight(self)})"


class DominantWeight(Weight):
    """A nonincreasing weight; indexes an irreducible representation."""

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        if not self.is_dominant():
            raise ValueError(f"weight {tuple(self)} is not nonincreasing")
        return self


def _check_rank(a, b) -> None:
    if len(a) != len(b):
        raise RankMismatch(f"rank mismatch: {len(a)} vs {len(b)}")


@dataclass(frozen=True)
class BBWOutcome:
    """Nonzero outcome of :func:`bbw_reduce`.

    ``weight`` is the highest weight of the cohomology *as a representation
    on the dual space* V*, sitting in cohomological degree ``degree``.
    """

    degree: int
    weight: DominantWeight


def rho(n: int) -> Weight:
    if n < 1:
        raise ValueError("rank must be >= 1")
    return Weight(range(n, 0, -1))


def bbw_reduce(alpha: Iterable[int]) -> Optional[BBWOutcome]:
    """Borel-Bott-Weil for the line bundle L_alpha on the full flag variety.

    Returns ``None`` when alpha + rho has a repeated entry (all cohomology
    vanishes); otherwise the unique nonzero degree together with the
    dominant weight ``sort(alpha + rho) - rho`` on V*.
    """
    alpha = Weight(alpha)
    shifted = alpha + rho(alpha.rank)
    if len(set(shifted)) < len(shifted):
        return None
    inversions = sum(
        1
        for i in range(len(shifted))
        for j in range(i + 1, len(shifted))
        if shifted[i] < shifted[j]
    )
    ordered = Weight(sorted(shifted, reverse=True))
    return BBWOutcome(inversions, DominantWeight(ordered - rho(alpha.rank)))


def dual_weight(alpha: Iterable[int]) -> Weight:
    """Highest weight of the dual: negate and reverse."""
    alpha = tuple(alpha)
    cls = DominantWeight if Weight(alpha).is_dominant() else Weight
    return cls(-a for a in reversed(alpha))


def format_weight(alpha: Iterable[int]) -> str:
    return ",".join(str(a) for a in alpha)


def parse_weight(text: str, rank: Optional[int] = None) -> Weight:
    """Parse ``"1,1,0,0"`` into a :class:`Weight`, checking the rank if given."""
    parts = [p.strip() for p in text.split(",")]
    try:
        w = Weight(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"malformed weight {text!r}") from exc
    if rank is not None and w.rank != rank:
        raise RankMismatch(f"weight {text!r} has rank {w.rank}, expected {rank}")
    return w


def weight_to_json(alpha: Iterable[int]) -> list:
    return [str(a) for a in alpha]


def weight_from_json(data: list) -> Weight:
    return Weight(int(x) for x in data)
