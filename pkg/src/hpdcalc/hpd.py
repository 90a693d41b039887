"""Lefschetz decompositions, the HPD dual, and linear-section bookkeeping for
X = Gr(2, W) and the Pfaffian Y, dim W in {6, 7}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .bundles import e_object, f_dual, f_object, wedge_quotient
from .cohom.engine import cohomology, ext
from .cohom.hilbert import (
    HilbertData,
    chi_ty_object,
    hilbert_data_gr,
    hilbert_data_pfaffian,
    koszul_section,
)
from .cohom.objects import EquivariantObject, GrassmannianSpace, ResolutionSpace
from .schur import VirtualRep

# ---------------------------------------------------------------------------
# Lefschetz models
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LefschetzModel:
    """Blocks A_0 >= A_1 >= ... of object labels, for an embedding into P(V), dim V = N.

    ``orientation`` is "left" for <A_0, A_1(1), ...> and "right" for the
    dual <B_{j-1}(1-j), ..., B_0>.  ``space`` and ``twist_kind`` say how
    labels resolve to objects: twist "H" is O(1) on a Grassmannian, "H_Y"
    is O(H_Y) on TY.  Models produced by :func:`dual_lefschetz` have no
    resolver; their labels are symbolic.
    """

    name: str
    N: int
    blocks: Tuple[Tuple[str, ...], ...]
    orientation: str = "left"
    space: Optional[object] = None
    twist_kind: str = "H"

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.orientation not in ("left", "right"):
            raise ValueError("orientation is 'left' or 'right'")
        for big, small in zip(blocks, blocks[1:]):
            if not set(small) <= set(big):
                raise ValueError(f"{self.name}: blocks are not nested")
        if blocks and self.N < len(blocks):
            raise ValueError(f"{self.name}: N = {self.N} is smaller than the number of blocks")

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> List[int]:
        return [len(b) for b in self.blocks]

    def primitive_parts(self) -> List[Tuple[str, ...]]:
        """a_k = A_k minus A_(k+1), keeping the block order."""
        out = []
        for k, block in enumerate(self.blocks):
            nxt = set(self.blocks[k + 1]) if k + 1 < self.m else set()
            out.append(tuple(x for x in block if x not in nxt))
        return out

    def total(self) -> int:
        return sum(self.sizes)

    def resolve(self, label: str) -> EquivariantObject:
        if self.space is None:
            raise LookupError(f"{self.name} has symbolic labels only")
        return _resolve_label(self.space, label)

    def block_string(self, k: int, twist: int) -> str:
        head = "A" if self.orientation == "left" else "B"
        return f"{head}_{k}({twist})" if twist else f"{head}_{k}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "N": self.N,
            "orientation": self.orientation,
            "blocks": [list(b) for b in self.blocks],
            "sizes": self.sizes,
        }


def _resolve_label(space, label: str) -> EquivariantObject:
    if isinstance(space, ResolutionSpace):
        m = re.fullmatch(r"F([012])\*", label)
        if m:
            return f_dual(space.n, int(m.group(1)))
    else:
        m = re.fullmatch(r"E([012])", label)
        if m and space.k == 2:
            return e_object(space.n, int(m.group(1)))
        if label == "O":
            return EquivariantObject.structure_sheaf(space)
        m = re.fullmatch(r"S\^(\d+)U", label)
        if m and space.k == 2:
            return EquivariantObject.bundle(space, (0, -int(m.group(1))))
    raise LookupError(f"unknown object label {label!r} on {space}")


def _gr2_blocks(m: int, labels: Callable[[int], str]) -> List[Tuple[str, ...]]:
    k = m // 2
    full = tuple(labels(i) for i in range(k - 1, -1, -1))
    if m % 2:
        return [full] * m
    return [full] * k + [full[1:]] * k


def builtin_lefschetz(name: str) -> LefschetzModel:
    """gr2n(m), ldx6, ldx7, ldtd6, ldtd7 or beilinson(n)."""
    key = name.replace(" ", "").lower()
    m = re.fullmatch(r"gr2n\((\d+)\)", key)
    if m:
        n = int(m.group(1))
        if n < 3:
            raise ValueError("gr2n needs m >= 3")
        blocks = _gr2_blocks(n, lambda i: "O" if i == 0 else f"S^{i}U")
        return LefschetzModel(name, comb(n, 2), blocks, "left", GrassmannianSpace(2, n))
    m = re.fullmatch(r"ldx([67])", key)
    if m:
        n = int(m.group(1))
        return LefschetzModel(key, comb(n, 2), _gr2_blocks(n, lambda i: f"E{i}"), "left", GrassmannianSpace(2, n))
    m = re.fullmatch(r"ldtd([67])", key)
    if m:
        n = int(m.group(1))
        full = ("F0*", "F1*", "F2*")
        blocks = [full] * 9 + [("F2*",)] * 3 if n == 6 else [full] * 14
        return LefschetzModel(key, comb(n, 2), blocks, "right", ResolutionSpace(n), "H_Y")
    m = re.fullmatch(r"beilinson\((\d+)\)", key)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ValueError("beilinson(n) needs n >= 1")
        return LefschetzModel(key, n + 1, [("O",)] * (n + 1), "left", GrassmannianSpace(1, n + 1))
    raise LookupError(f"unknown Lefschetz model {name!r}")


# On TY the primitive piece a_k of (ldx) is realised by the F_l^* with l = label index.
_REALISATION = {"E0": "F0*", "E1": "F1*", "E2": "F2*"}


def dual_lefschetz(model: LefschetzModel) -> LefschetzModel:
    """The HPD dual blocks B_k = <a_0, ..., a_(N-k-2)>, k = 0..j-1."""
    if model.orientation != "left":
        raise ValueError("dual_lefschetz expects a left Lefschetz model")
    if not model.blocks or not any(model.blocks):
        raise ValueError("degenerate Lefschetz model")
    a = model.primitive_parts()
    top = max(k for k, b in enumerate(model.blocks) if b == model.blocks[0])
    j = model.N - 1 - top
    blocks = []
    for k in range(j):
        labels = [x for i in range(min(model.N - k - 1, len(a))) for x in a[i]]
        names = [_REALISATION.get(x, f"B({x})") for x in labels]
        if all(x in _REALISATION for x in labels):
            names.sort()  # realised blocks are ordered <F0*, F1*, F2*>
        blocks.append(tuple(names))
    space = None
    if model.name in ("ldx6", "ldx7"):
        space = ResolutionSpace(model.space.n)
    return LefschetzModel(f"dual({model.name})", model.N, blocks, "right", space, "H_Y")


def dual_count_formula(model: LefschetzModel) -> int:
    """sum_k (N - k - 1) |a_k|, the dual total counted from primitive parts."""
    return sum((model.N - k - 1) * len(p) for k, p in enumerate(model.primitive_parts()))


# ---------------------------------------------------------------------------
# geometry
# ---------------------------------------------------------------------------


def _check_n(n: int) -> None:
    if n not in (6, 7):
        raise ValueError(f"only dim W = 6 or 7 is supported (got {n})")


def expected_dimensions(n: int, r: int) -> Tuple[int, int, int]:
    """(dim X_L, dim Y_L, dim Z_L) for dim L = r; negative means empty."""
    _check_n(n)
    dim_x, dim_y = 2 * n - 4, comb(n, 2) - 1 - (1 if n == 6 else 3)
    dim_z = 2 * n - 4
    return dim_x - r, dim_y - comb(n, 2) + r, dim_z - comb(n, 2) + r


@dataclass(frozen=True)
class PfaffianStratum:
    n: int
    t: int
    dim: int
    codim: int
    is_hypersurface: bool
    hypersurface_degree: Optional[int]
    note: str

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "dim": self.dim,
            "codim": self.codim,
            "is_hypersurface": self.is_hypersurface,
            "hypersurface_degree": self.hypersurface_degree,
            "note": self.note,
        }


def pfaffian_stratum(n: int, t: int) -> PfaffianStratum:
    """Pf(2t, W*): skew forms of rank <= 2t in P(Lambda^2 W*)."""
    if n < 2 or not 0 <= t <= n // 2:
        raise ValueError("need n >= 2 and 0 <= t <= n/2")
    ambient = comb(n, 2) - 1
    dim = comb(n, 2) - comb(n - 2 * t, 2) - 1
    codim = ambient - dim
    hyper = codim == 1
    degree = n // 2 if hyper and n % 2 == 0 else None
    if t == 0:
        note = "empty"
    elif t == 1:
        note = f"Gr(2,{n}*)"
    elif codim == 0:
        note = "whole space"
    else:
        note = ""
    return PfaffianStratum(n, t, dim, codim, hyper, degree, note)


@dataclass(frozen=True)
class PicClassTY:
    """a H_G + b H_Y."""

    coef_HG: int
    coef_HY: int

    def __add__(self, other: "PicClassTY") -> "PicClassTY":
        return PicClassTY(self.coef_HG + other.coef_HG, self.coef_HY + other.coef_HY)

    def __str__(self) -> str:
        return f"{self.coef_HG}H_G{self.coef_HY:+d}H_Y"

    def to_json(self) -> list:
        return [self.coef_HG, self.coef_HY]


@dataclass(frozen=True)
class ResolutionGeometry:
    n: int
    K_TY: PicClassTY
    K_TZ: PicClassTY
    TZ: PicClassTY

    @property
    def adjunction_ok(self) -> bool:
        return self.K_TY + self.TZ == self.K_TZ

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "K_TY": self.K_TY.to_json(),
            "K_TZ": self.K_TZ.to_json(),
            "TZ": self.TZ.to_json(),
            "adjunction_ok": self.adjunction_ok,
        }


def resolution_geometry(n: int) -> ResolutionGeometry:
    if n < 6:
        raise ValueError("need n >= 6")
    return ResolutionGeometry(
        n,
        PicClassTY(-(n - 3), -6),
        PicClassTY(-(n - 2), -4),
        PicClassTY(-1, 2),
    )


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LogEntry:
    claim: str
    method: str  # "direct" or "serre-rule"
    outcome: str  # "pass", "fail", "derived" or "refuted"
    detail: str = ""

    def to_json(self) -> dict:
        return {"claim": self.claim, "method": self.method, "outcome": self.outcome, "detail": self.detail}


@dataclass
class VerificationLog:
    suite: str
    entries: List[LogEntry] = field(default_factory=list)

    def add(self, claim: str, ok: bool, detail: str = "") -> None:
        self.entries.append(LogEntry(claim, "direct", "pass" if ok else "fail", detail))

    def derive(self, claim: str, rule: str) -> None:
        self.entries.append(LogEntry(claim, "serre-rule", "derived", rule))

    def refute(self, claim: str, detail: str) -> None:
        """A quoted claim that fails a check independent of the engine."""
        self.entries.append(LogEntry(claim, "direct", "refuted", detail))

    def extend(self, other: "VerificationLog") -> None:
        self.entries.extend(other.entries)

    @property
    def passed(self) -> int:
        return sum(e.outcome == "pass" for e in self.entries)

    @property
    def failures(self) -> List[LogEntry]:
        return [e for e in self.entries if e.outcome == "fail"]

    @property
    def derived(self) -> int:
        return sum(e.outcome == "derived" for e in self.entries)

    @property
    def refuted(self) -> List[LogEntry]:
        return [e for e in self.entries if e.outcome == "refuted"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "failed": len(self.failures),
            "derived": self.derived,
            "refuted": len(self.refuted),
            "entries": [e.to_json() for e in sorted(self.entries, key=lambda e: (e.method, e.claim))],
        }

    def markdown(self) -> str:
        lines = [f"### {self.suite}", "",
                 f"passed {self.passed}, failed {len(self.failures)}, derived {self.derived}, refuted {len(self.refuted)}", ""]
        lines += ["| claim | method | outcome |", "|---|---|---|"]
        for e in sorted(self.entries, key=lambda e: (e.method, e.claim)):
            lines.append(f"| {e.claim} | {e.method} | {e.outcome} |")
        return "\n".join(lines)


def _w_sym(n: int, m: int) -> VirtualRep:
    """S^m W* on the W* convention."""
    return VirtualRep.irreducible((m,) + (0,) * (n - 1))


def _wedge_w(n: int, m: int) -> VirtualRep:
    """Lambda^m W on the W* convention (zero outside 0..n)."""
    if not 0 <= m <= n:
        return VirtualRep.zero(n)
    return VirtualRep.irreducible((0,) * (n - m) + (-1,) * m)


def verify_exceptional_e(n: int) -> VerificationLog:
    """Ext(E_k, E_l) = S^(k-l) W* in degree 0 (k >= l) and 0 (k < l) on Gr(2, n)."""
    log = VerificationLog(f"e012-{n}")
    for k in range(3):
        for l in range(3):
            ans = ext(e_object(n, k), e_object(n, l))
            want = {0: _w_sym(n, k - l)} if k >= l else {}
            got = ans.upper.degrees if ans.exact else None
            log.add(f"Ext(E{k},E{l}) on gr(2,{n})", got == want, repr(ans.upper))
    return log


def verify_semiorthogonality(model: LefschetzModel) -> VerificationLog:
    """Ext(a(i), b(j)) = 0 for a in A_i, b in A_j, i > j; plus order inside each block."""
    log = VerificationLog(f"{model.name}-semiorthogonality")
    kind = (0, 1) if model.twist_kind == "H_Y" else (1, 0)

    def tw(obj, i):
        return obj.twist(kind[0] * i, kind[1] * i)

    objs = {x: model.resolve(x) for b in model.blocks for x in b}
    for i, bi in enumerate(model.blocks):
        for j, bj in enumerate(model.blocks[: i + 1]):
            for p, a in enumerate(bi):
                for q, b in enumerate(bj):
                    if i == j and p <= q:
                        continue
                    ans = ext(tw(objs[a], i), tw(objs[b], j))
                    log.add(f"Ext({a}({i}),{b}({j}))=0", ans.is_zero(), repr(ans.upper))
    return log


def verify_quiver(n: int) -> VerificationLog:
    """Hom(Lambda^k(W/K), Lambda^l(W/K)) = Lambda^(l-k) W on Gr(n-4, n)."""
    space = GrassmannianSpace(n - 4, n)
    log = VerificationLog(f"quiver-{n}")
    for k in range(5):
        for l in range(5):
            ans = ext(wedge_quotient(space, k), wedge_quotient(space, l))
            want = _wedge_w(n, l - k) if l >= k else VirtualRep.zero(n)
            ok = ans.exact and ans.upper.degrees == ({0: want} if want else {})
            log.add(f"Hom(L^{k}(W/K),L^{l}(W/K)) on {space}", ok, repr(ans.upper))
    return log


def verify_fkl(n: int) -> VerificationLog:
    """Hom(F_k, F_l(-t H_Y)) = 0 for 1 <= t <= 8 (n = 6) or 13 (n = 7).

    Twists beyond the direct range are recorded through the Serre functor
    rule, which is not computable here.
    """
    _check_n(n)
    log = VerificationLog(f"fkl{n}")
    direct = 8 if n == 6 else 7
    for k in range(3):
        for l in range(3):
            src = f_object(n, k)
            for t in range(1, direct + 1):
                tgt = f_object(n, l, quotient_form=(l == 0)).twist(0, -t)
                ans = ext(src, tgt)
                log.add(f"Hom(F{k},F{l}(-{t}H_Y))=0", ans.is_zero(), repr(ans.upper))
    if n == 6:
        for l in range(3):
            for t in range(9, 12):
                log.derive(f"Hom(F{l}*,F2*(-{t}H_Y))=0", "F -> F(-12H_Y)[13]")
    else:
        for k in range(3):
            for l in range(3):
                for t in range(8, 14):
                    log.derive(f"Hom(F{l}*,F{k}*(-{t}H_Y))=0", "F -> F(-14H_Y)[17]")
    return log


def verify_lefschetz(n: int) -> VerificationLog:
    """The (fkl) table, (ldx) semiorthogonality and exceptionality of (E_0, E_1, E_2)."""
    _check_n(n)
    log = VerificationLog(f"lefschetz-{n}")
    log.extend(verify_fkl(n))
    log.extend(verify_semiorthogonality(builtin_lefschetz(f"ldx{n}")))
    log.extend(verify_exceptional_e(n))
    return log


# Resolutions of g_* F_l^* and g_*(F_l^* (x) K) on P = P(Lambda^2 W*):
# (position, rank of the multiplicity space, twist); position 0 maps onto the sheaf.
# A sheaf marked shifted is resolved as G[1].
def _gsk_table(n: int):
    w, w2, w3 = n, comb(n, 2), comb(n, 3)
    if n == 6:
        return {
            ("F2*", False): [(1, 1, -3), (0, 1, 0)],
            ("F1*", False): [(1, w, -3), (0, w, -1)],
            ("F0*", False): [(1, w2, -3), (0, w2, -2)],
            ("F2*", True): [(1, w, -3), (0, w, -2)],
            ("F1*", True): [(3, 1, -6), (2, w2, -4), (1, w2, -2), (0, 1, 0)],
            ("F0*", True): [(3, w, -6), (2, w3, -5), (1, w3, -2), (0, w, -1)],
        }
    return {
        ("F2*", False): [(3, 1, -7), (2, w, -4), (1, w, -3), (0, 1, 0)],
        ("F1*", False): [(3, w, -7), (2, w2, -5), (1, w2, -3), (0, w, -1)],
        ("F0*", False): [(3, w2, -7), (2, w3, -6), (1, w3, -3), (0, w2, -2)],
        ("F2*", True): [(3, w, -7), (2, comb(w + 1, 2), -4), (2, w, -6), (1, w * w, -3), (0, w2, -2)],
        ("F1*", True): [
            (4, w * w - 1, -7),
            (3, 1, -7), (3, w * w, -6), (3, w * w2 - w3, -5),
            (2, w, -4), (2, w * w2, -4),
            (1, w, -3), (1, w3, -2),
            (0, 1, 0),
        ],
        ("F0*", True): [
            (4, w2 * w - w, -7),
            (3, w, -7), (3, w3 * w - comb(w, 4), -6), (3, w2 * w, -6),
            (2, w3 * w, -5), (2, w * w, -4),
            (1, w * w, -3), (1, w2, -2),
            (0, w, -1),
        ],
    }


def _resolution_chi(n: int, terms, t: int) -> int:
    dim_p = comb(n, 2) - 1
    return sum((-1) ** pos * mult * comb(t + a + dim_p, dim_p) for pos, mult, a in terms)


def verify_gsk_chi(n: int, twists: Sequence[int] = None) -> VerificationLog:
    """chi(TY, F(t H_Y)) against the resolutions of g_* F on P(Lambda^2 W*)."""
    _check_n(n)
    log = VerificationLog(f"gsk-chi{n}")
    twists = list(twists) if twists is not None else list(range(0, 21 if n == 6 else 26))
    space = ResolutionSpace(n)
    k_bundle = EquivariantObject.bundle(space, (0,) * (space.k - 1) + (-1,))
    for (label, with_k), terms in _gsk_table(n).items():
        obj = _resolve_label(space, label)
        name = f"g_*({label}{' x K' if with_k else ''})"
        if with_k:
            obj = obj.tensor(k_bundle)
        sign = -1 if with_k and label != "F2*" else 1
        bad = [t for t in twists if chi_ty_object(n, obj, t) != sign * _resolution_chi(n, terms, t)]
        claim = f"chi {name}(t) matches its resolution, t in [{twists[0]},{twists[-1]}]"
        rank_sum = sum((-1) ** pos * mult for pos, mult, _ in terms)
        if bad and rank_sum != 0:
            # a sheaf supported on Y (codim >= 3) has alternating rank sum 0
            log.refute(claim, f"alternating rank sum of the resolution is {rank_sum}, not 0; mismatch at t = {bad}")
        else:
            log.add(claim, not bad, f"mismatch at t = {bad}" if bad else "")
    return log


# ---------------------------------------------------------------------------
# linear sections
# ---------------------------------------------------------------------------



_AMBIENT_CACHE: Dict[Tuple[str, int], HilbertData] = {}


def _ambient(side: str, n: int) -> HilbertData:
    key = (side, n)
    if key not in _AMBIENT_CACHE:
        _AMBIENT_CACHE[key] = hilbert_data_pfaffian(n) if side == "Y" else hilbert_data_gr(2, n)
    return _AMBIENT_CACHE[key]


@dataclass(frozen=True)
class SectionInvariants:
    side: str
    n: int
    r: int
    dim: int
    degree: Optional[int]
    genus: Optional[int]
    chi: Optional[int]
    hilbert: Optional[HilbertData]

    @property
    def empty(self) -> bool:
        return self.dim < 0

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "n": self.n,
            "r": self.r,
            "dim": self.dim,
            "empty": self.empty,
            "degree": None if self.degree is None else str(self.degree),
            "genus": None if self.genus is None else str(self.genus),
            "chi_O": None if self.chi is None else str(self.chi),
            "hilbert": None if self.hilbert is None else self.hilbert.to_json(),
        }


def section_invariants(side: str, n: int, r: int) -> SectionInvariants:
    """Invariants of X_L = X cap P(L^perp) (c = r), Y_L = Y cap P(L) or Z_L (c = N - r).

    Z = Gr(2, W*) is treated with the Grassmannian Hilbert polynomial.
    """
    _check_n(n)
    side = side.upper()
    N = comb(n, 2)
    if not 1 <= r <= N:
        raise ValueError(f"r must lie in [1, {N}]")
    if side not in ("X", "Y", "Z"):
        raise ValueError("side is X, Y or Z")
    ambient = _ambient("Y" if side == "Y" else "X", n)
    c = r if side == "X" else N - r
    dim = ambient.dimension - c
    if dim < 0:
        return SectionInvariants(side, n, r, dim, None, None, None, None)
    data = koszul_section(ambient, c)
    chi = data(0)
    genus = int(1 - chi) if dim == 1 else None
    return SectionInvariants(side, n, r, dim, data.degree, genus, int(chi), data)


# claims made in the case lists whose values are recomputed here
_REFERENCE_CLAIMS = {
    (6, 2): {"Y_L points": 3, "count": 12},
    (6, 3): {"Y_L genus": 1},
    (6, 4): {"count": 12},
    (6, 6): {"X_L degree": 14},
    (6, 7): {"X_L genus": 8, "Z_L points": 14},
    (7, 4): {"Y_L points": 42, "count": 51},
    (7, 5): {"Y_L degree": 42, "Y_L genus": 43},
    (7, 6): {"Y_L degree": 42},
    (7, 8): {"X_L degree": 14},
    (7, 9): {"X_L degree": 14, "X_L genus": 15},
    (7, 10): {"X_L points": 14, "count": 23},
}

# A smooth cubic surface has a full exceptional collection of length 9.
_KNOWN_COLLECTION_LENGTH = {(6, 4): 9}

_OBJECT_NAMES = {"E2": "S^2U", "E1": "U", "E0": "O", "F2*": "O", "F1*": "F1*", "F0*": "F0*"}


def _render(label: str, twist: int) -> str:
    name = _OBJECT_NAMES.get(label, label)
    return f"{name}({twist})" if twist else name


@dataclass(frozen=True)
class SectionReport:
    n: int
    r: int
    dims: Tuple[int, int, int]
    x_side: str
    y_side: str
    x_objects: str
    y_objects: str
    c_l: str
    count: Optional[int]
    count_breakdown: str
    tag: str
    invariants: Dict[str, SectionInvariants]
    reference_claims: Dict[str, int]
    discrepancies: Tuple[str, ...]

    @property
    def equivalence(self) -> bool:
        return self.c_l == "D^b(X_L) = D^b(Y_L)"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "expected_dims": {"X_L": self.dims[0], "Y_L": self.dims[1], "Z_L": self.dims[2]},
            "x_side": self.x_side,
            "y_side": self.y_side,
            "x_objects": self.x_objects,
            "y_objects": self.y_objects,
            "C_L": self.c_l,
            "equivalence": self.equivalence,
            "count": None if self.count is None else str(self.count),
            "count_breakdown": self.count_breakdown,
            "tag": self.tag,
            "invariants": {k: v.to_json() for k, v in sorted(self.invariants.items())},
            "reference_claims": {k: str(v) for k, v in sorted(self.reference_claims.items())},
            "discrepancies": list(self.discrepancies),
        }

    def markdown(self) -> str:
        dx, dy, dz = self.dims
        lines = [
            f"**r = {self.r}.** (n = {self.n}) {self.tag}",
            "",
            f"- expected dims: X_L {dx}, Y_L {dy}, Z_L {dz}",
            f"- C_L: {self.c_l}",
            f"- {self.x_side}",
            f"- {self.y_side}",
        ]
        if self.x_objects:
            lines.append(f"- objects: {self.x_objects}")
        if self.y_objects:
            lines.append(f"- objects: {self.y_objects}")
        for key, inv in sorted(self.invariants.items()):
            parts = [f"dim {inv.dim}", f"degree {inv.degree}"]
            if inv.genus is not None:
                parts.append(f"genus {inv.genus}")
            lines.append(f"- {key}: " + ", ".join(parts))
        if self.count is not None:
            lines.append(f"- exceptional collection length {self.count} ({self.count_breakdown})")
        for d in self.discrepancies:
            lines.append(f"- DISCREPANCY: {d}")
        return "\n".join(lines)


def _tag(n: int, r: int, inv: Dict[str, SectionInvariants]) -> str:
    dx, dy, dz = expected_dimensions(n, r)
    N = comb(n, 2)
    j = dual_lefschetz(builtin_lefschetz(f"ldx{n}")).m
    x_index, y_index = n - r, j - (N - r)

    def deg(side):
        return inv[side].degree if side in inv else None

    if n == 6:
        table = {
            1: "Y_L empty; X_L is a Lagrangian Grassmannian LGr(2,6)",
            2: f"Y_L is {deg('Y_L')} points",
            3: f"Y_L is an elliptic curve (genus {inv['Y_L'].genus if 'Y_L' in inv else '?'})",
            4: "Y_L is a cubic surface (del Pezzo of degree 3)",
            5: "Y_L is a cubic 3-fold; X_L is a Fano 3-fold V14",
            6: f"Pfaffian cubic 4-fold / K3 of degree {deg('X_L')}",
            7: f"X_L is a curve of genus {inv['X_L'].genus if 'X_L' in inv else '?'}; Y_L is a singular cubic 5-fold; Z_L is {deg('Z_L')} points",
            8: f"X_L is {deg('X_L')} points; Y_L is a Pfaffian cubic of dimension 6",
        }
        return table.get(r, f"X_L empty; Y_L is a Pfaffian cubic of dimension {dy}")
    if r <= 3:
        return f"Y_L empty; X_L is a Fano {dx}-fold of index {x_index}"
    table = {
        4: f"Y_L is {deg('Y_L')} points",
        5: f"X_L is a Fano 5-fold of index {x_index}; Y_L is a curve of degree {deg('Y_L')}",
        6: f"X_L is a Fano 4-fold of index {x_index}; Y_L is a surface of degree {deg('Y_L')}",
        7: "derived equivalence: X_L and Y_L are Calabi-Yau 3-folds",
        8: f"X_L is a surface of degree {deg('X_L')}; Y_L is a Fano 4-fold of index {y_index}",
        9: f"X_L is a curve of degree {deg('X_L')}; Y_L is a Fano 5-fold of index {y_index}",
        10: f"X_L is {deg('X_L')} points; Y_L is a Fano 6-fold of index {y_index}",
    }
    return table.get(r, f"X_L empty; Y_L is a Fano {dy}-fold of index {y_index}")


def section_decompositions(n: int, r: int) -> SectionReport:
    """Both sides of the linear-section decomposition for dim L = r."""
    _check_n(n)
    N = comb(n, 2)
    if not 1 <= r <= N:
        raise ValueError(f"r must lie in [1, {N}] for n = {n}")
    A = builtin_lefschetz(f"ldx{n}")
    B = dual_lefschetz(A)
    m, j = A.m, B.m
    dims = expected_dimensions(n, r)
    dx, dy, dz = dims

    inv: Dict[str, SectionInvariants] = {}
    for side, d in (("X", dx), ("Y", dy), ("Z", dz)):
        if 0 <= d <= 2:
            inv[f"{side}_L"] = section_invariants(side, n, r)

    x_blocks = [(k, k - r + 1) for k in range(r, m)]
    y_blocks = [(k, N - r - 1 - k) for k in range(j - 1, N - r - 1, -1)]
    y_cat = "D^b(Y_L,R)" if dz >= 0 else "D^b(Y_L)"

    if not y_blocks and not x_blocks:
        c_l = "D^b(X_L) = D^b(Y_L)"
    elif not y_blocks:
        c_l = y_cat if dy >= 0 else "0"
    elif not x_blocks:
        c_l = "D^b(X_L)" if dx >= 0 else "0"
    else:
        c_l = "C_L"

    def side_string(lhs, blocks, model, c_first):
        pieces = [model.block_string(k, t) for k, t in blocks]
        objs = [_render(x, t) for k, t in blocks for x in model.blocks[k]]
        c = [] if c_l == "0" else [c_l]
        if c_l == "D^b(X_L) = D^b(Y_L)":
            return "D^b(X_L) ~= D^b(Y_L)", ""
        if not blocks:
            return f"{lhs} = {'0' if c_l == '0' else 'C_L'}", ""
        seq = (c + pieces) if c_first else (pieces + c)
        oseq = (c + objs) if c_first else (objs + c)
        return f"{lhs} = <{', '.join(seq)}>", f"{lhs} = <{', '.join(oseq)}>"

    x_str, x_objs = side_string("D^b(X_L)", x_blocks, A, True)
    y_str, y_objs = side_string(y_cat, y_blocks, B, False)

    x_total = sum(len(A.blocks[k]) for k, _ in x_blocks)
    y_total = sum(len(B.blocks[k]) for k, _ in y_blocks)
    count, breakdown = None, ""
    if c_l == "0":
        count = x_total or y_total
        breakdown = "blocks only"
    elif c_l == y_cat and dy == 0:
        pts = inv["Y_L"].degree
        count, breakdown = pts + x_total, f"{pts} points + {x_total} block objects"
    elif c_l == "D^b(X_L)" and dx == 0:
        pts = inv["X_L"].degree
        count, breakdown = pts + y_total, f"{pts} points + {y_total} block objects"
    elif (n, r) in _KNOWN_COLLECTION_LENGTH:
        full = _KNOWN_COLLECTION_LENGTH[(n, r)]
        count = full - y_total + x_total
        breakdown = f"({full} on Y_L - {y_total}) + {x_total} block objects"

    computed: Dict[str, int] = {}
    for key, v in inv.items():
        if v.dim == 0:
            computed[f"{key} points"] = v.degree
        else:
            computed[f"{key} degree"] = v.degree
        if v.genus is not None:
            computed[f"{key} genus"] = v.genus
    if count is not None:
        computed["count"] = count
    claims = dict(_REFERENCE_CLAIMS.get((n, r), {}))
    disc = tuple(
        f"{k}: reference {v}, computed {computed.get(k)}"
        for k, v in sorted(claims.items())
        if computed.get(k) != v
    )
    return SectionReport(
        n, r, dims, x_str, y_str, x_objs, y_objs, c_l, count, breakdown,
        _tag(n, r, inv), inv, claims, disc,
    )
