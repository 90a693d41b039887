"""Hilbert polynomials of Grassmannians, of TY and of their linear sections."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Sequence, Tuple

import sympy

from .engine import cohomology
from .objects import EquivariantObject, GrassmannianSpace, ResolutionSpace

_T = sympy.Symbol("t")


@dataclass(frozen=True)
class HilbertData:
    """An exact rational polynomial in t, with its dimension and degree."""

    coefficients: Tuple[Fraction, ...]  # ascending powers of t
    dimension: int
    degree: int

    def __call__(self, t: int) -> Fraction:
        return sum(c * Fraction(t) ** i for i, c in enumerate(self.coefficients))

    @property
    def poly_degree(self) -> int:
        nz = [i for i, c in enumerate(self.coefficients) if c]
        return nz[-1] if nz else -1

    def expression(self) -> str:
        expr = sum(sympy.Rational(c.numerator, c.denominator) * _T ** i for i, c in enumerate(self.coefficients))
        return str(sympy.expand(expr))

    def to_json(self) -> dict:
        return {
            "coefficients": [str(c) for c in self.coefficients],
            "polynomial": self.expression(),
            "dimension": self.dimension,
            "degree": str(self.degree),
        }


def interpolate(values: Sequence[int], start: int = 0) -> Tuple[Fraction, ...]:
    """Exact Lagrange interpolation through (start + i, values[i])."""
    points = [(start + i, sympy.Integer(v)) for i, v in enumerate(values)]
    poly = sympy.Poly(sympy.interpolate(points, _T), _T)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def from_values(values: Sequence[int], dimension: int) -> HilbertData:
    """HilbertData from chi(O(t)) at t = 0..dimension."""
    coeffs = interpolate(values)
    lead = coeffs[dimension] if len(coeffs) > dimension else Fraction(0)
    deg = lead * factorial(dimension)
    if deg.denominator != 1:
        raise ArithmeticError(f"non-integral degree {deg}")
    return HilbertData(coeffs, dimension, int(deg))


def from_function(f: Callable[[int], int], dimension: int) -> HilbertData:
    return from_values([f(t) for t in range(dimension + 1)], dimension)


@lru_cache(maxsize=None)
def chi_gr(k: int, n: int, t: int) -> int:
    """chi(Gr(k,n), O(t))."""
    obj = EquivariantObject.bundle(GrassmannianSpace(k, n), (t,) * k)
    return cohomology(obj).euler.dimension()


def hilbert_data_gr(k: int, n: int) -> HilbertData:
    space = GrassmannianSpace(k, n)
    return from_function(lambda t: chi_gr(k, n, t), space.dim)


def _check_ty(n: int) -> ResolutionSpace:
    if n not in (6, 7):
        raise ValueError(f"TY is supported for n = 6, 7 (got {n})")
    return ResolutionSpace(n)


def chi_ty_object(n: int, obj: EquivariantObject, t: int) -> int:
    """chi(TY, obj (x) O(t H_Y)) as an integer."""
    _check_ty(n)
    return cohomology(obj.twist(0, t)).euler.dimension()


@lru_cache(maxsize=None)
def chi_ty(n: int, t: int) -> int:
    """chi(TY, O(t H_Y)), computed through the pushforward to Gr(n-4, n)."""
    return chi_ty_object(n, EquivariantObject.structure_sheaf(_check_ty(n)), t)


def hilbert_data_pfaffian(n: int) -> HilbertData:
    """Hilbert polynomial of the Pfaffian Y, assuming Rg_* O_TY = O_Y."""
    space = _check_ty(n)
    return from_function(lambda t: chi_ty(n, t), space.dim)


def koszul_section(data: HilbertData, c: int) -> HilbertData:
    """Hilbert polynomial of a transverse intersection with c hyperplanes.

    P_section(t) = sum_i (-1)^i C(c, i) P(t - i).
    """
    dim = data.dimension - c
    if dim < 0:
        return HilbertData((), dim, 0)
    values = [sum((-1) ** i * comb(c, i) * data(t - i) for i in range(c + 1)) for t in range(dim + 1)]
    coeffs = interpolate([int(v) for v in values])
    lead = coeffs[dim] if len(coeffs) > dim else Fraction(0)
    return HilbertData(coeffs, dim, int(lead * factorial(dim)))


def grassmannian_degree(k: int, n: int) -> int:
    """deg Gr(k,n) in the Pluecker embedding: d! prod_i i!/(n-k+i)!  (i = 0..k-1)."""
    d = k * (n - k)
    num = factorial(d)
    for i in range(k):
        num *= factorial(i)
    den = 1
    for i in range(k):
        den *= factorial(n - k + i)
    return num // den
