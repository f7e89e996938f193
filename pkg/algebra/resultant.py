"""
Sylvester resultants with fraction-free determinant evaluation.
"""

from __future__ import annotations

from typing import Any, Sequence

from algebra.matrix import bareiss_determinant
from algebra.poly import HomogeneousPoly, Polynomial


class PolynomialRing:
    """Adapter letting the matrix routines run over polynomial entries."""

    def __init__(self, base: Any, nvars: int):
        self.base = base
        self.nvars = nvars
        self.zero = Polynomial.zero(base, nvars)
        self.one = Polynomial.constant(base, base.one, nvars)
        self.name = f"{getattr(base, 'name', base)}[{nvars}]"

    def convert(self, value: Any) -> Polynomial:
        if isinstance(value, Polynomial):
            return value
        return Polynomial.constant(self.base, value, self.nvars)

    def is_zero(self, a: Polynomial) -> bool:
        return a.is_zero()

    def exquo(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return Polynomial._raw(self.base, a.exquo(b).terms, self.nvars)


def coefficients_in(F: Polynomial, var: int) -> list[Polynomial]:
    """Coefficients of F as a polynomial in one variable, lowest power first."""
    buckets: dict[int, dict] = {}
    for e, c in F.terms.items():
        k = e[var]
        reduced = e[:var] + (0,) + e[var + 1:]
        buckets.setdefault(k, {})[reduced] = c
    top = max(buckets, default=-1)
    return [Polynomial._raw(F.ring, buckets.get(k, {}), F.nvars) for k in range(top + 1)]


def sylvester_matrix(f: Sequence[Any], g: Sequence[Any], zero: Any) -> list[list[Any]]:
    """Sylvester matrix of f and g given by coefficient lists, lowest power first."""
    m = len(f) - 1
    n = len(g) - 1
    size = m + n
    rows = []
    f_high = list(reversed(f))
    g_high = list(reversed(g))
    for i in range(n):
        rows.append([zero] * i + f_high + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + g_high + [zero] * (size - n - 1 - i))
    return rows


def resultant(F: Polynomial, G: Polynomial, var: int) -> Polynomial:
    """Resultant of F and G with respect to the variable of index var.

    The result lives in the same variables with var absent; for two forms
    of degrees d and e it is a form of degree d*e when the leading
    coefficients in var are nonzero constants.
    """
    if F.is_zero() or G.is_zero():
        raise ValueError("Resultant of a zero polynomial")
    f = coefficients_in(F, var)
    g = coefficients_in(G, var)
    if len(f) == 1 and len(g) == 1:
        raise ValueError(f"Variable {var} appears in neither polynomial")
    ring = PolynomialRing(F.ring, F.nvars)
    if len(f) == 1:
        return f[0] ** (len(g) - 1)
    if len(g) == 1:
        return g[0] ** (len(f) - 1)
    det = bareiss_determinant(sylvester_matrix(f, g, ring.zero), ring)
    if isinstance(F, HomogeneousPoly) and isinstance(G, HomogeneousPoly) and det.is_homogeneous():
        degree = det.total_degree() if det else 0
        return HomogeneousPoly._raw_homogeneous(F.ring, det.terms, degree, F.nvars)
    return det
