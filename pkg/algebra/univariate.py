"""
Dense univariate polynomials and binary forms over GF(p) or the rationals.

A univariate polynomial is a list of coefficients, constant term first. A
binary form of degree m in (s, t) is the list c[0..m] meaning
sum c[a] * s^a * t^(m - a). The arithmetic itself is sympy's Poly.
"""

from __future__ import annotations

import logging
from typing import Any, Optional, Sequence

from sympy import Poly, Rational, Symbol

from algebra.primefield import PrimeField

logger = logging.getLogger(__name__)

_W = Symbol("w")


def trim(coeffs: Sequence[Any], field: Any) -> list[Any]:
    out = list(coeffs)
    while out and field.is_zero(out[-1]):
        out.pop()
    return out


def degree(coeffs: Sequence[Any], field: Any) -> int:
    return len(trim(coeffs, field)) - 1


def to_sympy_poly(coeffs: Sequence[Any], field: Any) -> Poly:
    if isinstance(field, PrimeField):
        return Poly([int(c) for c in reversed(coeffs)] or [0], _W, modulus=field.p)
    if field.name == "rational":
        dense = [Rational(int(c.numerator), int(c.denominator)) for c in reversed(coeffs)]
        return Poly(dense or [0], _W, domain="QQ")
    raise TypeError(f"No univariate arithmetic over {field.name}")


def from_sympy_poly(poly: Poly, field: Any) -> list[Any]:
    if isinstance(field, PrimeField):
        return trim([field.convert(int(c)) for c in reversed(poly.all_coeffs())], field)
    return trim([field.convert(c) for c in reversed(poly.all_coeffs())], field)


def poly_divmod(a: Sequence[Any], b: Sequence[Any], field: Any) -> tuple[list[Any], list[Any]]:
    divisor = to_sympy_poly(trim(b, field), field)
    if divisor.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    quotient, remainder = to_sympy_poly(trim(a, field), field).div(divisor)
    return from_sympy_poly(quotient, field), from_sympy_poly(remainder, field)


def gcd(a: Sequence[Any], b: Sequence[Any], field: Any) -> list[Any]:
    """Monic gcd; the gcd of two zero polynomials is zero."""
    common = to_sympy_poly(trim(a, field), field).gcd(to_sympy_poly(trim(b, field), field))
    if common.is_zero:
        return []
    return from_sympy_poly(common.monic(), field)


def derivative(coeffs: Sequence[Any], field: Any) -> list[Any]:
    return from_sympy_poly(to_sympy_poly(trim(coeffs, field), field).diff(_W), field)


def is_squarefree(coeffs: Sequence[Any], field: Any) -> bool:
    coeffs = trim(coeffs, field)
    if len(coeffs) <= 2:
        return True
    _, factors = to_sympy_poly(coeffs, field).sqf_list()
    return all(multiplicity == 1 for _, multiplicity in factors)


def binary_form_dehomogenize(form: Sequence[Any], field: Any) -> tuple[list[Any], int]:
    """Split c(s, t) into (c(s, 1), multiplicity of the root [1:0])."""
    m = len(form) - 1
    poly = trim(form, field)
    return poly, m - (len(poly) - 1) if poly else m


def binary_form_gcd(f: Sequence[Any], g: Sequence[Any], field: Any) -> list[Any]:
    """gcd of two binary forms, as a binary form."""
    fa, f_inf = binary_form_dehomogenize(f, field)
    ga, g_inf = binary_form_dehomogenize(g, field)
    common = gcd(fa, ga, field)
    inf = min(f_inf, g_inf)
    # multiplying c(s, 1) by t^inf keeps the coefficient list and raises the degree
    return list(common) + [field.zero] * inf


def binary_form_is_squarefree(form: Sequence[Any], field: Any) -> bool:
    poly, inf = binary_form_dehomogenize(form, field)
    if not poly:
        return False
    return inf <= 1 and is_squarefree(poly, field)


def perfect_power_root(form: Sequence[Any], field: Any) -> Optional[tuple[Any, Any]]:
    """If c(s, t) = lambda * (a*s + b*t)^m with m = len(form) - 1, return (a, b)."""
    m = len(form) - 1
    if m < 1 or all(field.is_zero(c) for c in form):
        return None
    if m == 1:
        return (form[1], form[0])
    top, low = form[m], form[m - 1]
    if field.is_zero(top):
        # L = t up to scale, so only the t^m coefficient may survive
        return (field.zero, field.one) if all(field.is_zero(c) for c in form[1:]) else None
    # c = top * (s + r t)^m pins r from the s^(m-1) t coefficient
    r = low / (top * m) if field.characteristic == 0 or m % field.characteristic else None
    if r is None:
        return None
    expected = _binomial_power(r, m, field)
    if all(form[a] == top * expected[a] for a in range(m + 1)):
        return (field.one, r)
    return None


def _binomial_power(r: Any, m: int, field: Any) -> list[Any]:
    """Coefficients of (s + r t)^m as a binary form."""
    from math import comb

    return [field.convert(comb(m, a)) * (r ** (m - a)) for a in range(m + 1)]


def roots_mod_p(coeffs: Sequence[Any], field: PrimeField) -> tuple[list[tuple[int, int]], int]:
    """Roots in GF(p) with multiplicities, and the total degree of irreducible factors of degree > 1."""
    coeffs = trim(coeffs, field)
    if len(coeffs) <= 1:
        return [], 0
    _, factors = to_sympy_poly(coeffs, field).factor_list()
    roots = []
    nonrational = 0
    for factor, multiplicity in factors:
        if factor.degree() == 1:
            a, b = (int(c) % field.p for c in factor.all_coeffs())
            roots.append(((-b * pow(a, -1, field.p)) % field.p, multiplicity))
        else:
            nonrational += factor.degree() * multiplicity
    roots.sort()
    return roots, nonrational


def binary_form_roots(form: Sequence[Any], field: PrimeField) -> tuple[list[tuple[tuple[int, int], int]], int]:
    """Projective roots [s:t] of a binary form over GF(p) with multiplicities.

    Returns the rational roots and the degree carried by irreducible factors
    without roots in GF(p).
    """
    poly, inf = binary_form_dehomogenize(form, field)
    if not poly:
        raise ValueError("The zero form has every point as a root")
    roots, nonrational = roots_mod_p(poly, field)
    out = [((r, 1), k) for r, k in roots]
    if inf:
        out.append(((1, 0), inf))
    return out, nonrational
