"""
Polynomial ideals over GF(p) and their reduced Groebner bases.

Bases are computed with sympy's groebnertools on sparse PolyElements; the
conversion to and from the package's own Polynomial type lives here.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable, Optional, Sequence

from sympy.polys.domains import GF
from sympy.polys.groebnertools import groebner, is_groebner, is_reduced
from sympy.polys.orderings import ProductOrder, grevlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from algebra.poly import Polynomial
from algebra.primefield import PrimeField

logger = logging.getLogger(__name__)

DEFAULT_METHOD = "buchberger"


def _head(m: tuple) -> tuple:
    return m[:1]


def _tail(m: tuple) -> tuple:
    return m[1:]


# module-level block getters keep ProductOrder hashable to the same key, so
# sympy's ring cache is reused across calls
ELIMINATION_ORDER = ProductOrder((grevlex, _head), (grevlex, _tail))


@lru_cache(maxsize=None)
def polynomial_ring(p: int, nvars: int, elimination: bool = False) -> PolyRing:
    """GF(p)[x0..] in grevlex, or GF(p)[t, x0..] eliminating t first."""
    names = [f"x{i}" for i in range(nvars)]
    if elimination:
        return ring(",".join(["t"] + names), GF(p), ELIMINATION_ORDER)[0]
    return ring(",".join(names), GF(p), grevlex)[0]


def to_sympy(f: Polynomial, R: PolyRing, shift: int = 0) -> PolyElement:
    """Embed f into R, optionally behind `shift` leading variables."""
    pad = (0,) * shift
    return R.from_dict({pad + e: int(c) for e, c in f.terms.items()})


def from_sympy(g: PolyElement, field: PrimeField, nvars: int, drop: int = 0) -> Polynomial:
    p = field.p
    terms = {}
    for monom, coeff in g.items():
        value = int(coeff) % p
        if value:
            terms[tuple(monom[drop:])] = field.convert(value)
    return Polynomial(field, terms, nvars)


@dataclass
class Ideal:
    field: PrimeField
    nvars: int
    generators: list = field(default_factory=list)

    def __post_init__(self) -> None:
        kept = []
        for g in self.generators:
            if g.nvars != self.nvars:
                raise ValueError(f"Generator in {g.nvars} variables, ideal in {self.nvars}")
            if g.ring != self.field:
                raise ValueError(f"Generator over {g.ring!r}, ideal over {self.field!r}")
            if not g.is_zero():
                kept.append(g)
        self.generators = kept

    @classmethod
    def generated_by(cls, polys: Sequence[Polynomial]) -> Ideal:
        if not polys:
            raise ValueError("An ideal needs at least one generator to fix its ring")
        first = polys[0]
        return cls(first.ring, first.nvars, list(polys))

    @classmethod
    def unit(cls, field: PrimeField, nvars: int = 3) -> Ideal:
        return cls(field, nvars, [Polynomial.constant(field, field.one, nvars)])

    @property
    def ring(self) -> PolyRing:
        return polynomial_ring(self.field.p, self.nvars)

    def sympy_generators(self) -> list[PolyElement]:
        return [to_sympy(g, self.ring) for g in self.generators]

    def __repr__(self) -> str:
        return f"Ideal(<{len(self.generators)} generators over {self.field.name}>)"


@dataclass
class GroebnerBasis:
    ideal: Ideal
    elements: list
    order: str = "grevlex"

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def is_unit(self) -> bool:
        return any(g.is_ground and g for g in self.elements)

    def reduce(self, f: Polynomial) -> Polynomial:
        if not self.elements:
            return f
        remainder = to_sympy(f, self.ring).rem(self.elements)
        return from_sympy(remainder, self.ideal.field, self.ideal.nvars)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def polynomials(self) -> list[Polynomial]:
        return [from_sympy(g, self.ideal.field, self.ideal.nvars) for g in self.elements]

    def satisfies_criterion(self) -> bool:
        """Every S-polynomial reduces to zero and the basis is reduced."""
        return is_groebner(self.elements, self.ring) and is_reduced(self.elements, self.ring)


def groebner_basis(ideal: Ideal, method: Optional[str] = None) -> GroebnerBasis:
    if not ideal.generators:
        return GroebnerBasis(ideal, [])
    started = time.perf_counter()
    elements = groebner(ideal.sympy_generators(), ideal.ring, method=method or DEFAULT_METHOD)
    logger.debug(
        "Groebner basis of %d generators: %d elements in %.0f ms",
        len(ideal.generators),
        len(elements),
        (time.perf_counter() - started) * 1000,
    )
    return GroebnerBasis(ideal, elements)


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    return basis.reduce(f)


def eliminate_first(
    generators: Iterable[PolyElement], field: PrimeField, nvars: int, method: Optional[str] = None
) -> Ideal:
    """Generators of (ideal in t, x0..) intersected with GF(p)[x0..]."""
    R = polynomial_ring(field.p, nvars, elimination=True)
    basis = groebner(list(generators), R, method=method or DEFAULT_METHOD)
    kept = [g for g in basis if all(m[0] == 0 for m in g.monoms())]
    return Ideal(field, nvars, [from_sympy(g, field, nvars, drop=1) for g in kept])


def is_unit(ideal: Ideal, method: Optional[str] = None) -> bool:
    return groebner_basis(ideal, method).is_unit()
