"""
Sparse multivariate polynomials over the coefficient rings.

Terms map exponent tuples to nonzero coefficients. Iteration order is
graded-lexicographic, highest term first. HomogeneousPoly pins the degree
and is the type used for plane curves (three variables x, y, z).
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

Exps = tuple

VARIABLE_NAMES = ("x", "y", "z")


class InvalidPointError(ValueError):
    """The all-zero triple is not a projective point."""


def grlex_key(exps: Exps) -> tuple:
    return (sum(exps), exps)


class Polynomial:
    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring: Any, terms: Optional[Mapping[Exps, Any]] = None, nvars: int = 3):
        self.ring = ring
        self.nvars = nvars
        clean: dict = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"Bad exponent tuple {exps} for {nvars} variables")
            value = ring.convert(coeff)
            if exps in clean:
                value = clean[exps] + value
            clean[exps] = value
        self.terms = {e: c for e, c in clean.items() if not ring.is_zero(c)}

    @classmethod
    def _raw(cls, ring: Any, terms: dict, nvars: int) -> Polynomial:
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.nvars = nvars
        poly.terms = terms
        return poly

    # constructors

    @classmethod
    def zero(cls, ring: Any, nvars: int = 3) -> Polynomial:
        return Polynomial._raw(ring, {}, nvars)

    @classmethod
    def constant(cls, ring: Any, value: Any, nvars: int = 3) -> Polynomial:
        return Polynomial(ring, {(0,) * nvars: value}, nvars)

    @classmethod
    def variable(cls, ring: Any, index: int, nvars: int = 3) -> Polynomial:
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return Polynomial._raw(ring, {exps: ring.one}, nvars)

    @classmethod
    def linear_form(cls, ring: Any, coefficients: Sequence[Any], constant: Any = None) -> Polynomial:
        nvars = len(coefficients)
        terms: dict = {}
        for i, c in enumerate(coefficients):
            terms[tuple(1 if j == i else 0 for j in range(nvars))] = c
        if constant is not None:
            terms[(0,) * nvars] = constant
        return Polynomial(ring, terms, nvars)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term; -1 for the zero polynomial."""
        return min((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self) -> tuple:
        if not self.terms:
            raise ValueError("The zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def coefficient(self, exps: Exps) -> Any:
        return self.terms.get(tuple(exps), self.ring.zero)

    def homogeneous_part(self, k: int) -> Polynomial:
        return Polynomial._raw(self.ring, {e: c for e, c in self.terms.items() if sum(e) == k}, self.nvars)

    def truncate_below(self, k: int) -> Polynomial:
        """Drop every term of total degree < k."""
        return Polynomial._raw(self.ring, {e: c for e, c in self.terms.items() if sum(e) >= k}, self.nvars)

    # result typing

    def _make(self, terms: dict, degree: Optional[int] = None) -> Polynomial:
        if degree is not None and isinstance(self, HomogeneousPoly):
            return HomogeneousPoly._raw_homogeneous(self.ring, terms, degree, self.nvars)
        return Polynomial._raw(self.ring, terms, self.nvars)

    def _check(self, other: Polynomial) -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"Variable counts differ: {self.nvars} vs {other.nvars}")
        if other.ring != self.ring:
            raise ValueError(f"Coefficient rings differ: {self.ring!r} vs {other.ring!r}")

    # arithmetic

    def __add__(self, other: Any) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.ring, other, self.nvars)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            if e in terms:
                value = terms[e] + c
                if self.ring.is_zero(value):
                    del terms[e]
                else:
                    terms[e] = value
            else:
                terms[e] = c
        return self._make(terms, _shared_degree(self, other))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return self._make({e: -c for e, c in self.terms.items()}, getattr(self, "degree", None))

    def __sub__(self, other: Any) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.ring, other, self.nvars)
        return self + (-other)

    def __rsub__(self, other: Any) -> Polynomial:
        return (-self) + other

    def scale(self, factor: Any) -> Polynomial:
        factor = self.ring.convert(factor)
        if self.ring.is_zero(factor):
            return self._make({}, getattr(self, "degree", None))
        return self._make({e: c * factor for e, c in self.terms.items()}, getattr(self, "degree", None))

    def __mul__(self, other: Any) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if e in terms:
                    terms[e] = terms[e] + c1 * c2
                else:
                    terms[e] = c1 * c2
        terms = {e: c for e, c in terms.items() if not self.ring.is_zero(c)}
        degree = None
        if isinstance(self, HomogeneousPoly) and isinstance(other, HomogeneousPoly):
            degree = self.degree + other.degree
        return self._make(terms, degree) if degree is not None else Polynomial._raw(self.ring, terms, self.nvars)

    def __rmul__(self, other: Any) -> Polynomial:
        return self.scale(other)

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result: Polynomial = Polynomial.constant(self.ring, self.ring.one, self.nvars)
        if isinstance(self, HomogeneousPoly):
            result = HomogeneousPoly(self.ring, result.terms, 0, self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = VARIABLE_NAMES if self.nvars <= 3 else tuple(f"x{i}" for i in range(self.nvars))
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
            )
            parts.append(f"({coeff!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # calculus and substitution

    def derivative(self, var: int) -> Polynomial:
        """Formal partial derivative in the variable with this index."""
        terms: dict = {}
        for e, c in self.terms.items():
            if e[var] == 0:
                continue
            value = c * e[var]
            if self.ring.is_zero(value):
                continue
            new = e[:var] + (e[var] - 1,) + e[var + 1:]
            terms[new] = value
        degree = getattr(self, "degree", None)
        return self._make(terms, None if degree is None else max(degree - 1, 0))

    def evaluate(self, point: Sequence[Any]) -> Any:
        if len(point) != self.nvars:
            raise ValueError(f"Expected {self.nvars} coordinates, got {len(point)}")
        values = [self.ring.convert(v) for v in point]
        powers: list[dict] = [{0: self.ring.one} for _ in values]
        total = self.ring.zero
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = values[i] ** k
                    term = term * cache[k]
            total = total + term
        return total

    def compose(self, substitutions: Sequence[Polynomial]) -> Polynomial:
        """Substitute polynomial i for variable i."""
        if len(substitutions) != self.nvars:
            raise ValueError(f"Need {self.nvars} substitutions, got {len(substitutions)}")
        target = substitutions[0]
        powers: list[dict] = [{} for _ in substitutions]
        one = Polynomial.constant(self.ring, self.ring.one, target.nvars)
        acc: dict = {}
        for e, c in self.terms.items():
            term = one
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = _plain(substitutions[i]) ** k
                    term = term * cache[k]
            for te, tc in term.terms.items():
                value = tc * c
                acc[te] = acc[te] + value if te in acc else value
        terms = {e: c for e, c in acc.items() if not self.ring.is_zero(c)}
        degrees = {s.total_degree() for s in substitutions if s} | ({0} if not any(substitutions) else set())
        own = getattr(self, "degree", None)
        if own is not None and all(s.is_homogeneous() for s in substitutions) and len(degrees) == 1:
            return HomogeneousPoly._raw_homogeneous(self.ring, terms, own * degrees.pop(), target.nvars)
        return Polynomial._raw(self.ring, terms, target.nvars)

    def map_coefficients(self, hom: Callable[[Any], Any], codomain: Any = None) -> Polynomial:
        """Coefficient-wise image under a ring homomorphism."""
        ring = codomain if codomain is not None else hom.codomain  # type: ignore[attr-defined]
        terms = {}
        for e, c in self.terms.items():
            image = hom(c)
            if not ring.is_zero(image):
                terms[e] = image
        degree = getattr(self, "degree", None)
        if degree is not None:
            return HomogeneousPoly._raw_homogeneous(ring, terms, degree, self.nvars)
        return Polynomial._raw(ring, terms, self.nvars)

    # division

    def divmod(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Multivariate division by a single divisor in graded-lex order (field coefficients)."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        ring = self.ring
        lead_exps, lead_coeff = divisor.leading_term()
        lead_inverse = ring.exquo(ring.one, lead_coeff)
        remaining = dict(self.terms)
        quotient: dict = {}
        remainder: dict = {}
        while remaining:
            exps = max(remaining, key=grlex_key)
            coeff = remaining[exps]
            if all(a >= b for a, b in zip(exps, lead_exps)):
                shift = tuple(a - b for a, b in zip(exps, lead_exps))
                factor = coeff * lead_inverse
                quotient[shift] = factor
                for de, dc in divisor.terms.items():
                    key = tuple(a + b for a, b in zip(shift, de))
                    value = remaining.get(key, ring.zero) - factor * dc
                    if ring.is_zero(value):
                        remaining.pop(key, None)
                    else:
                        remaining[key] = value
            else:
                remainder[exps] = coeff
                del remaining[exps]
        return (
            Polynomial._raw(ring, quotient, self.nvars),
            Polynomial._raw(ring, remainder, self.nvars),
        )

    def exquo(self, divisor: Polynomial) -> Polynomial:
        quotient, remainder = self.divmod(divisor)
        if remainder:
            raise ValueError("Division is not exact")
        own = getattr(self, "degree", None)
        other = getattr(divisor, "degree", None)
        if own is not None and other is not None:
            return HomogeneousPoly._raw_homogeneous(self.ring, quotient.terms, own - other, self.nvars)
        return quotient

    def divides(self, other: Polynomial) -> bool:
        """True iff other = self * h for some polynomial h."""
        if self.is_zero():
            raise ZeroDivisionError("the zero polynomial divides nothing")
        return not other.divmod(self)[1]


class HomogeneousPoly(Polynomial):
    """Form of a fixed degree; the zero form keeps its declared degree."""

    __slots__ = ("degree",)

    def __init__(
        self,
        ring: Any,
        terms: Optional[Mapping[Exps, Any]] = None,
        degree: Optional[int] = None,
        nvars: int = 3,
    ):
        super().__init__(ring, terms, nvars)
        sums = {sum(e) for e in self.terms}
        if degree is None:
            if len(sums) > 1:
                raise ValueError(f"Terms of mixed degrees {sorted(sums)}")
            degree = sums.pop() if sums else 0
        if any(s != degree for s in sums):
            raise ValueError(f"Every term must have degree {degree}, found {sorted(sums)}")
        if degree < 0:
            raise ValueError("Degree must be non-negative")
        self.degree = degree

    @classmethod
    def _raw_homogeneous(cls, ring: Any, terms: dict, degree: int, nvars: int) -> HomogeneousPoly:
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.nvars = nvars
        poly.terms = terms
        poly.degree = degree
        return poly

    @classmethod
    def from_polynomial(cls, poly: Polynomial, degree: Optional[int] = None) -> HomogeneousPoly:
        return cls(poly.ring, poly.terms, degree, poly.nvars)

    @classmethod
    def monomial(cls, ring: Any, exps: Exps, coeff: Any = None) -> HomogeneousPoly:
        return cls(ring, {tuple(exps): ring.one if coeff is None else coeff}, sum(exps), len(exps))

    @classmethod
    def linear(cls, ring: Any, coefficients: Sequence[Any]) -> HomogeneousPoly:
        n = len(coefficients)
        terms = {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coefficients)}
        return cls(ring, terms, 1, n)

    def evaluate(self, point: Sequence[Any]) -> Any:
        values = [self.ring.convert(v) for v in point]
        if all(self.ring.is_zero(v) for v in values):
            raise InvalidPointError("(0, ..., 0) is not a projective point")
        return super().evaluate(values)

    def vanishes_at(self, point: Sequence[Any]) -> bool:
        return self.ring.is_zero(self.evaluate(point))

    def __repr__(self) -> str:
        return f"HomogeneousPoly(degree={self.degree}, {super().__repr__()})"


def _shared_degree(a: Polynomial, b: Polynomial) -> Optional[int]:
    da = getattr(a, "degree", None)
    db = getattr(b, "degree", None)
    if da is not None and da == db:
        return da
    if da is not None and db is None and b.is_homogeneous() and (not b or b.total_degree() == da):
        return da
    return None


def _plain(poly: Polynomial) -> Polynomial:
    return Polynomial._raw(poly.ring, poly.terms, poly.nvars)


def monomials_of_degree(d: int, nvars: int = 3) -> list[Exps]:
    """All exponent tuples of total degree d, graded-lex descending."""
    if nvars == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(d - first, nvars - 1):
            out.append((first,) + rest)
    return out


def partial_derivative(F: Polynomial, var: int) -> Polynomial:
    if isinstance(F, HomogeneousPoly) and F.degree < 1:
        raise ValueError("Partial derivatives need degree >= 1")
    return F.derivative(var)


def evaluate(F: HomogeneousPoly, point: Sequence[Any]) -> Any:
    return F.evaluate(point)


def map_coefficients(F: Polynomial, hom: Any) -> Polynomial:
    return F.map_coefficients(hom)


def divides(G: Polynomial, F: Polynomial) -> bool:
    return G.divides(F)


def product(factors: Iterable[Polynomial]) -> Polynomial:
    factors = list(factors)
    result = factors[0]
    for f in factors[1:]:
        result = result * f
    return result
