"""
Quadratic parametrizations of plane conics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from algebra.matrix import signed_minor_kernel
from algebra.poly import HomogeneousPoly, Polynomial, monomials_of_degree


@dataclass(frozen=True)
class ConicParametrization:
    """gamma(s, t) = (a s^2 + b st + c t^2, d s^2 + e st + f t^2, g s^2 + h st + i t^2)."""

    ring: Any
    coefficients: tuple

    def __post_init__(self) -> None:
        if len(self.coefficients) != 9:
            raise ValueError("A conic parametrization has nine coefficients")
        object.__setattr__(self, "coefficients", tuple(self.ring.convert(c) for c in self.coefficients))

    @classmethod
    def specialized(cls, ring: Any, c: Any, f: Any) -> ConicParametrization:
        """a = e = g = i = 1, b = d = h = 0, leaving c and f free."""
        one, zero = ring.one, ring.zero
        return cls(ring, (one, zero, c, zero, one, f, one, zero, one))

    def components(self) -> tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly]:
        forms = []
        for row in range(3):
            a, b, c = self.coefficients[3 * row: 3 * row + 3]
            forms.append(HomogeneousPoly(self.ring, {(2, 0): a, (1, 1): b, (0, 2): c}, 2, 2))
        return tuple(forms)  # type: ignore[return-value]

    def point(self, s: Any, t: Any) -> tuple:
        return tuple(form.evaluate((s, t)) for form in self.components())

    def tangent_line(self, s: Any, t: Any) -> tuple:
        """Line through gamma(s, t) tangent to the conic, as coefficients (l0, l1, l2)."""
        ring = self.ring
        s, t = ring.convert(s), ring.convert(t)
        p = self.point(s, t)
        var = 0 if not ring.is_zero(t) else 1
        q = tuple(form.derivative(var).evaluate((s, t)) for form in self.components())
        return (
            p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0],
        )

    def compose(self, F: Polynomial) -> HomogeneousPoly:
        """F(gamma(s, t)), a binary form of degree 2 deg F."""
        return compose_with_parametrization(F, self)

    def implicit_conic(self) -> HomogeneousPoly:
        """The conic's equation, from the signed minors of the 5 x 6 vanishing system."""
        monomials = monomials_of_degree(2)
        images = [HomogeneousPoly.monomial(self.ring, m).compose(list(self.components())) for m in monomials]
        rows = []
        for exps in monomials_of_degree(4, 2):
            rows.append([image.coefficient(exps) for image in images])
        vector = signed_minor_kernel(rows, self.ring)
        return HomogeneousPoly(self.ring, dict(zip(monomials, vector)), 2)


def compose_with_parametrization(F: Polynomial, gamma: ConicParametrization) -> HomogeneousPoly:
    composed = F.compose(list(gamma.components()))
    degree = 2 * getattr(F, "degree", F.total_degree())
    return HomogeneousPoly._raw_homogeneous(F.ring, composed.terms, degree, 2)


def binary_form_coefficients(form: Polynomial, degree: int) -> list[Any]:
    """Coefficient list c[a] of s^a t^(degree - a)."""
    return [form.coefficient((a, degree - a)) for a in range(degree + 1)]
