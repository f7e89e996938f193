"""
Exact arithmetic in the quadratic tower Q(alpha, beta, delta).

alpha^2 = 17, beta^2 = 21 + 5*alpha, delta^2 = 5 + alpha. Elements are stored
on the basis (1, a, b, d, ab, ad, bd, abd) with rational coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterable, Sequence, Union

from sympy.polys.domains import QQ

BASIS_LABELS = ("1", "a", "b", "d", "ab", "ad", "bd", "abd")
TOWER_DIMENSION = 8

# Index of the product of two basis monomials lives in the nested-pair code below;
# this table only names which generators each basis element carries.
_GENERATORS = {
    0: (0, 0, 0),
    1: (1, 0, 0),
    2: (0, 1, 0),
    3: (0, 0, 1),
    4: (1, 1, 0),
    5: (1, 0, 1),
    6: (0, 1, 1),
    7: (1, 1, 1),
}

Scalar = Union[int, Any]


def _q(value: Any) -> Any:
    """Coerce ints, strings like "3/4" and QQ elements into QQ."""
    if isinstance(value, str):
        num, _, den = value.partition("/")
        return QQ(int(num), int(den or 1))
    return QQ.convert(value)


# Nested quadratic pairs: level A = Q(a), level B = A(b), level D = B(d).

def _mul_a(x: tuple, y: tuple) -> tuple:
    return (x[0] * y[0] + 17 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _add_a(x: tuple, y: tuple) -> tuple:
    return (x[0] + y[0], x[1] + y[1])


_BETA_SQUARE = (QQ(21), QQ(5))


def _mul_b(x: tuple, y: tuple) -> tuple:
    x0, x1 = x
    y0, y1 = y
    return (
        _add_a(_mul_a(x0, y0), _mul_a(_mul_a(x1, y1), _BETA_SQUARE)),
        _add_a(_mul_a(x0, y1), _mul_a(x1, y0)),
    )


def _add_b(x: tuple, y: tuple) -> tuple:
    return (_add_a(x[0], y[0]), _add_a(x[1], y[1]))


_DELTA_SQUARE = ((QQ(5), QQ(1)), (QQ(0), QQ(0)))


def _split(c: Sequence[Any]) -> tuple:
    return (
        ((c[0], c[1]), (c[2], c[4])),
        ((c[3], c[5]), (c[6], c[7])),
    )


def _join(x: tuple) -> tuple:
    (a00, a01), (a10, a11) = x
    return (a00[0], a00[1], a01[0], a10[0], a01[1], a10[1], a11[0], a11[1])


@dataclass(frozen=True, slots=True)
class TowerElement:
    """Element of Q(alpha, beta, delta) as eight rational coordinates."""

    coords: tuple

    def __post_init__(self) -> None:
        if len(self.coords) != TOWER_DIMENSION:
            raise ValueError(f"Tower element needs 8 coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(_q(c) for c in self.coords))

    @classmethod
    def from_rational(cls, value: Scalar) -> TowerElement:
        return cls((_q(value),) + (QQ(0),) * 7)

    @classmethod
    def basis(cls, index: int) -> TowerElement:
        coords = [QQ(0)] * TOWER_DIMENSION
        coords[index] = QQ(1)
        return cls(tuple(coords))

    @classmethod
    def random(cls, rng: random.Random, bound: int = 50) -> TowerElement:
        return cls(tuple(QQ(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(8)))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _coerce(self, other: Any) -> TowerElement:
        if isinstance(other, TowerElement):
            return other
        return TowerElement.from_rational(other)

    def __add__(self, other: Any) -> TowerElement:
        other = self._coerce(other)
        return TowerElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> TowerElement:
        return TowerElement(tuple(-a for a in self.coords))

    def __sub__(self, other: Any) -> TowerElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> TowerElement:
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> TowerElement:
        if not isinstance(other, TowerElement):
            scalar = _q(other)
            return TowerElement(tuple(a * scalar for a in self.coords))
        return tower_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> TowerElement:
        if exponent < 0:
            return tower_inverse(self) ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other: Any) -> TowerElement:
        if not isinstance(other, TowerElement):
            scalar = _q(other)
            if not scalar:
                raise ZeroDivisionError("division by zero in the tower")
            return TowerElement(tuple(a / scalar for a in self.coords))
        return self * tower_inverse(other)

    def __rtruediv__(self, other: Any) -> TowerElement:
        return self._coerce(other) * tower_inverse(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TowerElement):
            return self.coords == other.coords
        try:
            return self == TowerElement.from_rational(other)
        except Exception:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        parts = [f"{c}*{label}" for c, label in zip(self.coords, BASIS_LABELS) if c]
        return "TowerElement(" + (" + ".join(parts) or "0") + ")"

    def encode(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coords]

    @classmethod
    def decode(cls, values: Iterable[str]) -> TowerElement:
        return cls(tuple(_q(v) for v in values))


def tower_mul(a: TowerElement, b: TowerElement) -> TowerElement:
    """Product reduced onto the 8-element basis."""
    x = _split(a.coords)
    y = _split(b.coords)
    x0, x1 = x
    y0, y1 = y
    low = _add_b(_mul_b(x0, y0), _mul_b(_mul_b(x1, y1), _DELTA_SQUARE))
    high = _add_b(_mul_b(x0, y1), _mul_b(x1, y0))
    return TowerElement(_join((low, high)))


def multiplication_matrix(a: TowerElement) -> list[list[Any]]:
    """Matrix of x -> a*x; column j holds the coordinates of a * basis_j."""
    columns = [tower_mul(a, TowerElement.basis(j)).coords for j in range(TOWER_DIMENSION)]
    return [[columns[j][i] for j in range(TOWER_DIMENSION)] for i in range(TOWER_DIMENSION)]


def tower_inverse(a: TowerElement) -> TowerElement:
    """Inverse of a nonzero element by solving the multiplication-by-a system."""
    from algebra.matrix import solve
    from algebra.rings import QQ_FIELD

    if a.is_zero():
        raise ZeroDivisionError("zero has no inverse in the tower")
    rhs = [QQ(1)] + [QQ(0)] * 7
    solution = solve(multiplication_matrix(a), rhs, QQ_FIELD)
    if solution is None:
        raise ZeroDivisionError(f"multiplication by {a!r} is singular")
    return TowerElement(tuple(solution))


ZERO = TowerElement((QQ(0),) * 8)
ONE = TowerElement.from_rational(1)
ALPHA = TowerElement.basis(1)
BETA = TowerElement.basis(2)
DELTA = TowerElement.basis(3)


def generator_exponents(index: int) -> tuple[int, int, int]:
    """Exponents of (alpha, beta, delta) in the basis element with this index."""
    return _GENERATORS[index]
