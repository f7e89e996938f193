"""
Coefficient rings for polynomials and matrices.

Every ring exposes zero/one, convert, is_zero, exquo and an encode/decode
pair for the asset format. Fields also provide inverse.
"""

from __future__ import annotations

import random
from typing import Any, Iterable, Protocol, Union, runtime_checkable

from sympy.polys.domains import QQ

from algebra.primefield import PrimeField, PrimeFieldElement
from algebra.tower import ONE, ZERO, TowerElement, tower_inverse


@runtime_checkable
class Ring(Protocol):
    name: str
    zero: Any
    one: Any

    def convert(self, value: Any) -> Any: ...

    def is_zero(self, a: Any) -> bool: ...

    def exquo(self, a: Any, b: Any) -> Any: ...


class RationalField:
    """The rationals, backed by sympy's QQ domain."""

    name = "rational"
    characteristic = 0

    def __init__(self) -> None:
        self.zero = QQ(0)
        self.one = QQ(1)

    def __call__(self, value: Any) -> Any:
        return self.convert(value)

    def convert(self, value: Any) -> Any:
        if isinstance(value, str):
            return self.decode(value)
        if isinstance(value, PrimeFieldElement) or isinstance(value, TowerElement):
            raise TypeError(f"Cannot view {value!r} as a rational")
        return QQ.convert(value)

    def is_zero(self, a: Any) -> bool:
        return not a

    def inverse(self, a: Any) -> Any:
        if not a:
            raise ZeroDivisionError("division by zero")
        return self.one / a

    def exquo(self, a: Any, b: Any) -> Any:
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def random_element(self, rng: random.Random, bound: int = 50) -> Any:
        return QQ(rng.randint(-bound, bound), rng.randint(1, bound))

    def encode(self, a: Any) -> str:
        return f"{a.numerator}/{a.denominator}"

    def decode(self, value: Any) -> Any:
        if not isinstance(value, str):
            raise ValueError(f"Rational coefficients are 'num/den' strings, got {value!r}")
        num, sep, den = value.strip().partition("/")
        try:
            return QQ(int(num), int(den) if sep else 1)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"Malformed rational {value!r}") from exc

    @property
    def tag(self) -> str:
        return "rational"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("rational")

    def __repr__(self) -> str:
        return "QQ"


class TowerField:
    """Q(alpha, beta, delta) as a coefficient ring."""

    name = "tower"
    characteristic = 0

    def __init__(self) -> None:
        self.zero = ZERO
        self.one = ONE

    def __call__(self, value: Any) -> TowerElement:
        return self.convert(value)

    def convert(self, value: Any) -> TowerElement:
        if isinstance(value, TowerElement):
            return value
        if isinstance(value, (list, tuple)):
            return TowerElement(tuple(value))
        if isinstance(value, PrimeFieldElement):
            raise TypeError(f"Cannot view {value!r} as a tower element")
        return TowerElement.from_rational(value)

    def is_zero(self, a: TowerElement) -> bool:
        return a.is_zero()

    def inverse(self, a: TowerElement) -> TowerElement:
        return tower_inverse(a)

    def exquo(self, a: TowerElement, b: TowerElement) -> TowerElement:
        return a / b

    def random_element(self, rng: random.Random, bound: int = 50) -> TowerElement:
        return TowerElement.random(rng, bound)

    def encode(self, a: TowerElement) -> list[str]:
        return a.encode()

    def decode(self, value: Any) -> TowerElement:
        if not isinstance(value, list) or len(value) != 8:
            raise ValueError(f"Tower coefficients are lists of 8 rationals, got {value!r}")
        return TowerElement(tuple(QQ_FIELD.decode(v) for v in value))

    @property
    def tag(self) -> str:
        return "tower"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TowerField)

    def __hash__(self) -> int:
        return hash("tower")

    def __repr__(self) -> str:
        return "Q(alpha,beta,delta)"


Field = Union[RationalField, TowerField, PrimeField]

QQ_FIELD = RationalField()
TOWER = TowerField()


def ring_from_tag(tag: Any) -> Field:
    """Resolve an asset ring tag: "tower", "rational" or {"fp": p}."""
    if tag == "tower":
        return TOWER
    if tag == "rational":
        return QQ_FIELD
    if isinstance(tag, dict) and set(tag) == {"fp"}:
        return PrimeField(int(tag["fp"]))
    raise ValueError(f"Unknown coefficient ring tag: {tag!r}")


def convert_all(ring: Any, values: Iterable[Any]) -> tuple:
    return tuple(ring.convert(v) for v in values)
