"""
Prime fields GF(p) and their elements.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any

from sympy.ntheory import isprime


@dataclass(frozen=True, slots=True)
class PrimeFieldElement:
    """Residue in [0, p) with arithmetic reduced mod p."""

    value: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _lift(self, other: Any) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"Mixed moduli {self.p} and {other.p}")
            return other.value
        return int(other)

    def __add__(self, other: Any) -> PrimeFieldElement:
        return PrimeFieldElement(self.value + self._lift(other), self.p)

    __radd__ = __add__

    def __sub__(self, other: Any) -> PrimeFieldElement:
        return PrimeFieldElement(self.value - self._lift(other), self.p)

    def __rsub__(self, other: Any) -> PrimeFieldElement:
        return PrimeFieldElement(self._lift(other) - self.value, self.p)

    def __mul__(self, other: Any) -> PrimeFieldElement:
        return PrimeFieldElement(self.value * self._lift(other), self.p)

    __rmul__ = __mul__

    def __neg__(self) -> PrimeFieldElement:
        return PrimeFieldElement(-self.value, self.p)

    def __pow__(self, exponent: int) -> PrimeFieldElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElement(pow(self.value, exponent, self.p), self.p)

    def inverse(self) -> PrimeFieldElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other: Any) -> PrimeFieldElement:
        divisor = PrimeFieldElement(self._lift(other), self.p)
        return self * divisor.inverse()

    def __rtruediv__(self, other: Any) -> PrimeFieldElement:
        return PrimeFieldElement(self._lift(other), self.p) * self.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


class PrimeField:
    """GF(p) for a prime p; also serves as the coefficient ring tag {"fp": p}."""

    def __init__(self, p: int):
        if not isprime(p):
            raise ValueError(f"GF(p) needs a prime modulus, got {p}")
        self.p = int(p)
        self.name = f"GF({self.p})"
        self.zero = PrimeFieldElement(0, self.p)
        self.one = PrimeFieldElement(1, self.p)
        self.characteristic = self.p

    def __call__(self, value: Any) -> PrimeFieldElement:
        return self.convert(value)

    def convert(self, value: Any) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.p != self.p:
                raise ValueError(f"Element of GF({value.p}) is not in {self.name}")
            return value
        if hasattr(value, "denominator") and not isinstance(value, int):
            num, den = int(value.numerator), int(value.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError(f"Denominator {den} vanishes mod {self.p}")
            return PrimeFieldElement(num, self.p) / den
        return PrimeFieldElement(int(value), self.p)

    def is_zero(self, a: PrimeFieldElement) -> bool:
        return a.value == 0

    def inverse(self, a: PrimeFieldElement) -> PrimeFieldElement:
        return a.inverse()

    def exquo(self, a: PrimeFieldElement, b: PrimeFieldElement) -> PrimeFieldElement:
        return a / b

    def random_element(self, rng: random.Random) -> PrimeFieldElement:
        return PrimeFieldElement(rng.randrange(self.p), self.p)

    def elements(self):
        return (PrimeFieldElement(v, self.p) for v in range(self.p))

    def encode(self, a: PrimeFieldElement) -> str:
        return str(a.value)

    def decode(self, value: Any) -> PrimeFieldElement:
        if isinstance(value, str):
            text = value.strip()
            if not text.lstrip("-").isdigit():
                raise ValueError(f"Malformed residue {value!r}")
            return PrimeFieldElement(int(text), self.p)
        if isinstance(value, int) and not isinstance(value, bool):
            return PrimeFieldElement(value, self.p)
        raise ValueError(f"Malformed residue {value!r}")

    @property
    def tag(self) -> dict:
        return {"fp": self.p}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("fp", self.p))

    def __repr__(self) -> str:
        return self.name
