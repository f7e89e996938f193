"""
Square roots mod p and ring homomorphisms from the tower (or Q) into GF(p).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from sympy.ntheory import isprime, nextprime, sqrt_mod

from algebra.primefield import PrimeField, PrimeFieldElement
from algebra.tower import TOWER_DIMENSION, TowerElement, generator_exponents

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 30047
DEFAULT_BRANCHES = (1, 0, 1)


class TowerEmbeddingError(ValueError):
    """No square roots of the tower's radicands exist mod p for the chosen branches."""


class PrimeSearchError(RuntimeError):
    """The good-prime search passed its configured cap."""


def sqrt_mod_p(n: int, p: int) -> Optional[int]:
    """Canonical square root of n mod an odd prime p (the one <= (p-1)/2), or None."""
    if p == 2 or not isprime(p):
        raise ValueError(f"sqrt_mod_p needs an odd prime, got {p}")
    root = sqrt_mod(n % p, p)
    if root is None:
        return None
    root = int(root)
    return min(root, (p - root) % p)


def _pick(root: int, bit: int, p: int) -> int:
    return root if bit == 0 else (p - root) % p


@dataclass(frozen=True)
class RingHom:
    """Homomorphism Z[alpha, beta, delta] -> GF(p) fixed by the images of the generators."""

    p: int
    r_alpha: int
    r_beta: int
    r_delta: int
    branches: tuple = DEFAULT_BRANCHES

    def __post_init__(self) -> None:
        p = self.p
        checks = (
            (self.r_alpha * self.r_alpha - 17) % p,
            (self.r_beta * self.r_beta - 21 - 5 * self.r_alpha) % p,
            (self.r_delta * self.r_delta - 5 - self.r_alpha) % p,
        )
        if any(checks):
            raise TowerEmbeddingError(f"Residues {self.images} do not satisfy the tower relations mod {p}")
        images = []
        for index in range(TOWER_DIMENSION):
            ea, eb, ed = generator_exponents(index)
            images.append(pow(self.r_alpha, ea, p) * pow(self.r_beta, eb, p) * pow(self.r_delta, ed, p) % p)
        object.__setattr__(self, "_basis_images", tuple(images))

    @property
    def images(self) -> tuple[int, int, int]:
        return (self.r_alpha, self.r_beta, self.r_delta)

    @property
    def codomain(self) -> PrimeField:
        return PrimeField(self.p)

    def __call__(self, a: Any) -> PrimeFieldElement:
        if not isinstance(a, TowerElement):
            return self.codomain.convert(a)
        total = 0
        for c, image in zip(a.coords, self._basis_images):  # type: ignore[attr-defined]
            if not c:
                continue
            den = int(c.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError(f"Denominator {den} vanishes mod {self.p}")
            total += int(c.numerator) * pow(den, -1, self.p) * image
        return PrimeFieldElement(total, self.p)

    def map_point(self, point: Sequence[Any]) -> tuple:
        return tuple(self(c) for c in point)


@dataclass(frozen=True)
class RationalReduction:
    """Reduction Q -> GF(p) for rationals whose denominators are prime to p."""

    p: int

    @property
    def codomain(self) -> PrimeField:
        return PrimeField(self.p)

    def __call__(self, a: Any) -> PrimeFieldElement:
        return self.codomain.convert(a)

    def map_point(self, point: Sequence[Any]) -> tuple:
        return tuple(self(c) for c in point)


def embed_tower(p: int, branches: Sequence[int] = DEFAULT_BRANCHES) -> RingHom:
    """Images of alpha, beta, delta mod p for the given branch bits.

    Args:
        p: odd prime
        branches: three bits; 0 picks the canonical root, 1 its negative
    """
    if p == 2 or not isprime(p):
        raise TowerEmbeddingError(f"{p} is not an odd prime")
    bits = tuple(int(b) for b in branches)
    if len(bits) != 3 or any(b not in (0, 1) for b in bits):
        raise TowerEmbeddingError(f"Branch choice must be three bits, got {branches!r}")

    root = sqrt_mod_p(17, p)
    if root is None:
        raise TowerEmbeddingError(f"17 is not a square mod {p}")
    r_alpha = _pick(root, bits[0], p)

    root = sqrt_mod_p(21 + 5 * r_alpha, p)
    if root is None:
        raise TowerEmbeddingError(f"21 + 5*alpha is not a square mod {p}")
    r_beta = _pick(root, bits[1], p)

    root = sqrt_mod_p(5 + r_alpha, p)
    if root is None:
        raise TowerEmbeddingError(f"5 + alpha is not a square mod {p}")
    r_delta = _pick(root, bits[2], p)

    return RingHom(p, r_alpha, r_beta, r_delta, bits)


def admits_embedding(p: int) -> bool:
    """True when some branch choice embeds the tower into GF(p)."""
    for alpha_bit in (0, 1):
        try:
            embed_tower(p, (alpha_bit, 0, 0))
            return True
        except TowerEmbeddingError:
            continue
    return False


def find_good_prime(start: int, cap: Optional[int] = None) -> int:
    """Smallest prime >= start admitting an embedding of the tower."""
    if start < 3:
        start = 3
    p = start if isprime(start) else nextprime(start)
    while cap is None or p <= cap:
        if p != 2 and admits_embedding(p):
            logger.info(f"Good prime found: {p}")
            return p
        p = nextprime(p)
    raise PrimeSearchError(f"No prime in [{start}, {cap}] admits the tower embedding")


def sqrt_minus_three(p: int) -> int:
    """Canonical square root of -3 mod p, for p = 1 mod 3."""
    root = sqrt_mod_p(-3, p)
    if root is None:
        raise ValueError(f"-3 is not a square mod {p}")
    return root
