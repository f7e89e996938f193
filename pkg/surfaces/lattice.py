"""
Divisor classes on iterated blow-ups of the plane.

A class is stored in the orthogonal basis (h; e_1, ..., e_n), where e_j is
the total transform of the j-th exceptional curve: (d; m_1, ..., m_n)
means d h - sum m_j e_j, with h^2 = 1, e_j^2 = -1. A center blown up on
the exceptional curve of an earlier center records it as its parent, and
the proper transform of an exceptional curve is its total class minus the
total classes of its children.

Class formulas use proper symbols: `E1` is the proper transform of the
exceptional curve E1, `tot(E1)` its total transform, `H` the line class,
`sum(E)` the family E1, E2, ... and `sum(F,2..5)` the members F2..F5.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Optional


class LatticeMismatchError(ValueError):
    """Classes from different blow-up configurations, or a class identity that fails."""


@dataclass(frozen=True)
class Center:
    name: str
    parent: Optional[str] = None
    point: Optional[tuple] = None
    tangent: Optional[tuple] = None


@dataclass(frozen=True)
class BlowupConfig:
    centers: tuple

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for center in self.centers:
            if center.name in seen:
                raise ValueError(f"Center {center.name} appears twice")
            if center.parent is not None and center.parent not in seen:
                raise ValueError(f"{center.name} is infinitely near {center.parent}, which is not blown up before it")
            seen.add(center.name)

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.centers]

    def __len__(self) -> int:
        return len(self.centers)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"No center named {name}") from None

    def center(self, name: str) -> Center:
        return self.centers[self.index(name)]

    def children(self, name: str) -> list[str]:
        return [c.name for c in self.centers if c.parent == name]

    def family(self, prefix: str) -> list[str]:
        """Names prefix1, prefix2, ... in numeric order."""
        members = [n for n in self.names if re.fullmatch(rf"{re.escape(prefix)}\d+", n)]
        return sorted(members, key=lambda n: int(n[len(prefix):]))

    def extended(self, *centers: Center) -> BlowupConfig:
        return BlowupConfig(self.centers + tuple(centers))

    def mapped(self, hom: Callable[[Any], Any]) -> BlowupConfig:
        """Same centers with point and tangent coordinates pushed through a homomorphism."""

        def image(values: Optional[tuple]) -> Optional[tuple]:
            return None if values is None else tuple(hom(v) for v in values)

        return BlowupConfig(tuple(Center(c.name, c.parent, image(c.point), image(c.tangent)) for c in self.centers))


@dataclass(frozen=True)
class DivClass:
    config: BlowupConfig
    degree: int
    mults: tuple = field(default=())

    def __post_init__(self) -> None:
        mults = tuple(int(m) for m in self.mults) or (0,) * len(self.config)
        if len(mults) != len(self.config):
            raise LatticeMismatchError(f"{len(mults)} multiplicities for {len(self.config)} centers")
        object.__setattr__(self, "mults", mults)
        object.__setattr__(self, "degree", int(self.degree))

    @classmethod
    def line(cls, config: BlowupConfig) -> DivClass:
        return cls(config, 1)

    @classmethod
    def total(cls, config: BlowupConfig, name: str) -> DivClass:
        mults = [0] * len(config)
        mults[config.index(name)] = -1
        return cls(config, 0, tuple(mults))

    @classmethod
    def proper(cls, config: BlowupConfig, name: str) -> DivClass:
        result = cls.total(config, name)
        for child in config.children(name):
            result = result - cls.total(config, child)
        return result

    @classmethod
    def from_mapping(cls, config: BlowupConfig, degree: int, mults: Mapping[str, int]) -> DivClass:
        values = [0] * len(config)
        for name, m in mults.items():
            values[config.index(name)] = m
        return cls(config, degree, tuple(values))

    def _same(self, other: DivClass) -> None:
        if not isinstance(other, DivClass) or other.config != self.config:
            raise LatticeMismatchError("Classes live on different blow-ups")

    def __add__(self, other: DivClass) -> DivClass:
        self._same(other)
        return DivClass(self.config, self.degree + other.degree, tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __sub__(self, other: DivClass) -> DivClass:
        return self + (-other)

    def __neg__(self) -> DivClass:
        return DivClass(self.config, -self.degree, tuple(-m for m in self.mults))

    def __mul__(self, k: int) -> DivClass:
        return DivClass(self.config, k * self.degree, tuple(k * m for m in self.mults))

    __rmul__ = __mul__

    def dot(self, other: DivClass) -> int:
        self._same(other)
        return self.degree * other.degree - sum(a * b for a, b in zip(self.mults, other.mults))

    def multiplicity(self, name: str) -> int:
        return self.mults[self.config.index(name)]

    def is_zero(self) -> bool:
        return self.degree == 0 and not any(self.mults)

    def coordinates(self) -> list[int]:
        return [self.degree, *self.mults]

    def as_dict(self) -> dict[str, int]:
        out = {"H": self.degree}
        out.update({n: m for n, m in zip(self.config.names, self.mults) if m})
        return out

    def __str__(self) -> str:
        parts = [f"{self.degree}H"]
        for name, m in zip(self.config.names, self.mults):
            if m:
                sign = "-" if m > 0 else "+"
                parts.append(f"{sign} {abs(m) if abs(m) != 1 else ''}e({name})")
        return " ".join(parts)


def intersect(a: DivClass, b: DivClass) -> int:
    return a.dot(b)


def canonical_class(config: BlowupConfig) -> DivClass:
    """-3h + sum of all total exceptional classes."""
    return DivClass(config, -3, (-1,) * len(config))


def strict_transform_class(config: BlowupConfig, degree: int, multiplicities: Mapping[str, int]) -> DivClass:
    """d h - sum m_j e_j for a plane curve with multiplicity m_j at the j-th center."""
    for center in config.centers:
        if center.parent is None:
            continue
        own = multiplicities.get(center.name, 0)
        above = multiplicities.get(center.parent, 0)
        if own > above:
            raise LatticeMismatchError(f"Multiplicity {own} at {center.name} exceeds {above} at {center.parent}")
    return DivClass.from_mapping(config, degree, multiplicities)


_TERM = re.compile(r"\s*([+-])?\s*(\d*)\s*(tot\(\s*\w+\s*\)|sum\(\s*\w+\s*(?:,\s*\d+\s*\.\.\s*\d+\s*)?\)|\w+)")
_SUM = re.compile(r"sum\(\s*(\w+)\s*(?:,\s*(\d+)\s*\.\.\s*(\d+)\s*)?\)")


class CurveClassTable:
    """Named classes on one blow-up, with a parser for class formulas."""

    def __init__(self, config: BlowupConfig, classes: Optional[Mapping[str, DivClass]] = None):
        self.config = config
        self.classes: dict[str, DivClass] = dict(classes or {})

    def __getitem__(self, name: str) -> DivClass:
        return self.classes[name]

    def __contains__(self, name: str) -> bool:
        return name in self.classes

    def add(self, name: str, value: DivClass | str) -> DivClass:
        cls = self.parse(value) if isinstance(value, str) else value
        cls._same(DivClass.line(self.config))
        self.classes[name] = cls
        return cls

    def proper_exceptionals(self) -> dict[str, DivClass]:
        return {n: DivClass.proper(self.config, n) for n in self.config.names}

    def proper_exceptionals_of(self, names: Iterable[str]) -> dict[str, DivClass]:
        return {n: DivClass.proper(self.config, n) for n in names}

    def _symbol(self, symbol: str) -> DivClass:
        if symbol == "H":
            return DivClass.line(self.config)
        if symbol == "K":
            return canonical_class(self.config)
        if symbol.startswith("tot("):
            return DivClass.total(self.config, symbol[4:-1].strip())
        match = _SUM.fullmatch(symbol)
        if match:
            prefix, lo, hi = match.groups()
            names = self.config.family(prefix)
            if lo is not None:
                names = [n for n in names if int(lo) <= int(n[len(prefix):]) <= int(hi)]
            if not names:
                raise KeyError(f"{symbol} names no centers")
            total = DivClass(self.config, 0)
            for name in names:
                total = total + DivClass.proper(self.config, name)
            return total
        if symbol in self.classes:
            return self.classes[symbol]
        return DivClass.proper(self.config, symbol)

    def parse(self, formula: str) -> DivClass:
        """Evaluate a formula such as "5H - 2E - sum(E,1..5) - 3sum(F) - 4G1 - E6"."""
        result = DivClass(self.config, 0)
        position = 0
        text = formula.strip()
        while position < len(text):
            match = _TERM.match(text, position)
            if not match or match.end() == position:
                raise ValueError(f"Cannot parse class formula at {text[position:]!r}")
            sign, coeff, symbol = match.groups()
            k = int(coeff) if coeff else 1
            if sign == "-":
                k = -k
            result = result + k * self._symbol(symbol)
            position = match.end()
        return result

    def check(self, name: str, expected: DivClass | str) -> None:
        target = self.parse(expected) if isinstance(expected, str) else expected
        actual = self.classes[name]
        if actual != target:
            diff = (actual - target).as_dict()
            raise LatticeMismatchError(f"{name} differs from the expected class by {diff}")

    def to_report(self) -> dict[str, list[int]]:
        return {name: cls.coordinates() for name, cls in self.classes.items()}


def sum_classes(classes: Iterable[DivClass]) -> DivClass:
    classes = list(classes)
    if not classes:
        raise ValueError("Nothing to add")
    total = classes[0]
    for c in classes[1:]:
        total = total + c
    return total