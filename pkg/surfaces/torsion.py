"""
Torsion of the Picard group of the minimal surface.

The two-torsion comes from the branch components: a subset whose class sum
is divisible by two gives a square root of the trivial bundle on the
cover, and the full sum (B = 2L) gives the trivial one. Miyaoka's count
of base points of |3K| then decides between the groups allowed for a
numerical Godeaux surface.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence

from pydantic import BaseModel, Field

from surfaces.lattice import DivClass, LatticeMismatchError, sum_classes

logger = logging.getLogger(__name__)


class InconsistentTorsionError(ValueError):
    """Two-torsion rank and base-point count match no admissible group."""


@dataclass(frozen=True)
class BranchComponent:
    name: str
    cls: DivClass
    form: Optional[Any] = None


def half_class(c: DivClass) -> Optional[DivClass]:
    coords = c.coordinates()
    if any(v % 2 for v in coords):
        return None
    return DivClass(c.config, coords[0] // 2, tuple(v // 2 for v in coords[1:]))


def _odd_support(c: DivClass) -> set[int]:
    return {k for k, v in enumerate(c.coordinates()) if v % 2}


def reduce_mod_two(columns: Mapping[str, set[int]]) -> tuple[dict[str, set[int]], dict[str, set[str]]]:
    """Column reduction over GF(2) on sets of row indices.

    Returns R and V with R[c] the reduced column and V[c] the set of
    original columns summing to it; columns with empty R span the kernel.
    """
    pivot_owner: dict[int, str] = {}
    V = {c: {c} for c in columns}
    R = {c: set(rows) for c, rows in columns.items()}
    for c in columns:
        pivot = min(R[c], default=None)
        while pivot is not None and pivot in pivot_owner:
            R[c] ^= R[pivot_owner[pivot]]
            V[c] ^= V[pivot_owner[pivot]]
            pivot = min(R[c], default=None)
        if pivot is not None:
            pivot_owner[pivot] = c
    return R, V


class KernelElement(BaseModel):
    components: list[str]
    half: list[int]


class BeauvilleKernel(BaseModel):
    kernel_dimension: int
    rank: int
    representatives: list[KernelElement] = Field(default_factory=list)

    @property
    def two_torsion_order(self) -> int:
        return 2 ** self.rank


def beauville_kernel(components: Sequence[BranchComponent], branch: DivClass) -> BeauvilleKernel:
    """Subsets of the branch components with even class sum, modulo the full sum.

    Each representative avoids the first component (adding the full sum if
    needed) and carries the half of its class sum.
    """
    names = [c.name for c in components]
    if len(set(names)) != len(names):
        raise ValueError("Branch components must be distinct")
    classes = {c.name: c.cls for c in components}
    if sum_classes(classes.values()) != branch:
        diff = (sum_classes(classes.values()) - branch).as_dict()
        raise LatticeMismatchError(f"Branch components do not add up to B: off by {diff}")
    R, V = reduce_mod_two({name: _odd_support(cls) for name, cls in classes.items()})
    kernel = [V[name] for name in names if not R[name]]
    full = set(names)
    if not kernel:
        raise LatticeMismatchError("The full branch sum is not even")
    # basis of the quotient by the full sum
    quotient: list[set[str]] = []
    span: list[set[str]] = [set(), full]
    for element in kernel:
        if element in span:
            continue
        representative = element ^ full if names[0] in element else element
        quotient.append(representative)
        span = span + [s ^ representative for s in span]
    representatives = []
    for subset in quotient:
        ordered = [n for n in names if n in subset]
        half = half_class(sum_classes(classes[n] for n in ordered))
        if half is None:
            raise LatticeMismatchError(f"{ordered} has an odd class sum")
        representatives.append(KernelElement(components=ordered, half=half.coordinates()))
    result = BeauvilleKernel(kernel_dimension=len(kernel), rank=len(quotient), representatives=representatives)
    logger.info("Two-torsion: kernel dimension %d, quotient rank %d", result.kernel_dimension, result.rank)
    return result


# Tors of a numerical Godeaux surface is cyclic of order at most 5 (Z/2 + Z/2 does not occur);
# keyed by (two-torsion rank, #{T : T != -T} / 2)
MIYAOKA_TABLE = {
    (0, 0): "trivial",
    (1, 0): "Z/2",
    (0, 1): "Z/3",
    (1, 1): "Z/4",
    (0, 2): "Z/5",
}


def miyaoka_conclusion(two_torsion_rank: int, base_points: int) -> str:
    try:
        return MIYAOKA_TABLE[(two_torsion_rank, base_points)]
    except KeyError:
        raise InconsistentTorsionError(
            f"No admissible group has two-torsion rank {two_torsion_rank} and {base_points} base points of |3K|"
        ) from None


def base_point_count(order: int) -> int:
    """#{T in Z/n : T != -T} / 2."""
    return sum(1 for t in range(order) if t != (-t) % order) // 2


class TorsionReport(BaseModel):
    two_torsion_rank: int
    base_points: int
    group: str
    witnesses: list[KernelElement] = Field(default_factory=list)
    base_point_coordinates: list[list[int]] = Field(default_factory=list)


def torsion_report(kernel: BeauvilleKernel, base_points: Sequence[Sequence[int]]) -> TorsionReport:
    group = miyaoka_conclusion(kernel.rank, len(base_points))
    logger.info("Torsion group %s (rank %d, %d base points)", group, kernel.rank, len(base_points))
    return TorsionReport(
        two_torsion_rank=kernel.rank,
        base_points=len(base_points),
        group=group,
        witnesses=kernel.representatives,
        base_point_coordinates=[list(p) for p in base_points],
    )
