"""
Linear conditions imposed on plane curves of a fixed degree by clusters of
(possibly infinitely near) points, and the linear systems they cut out.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence, Union

from algebra.matrix import map_matrix, mat_vec, nullspace, rank, signed_minor_kernel
from algebra.poly import HomogeneousPoly, Polynomial, monomials_of_degree

from curves.local import direction_of_line, local_equation, strict_transform
from curves.specs import ClusterSpec, SingularitySpec

logger = logging.getLogger(__name__)

Condition = Union[SingularitySpec, ClusterSpec]


class DegenerateSystemError(ValueError):
    """The condition matrix does not have the full rank the computation needs."""


def _keys_below(m: int) -> list[tuple[int, int]]:
    """Exponent pairs of total degree < m ordered by (degree, first exponent)."""
    return sorted(((a, n - a) for n in range(m) for a in range(n + 1)), key=lambda k: (k[0] + k[1], k[0]))


@dataclass
class ConditionMatrix:
    ring: Any
    degree: int
    monomials: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    labels: list = field(default_factory=list)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.monomials)

    def stacked(self, other: ConditionMatrix) -> ConditionMatrix:
        if other.degree != self.degree or other.ring != self.ring:
            raise ValueError("Only matrices for the same degree and ring can be stacked")
        return ConditionMatrix(self.ring, self.degree, self.monomials, self.rows + other.rows, self.labels + other.labels)

    def rank(self) -> int:
        return rank(self.rows, self.ring) if self.rows else 0

    def kernel(self) -> list[HomogeneousPoly]:
        vectors = nullspace(self.rows, self.ring, len(self.monomials))
        return [self.to_polynomial(v) for v in vectors]

    def to_polynomial(self, vector: Sequence[Any]) -> HomogeneousPoly:
        return HomogeneousPoly(self.ring, dict(zip(self.monomials, vector)), self.degree)

    def coefficient_vector(self, F: Polynomial) -> list[Any]:
        if F.ring != self.ring:
            raise ValueError(f"Curve over {F.ring!r}, conditions over {self.ring!r}")
        return [F.coefficient(m) for m in self.monomials]

    def residuals(self, F: Polynomial) -> list[Any]:
        """Row values on F; all zero exactly when F meets every condition."""
        return mat_vec(self.rows, self.coefficient_vector(F), self.ring)

    def satisfied_by(self, F: Polynomial) -> bool:
        return all(self.ring.is_zero(v) for v in self.residuals(F))

    def map(self, hom: Callable[[Any], Any]) -> ConditionMatrix:
        codomain = hom.codomain  # type: ignore[attr-defined]
        return ConditionMatrix(codomain, self.degree, self.monomials, map_matrix(self.rows, hom), list(self.labels))

    def restricted(self, monomials: Iterable[tuple]) -> ConditionMatrix:
        """Columns of the given monomials only, in that order."""
        keep = list(monomials)
        index = {m: k for k, m in enumerate(self.monomials)}
        rows = [[row[index[m]] for m in keep] for row in self.rows]
        return ConditionMatrix(self.ring, self.degree, keep, rows, list(self.labels))


def cluster_rows(degree: int, cluster: ClusterSpec, ring: Any) -> ConditionMatrix:
    monomials = monomials_of_degree(degree)
    point = cluster.at.base
    series = [local_equation(HomogeneousPoly.monomial(ring, m), point) for m in monomials]
    directions = list(cluster.at.chain)
    if cluster.tangent is not None:
        directions = [direction_of_line(point, cluster.tangent, ring)] + directions[1:]
    rows: list = []
    labels: list = []
    name = cluster.label or f"{cluster.multiplicities}@{point}"
    for level, m in enumerate(cluster.multiplicities):
        if level:
            series = [strict_transform(s, previous, directions[level - 1], formal=True) for s in series]
        for key in _keys_below(m):
            rows.append([s.coefficient(key) for s in series])
            labels.append(f"{name}:level{level}:{key[0]},{key[1]}")
        previous = m
    if cluster.omit:
        rows = rows[: len(rows) - cluster.omit]
        labels = labels[: len(labels) - cluster.omit]
    return ConditionMatrix(ring, degree, monomials, rows, labels)


def build_condition_rows(degree: int, conditions: Iterable[Condition], ring: Any) -> ConditionMatrix:
    matrix = ConditionMatrix(ring, degree, monomials_of_degree(degree))
    for condition in conditions:
        cluster = condition.cluster() if isinstance(condition, SingularitySpec) else condition
        block = cluster_rows(degree, cluster, ring)
        if len(block.rows) != cluster.row_count:
            raise DegenerateSystemError(f"{cluster.label}: built {len(block.rows)} rows, expected {cluster.row_count}")
        matrix = matrix.stacked(block)
    logger.debug("Degree %d conditions: %d rows x %d monomials", degree, *matrix.shape)
    return matrix


def linear_system_dimension(degree: int, conditions: Iterable[Condition], field: Any) -> int:
    """Projective dimension of the system; -1 when only the zero form survives."""
    matrix = build_condition_rows(degree, conditions, field)
    return len(matrix.monomials) - matrix.rank() - 1


def linear_system_basis(degree: int, conditions: Iterable[Condition], field: Any) -> list[HomogeneousPoly]:
    return build_condition_rows(degree, conditions, field).kernel()


def kernel_via_signed_minors(matrix: ConditionMatrix, check_rank: bool = True) -> HomogeneousPoly:
    """Generator of the kernel of an n x (n + 1) matrix of full rank n."""
    n_rows, n_cols = matrix.shape
    if n_cols != n_rows + 1:
        raise DegenerateSystemError(f"Signed minors need an n x (n + 1) matrix, got {n_rows} x {n_cols}")
    if check_rank and matrix.rank() < n_rows:
        raise DegenerateSystemError(f"Rank below {n_rows}; the kernel is not a single curve")
    vector = signed_minor_kernel(matrix.rows, matrix.ring)
    if all(matrix.ring.is_zero(v) for v in vector):
        raise DegenerateSystemError("Every maximal minor vanishes")
    return matrix.to_polynomial(vector)


def proportional(F: Polynomial, G: Polynomial) -> Any:
    """The scalar lam with G = lam * F, or None when they are not proportional."""
    if F.ring != G.ring or F.is_zero() or G.is_zero():
        return None
    if set(F.terms) != set(G.terms):
        return None
    ring = F.ring
    exps = next(iter(F.terms))
    lam = G.terms[exps] * ring.inverse(F.terms[exps])
    if all(G.terms[e] == lam * c for e, c in F.terms.items()):
        return lam
    return None
