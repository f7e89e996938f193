"""
Numerical invariants of a double cover of a blown-up plane.

For X -> Y branched along B = 2L with B smooth, the projection formula
gives K_X = pi*(K_Y + L), so K_X^2 = 2 (K_Y + L)^2, and
pi_* O_X(n K_X) splits into the invariant part n(K_Y + L) and the
anti-invariant part n K_Y + (n - 1) L. Plurigenera are counted as plane
linear systems once the fixed exceptional curves are stripped off.
"""

from __future__ import annotations

import logging
from typing import Any, Mapping, Optional

from pydantic import BaseModel

from curves.conditions import linear_system_basis, linear_system_dimension
from curves.local import direction_of_line
from curves.specs import ClusterSpec, MissingTangentError, PointSpec

from surfaces.lattice import BlowupConfig, DivClass, canonical_class

logger = logging.getLogger(__name__)

SHEDDING_LIMIT = 10_000


class CoverInvariants(BaseModel):
    k_squared: int
    minimal_k_squared: int
    contracted: list[str]
    p_g: int
    q: int
    p_2: int

    @property
    def chi(self) -> int:
        return 1 + self.p_g - self.q

    @property
    def plurigenus_formula_holds(self) -> bool:
        """P2 = chi + K^2 on the minimal model."""
        return self.p_2 == self.chi + self.minimal_k_squared


def remove_fixed_exceptional_parts(cls: DivClass) -> tuple[DivClass, dict[str, int]]:
    """Subtract proper exceptional curves R with cls . R < 0 until none is left.

    Every proper exceptional curve has negative self-intersection, so each
    one it meets negatively is a fixed component of |cls|.
    """
    config = cls.config
    curves = {name: DivClass.proper(config, name) for name in config.names}
    fixed: dict[str, int] = {}
    for _ in range(SHEDDING_LIMIT):
        negative = next((name for name, R in curves.items() if cls.dot(R) < 0), None)
        if negative is None:
            return cls, fixed
        cls = cls - curves[negative]
        fixed[negative] = fixed.get(negative, 0) + 1
    raise RuntimeError(f"Fixed-part removal did not settle after {SHEDDING_LIMIT} steps")


def _chain(config: BlowupConfig, root: str, cls: DivClass) -> list[str]:
    chain = [root]
    while True:
        children = [c for c in config.children(chain[-1]) if cls.multiplicity(c) > 0]
        if not children:
            return chain
        if len(children) > 1:
            raise NotImplementedError(f"{chain[-1]} has several infinitely near centers with assigned multiplicity")
        chain.append(children[0])


def class_clusters(cls: DivClass, geometry: BlowupConfig, ring: Any) -> list[ClusterSpec]:
    """Plane conditions for |cls|: multiplicity m_j at the j-th center.

    Centers of the first infinitely near level carry the tangent line at
    their parent point; second-level centers carry a chart direction.
    """
    config = cls.config
    clusters = []
    for center in config.centers:
        if center.parent is not None or cls.multiplicity(center.name) <= 0:
            continue
        names = _chain(config, center.name, cls)
        mults = tuple(cls.multiplicity(n) for n in names)
        located = [geometry.center(n) for n in names]
        if located[0].point is None:
            raise MissingTangentError(f"Center {center.name} has no plane point")
        point = tuple(ring.convert(v) for v in located[0].point)
        tangent = None
        chain: tuple = ()
        if len(names) > 1:
            if located[1].tangent is None:
                raise MissingTangentError(f"{names[1]} has no tangent line at {names[0]}")
            tangent = tuple(ring.convert(v) for v in located[1].tangent)
        if len(names) > 2:
            if located[2].tangent is None:
                raise MissingTangentError(f"{names[2]} has no direction on {names[1]}")
            chain = (direction_of_line(point, tangent, ring), tuple(ring.convert(v) for v in located[2].tangent))
            tangent = None
        clusters.append(ClusterSpec(PointSpec(point, chain), mults, tangent, label=center.name))
    return clusters


def h0_of_class(cls: DivClass, geometry: BlowupConfig, ring: Any) -> int:
    """Vector-space dimension of H^0 for a class on the blown-up plane.

    geometry holds the centers' coordinates over ring; it must name the
    same centers as cls.config.
    """
    if geometry.names != cls.config.names:
        raise ValueError("Geometry and class use different blow-ups")
    reduced, fixed = remove_fixed_exceptional_parts(cls)
    if fixed:
        logger.debug("Fixed part of |%s|: %s", cls, fixed)
    if reduced.degree < 0:
        return 0
    if reduced.degree == 0:
        return 1 if reduced.is_zero() else 0
    clusters = class_clusters(reduced, geometry, ring)
    return linear_system_dimension(reduced.degree, clusters, ring) + 1


def class_basis(cls: DivClass, geometry: BlowupConfig, ring: Any) -> tuple[DivClass, list]:
    """The mobile class and a basis of plane forms for it."""
    reduced, _ = remove_fixed_exceptional_parts(cls)
    if reduced.degree <= 0:
        return reduced, []
    return reduced, linear_system_basis(reduced.degree, class_clusters(reduced, geometry, ring), ring)


def contractible_branch_curves(components: Mapping[str, DivClass]) -> list[str]:
    """Branch components whose preimage on the cover is a (-1)-curve.

    A smooth rational branch curve R with R^2 = -2 (so K.R = 0) is covered
    by R' with 2R' = pi*R, hence R'^2 = -1.
    """
    contracted = []
    for name, R in components.items():
        K = canonical_class(R.config)
        if R.dot(R) == -2 and K.dot(R) == 0:
            contracted.append(name)
    return contracted


def double_cover_invariants(
    L: DivClass,
    geometry: BlowupConfig,
    ring: Any,
    branch_components: Mapping[str, DivClass],
    q: Optional[int] = None,
) -> CoverInvariants:
    """Invariants of the double cover branched along 2L.

    The minimal model contracts the (-1)-curves lying over the rational
    (-2)-curves among branch_components. q defaults to 0, which is forced
    once p_g = 0.
    """
    K = canonical_class(L.config)
    contracted = contractible_branch_curves(branch_components)
    adjoint = K + L
    k_squared = 2 * adjoint.dot(adjoint)
    p_g = h0_of_class(adjoint, geometry, ring)
    p_2 = h0_of_class(2 * K + 2 * L, geometry, ring) + h0_of_class(2 * K + L, geometry, ring)
    if q is None:
        if p_g:
            raise ValueError("q is only forced when p_g = 0")
        q = 0
    invariants = CoverInvariants(
        k_squared=k_squared,
        minimal_k_squared=k_squared + len(contracted),
        contracted=contracted,
        p_g=p_g,
        q=q,
        p_2=p_2,
    )
    logger.info(
        "Cover invariants: K^2=%d, minimal K^2=%d, p_g=%d, q=%d, P2=%d",
        invariants.k_squared,
        invariants.minimal_k_squared,
        invariants.p_g,
        invariants.q,
        invariants.p_2,
    )
    return invariants
