"""
Curve assets: plane forms with their coefficient ring, optional named
factors and prescribed singularities, stored as canonical JSON.

The canonical layout puts one term per line in graded-lex descending
order, so serialize(load(text)) reproduces the file byte for byte.
"""

import json
import logging
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from algebra.poly import HomogeneousPoly, grlex_key, product
from algebra.rings import ring_from_tag
from curves.specs import MissingTangentError, PointSpec, SingularityKind, SingularitySpec

logger = logging.getLogger(__name__)

SHIPPED_ASSETS = (
    "campedelli_octic",
    "campedelli_octic_phi",
    "campedelli_conic",
    "op_q1",
    "op_q2",
    "op_c1",
    "op_c2",
    "op_q",
    "op_qtilde",
    "op_lines",
)


class AssetError(ValueError):
    """An asset file that is missing, malformed or inconsistent."""


class TermRecord(BaseModel):
    exps: list[int]
    coeff: Any


class FactorRecord(BaseModel):
    name: str
    degree: int
    terms: list[TermRecord]


class SingularityRecord(BaseModel):
    name: str
    kind: SingularityKind
    point: list[Any]
    tangent: Optional[list[Any]] = None
    multiplicity: int = 0


class CurveAsset(BaseModel):
    name: str
    ring: Union[str, dict]
    degree: int
    description: str = ""
    terms: list[TermRecord]
    factors: list[FactorRecord] = Field(default_factory=list)
    singularities: list[SingularityRecord] = Field(default_factory=list)

    @property
    def field(self):
        try:
            return ring_from_tag(self.ring)
        except ValueError as e:
            raise AssetError(f"{self.name}: {e}") from e

    def _form(self, label: str, degree: int, terms: list[TermRecord], allow_zero: bool = False) -> HomogeneousPoly:
        ring = self.field
        coefficients = {}
        for term in terms:
            exps = tuple(term.exps)
            if len(exps) != 3 or any(e < 0 for e in exps):
                raise AssetError(f"{label}: bad exponent vector {term.exps}")
            if sum(exps) != degree:
                raise AssetError(f"{label}: term {term.exps} has degree {sum(exps)}, expected {degree}")
            if exps in coefficients:
                raise AssetError(f"{label}: repeated term {term.exps}")
            try:
                coefficients[exps] = ring.decode(term.coeff)
            except (ValueError, TypeError, ZeroDivisionError) as e:
                raise AssetError(f"{label}: malformed coefficient {term.coeff!r} ({e})") from e
        form = HomogeneousPoly(ring, coefficients, degree)
        if form.is_zero() and not allow_zero:
            raise AssetError(f"{label}: the zero form defines no curve")
        return form

    def polynomial(self, allow_zero: bool = False) -> HomogeneousPoly:
        return self._form(self.name, self.degree, self.terms, allow_zero)

    def factor_polynomials(self) -> dict[str, HomogeneousPoly]:
        factors = {f.name: self._form(f"{self.name}/{f.name}", f.degree, f.terms) for f in self.factors}
        if factors and product(factors.values()) != self.polynomial():
            raise AssetError(f"{self.name}: the factors do not multiply to the form")
        return factors

    def singularity_specs(self) -> list[SingularitySpec]:
        ring = self.field
        specs = []
        for record in self.singularities:
            try:
                point = tuple(ring.decode(c) for c in record.point)
                tangent = None if record.tangent is None else tuple(ring.decode(c) for c in record.tangent)
                specs.append(SingularitySpec(record.kind, PointSpec(point), tangent, record.multiplicity, record.name))
            except (ValueError, TypeError, MissingTangentError) as e:
                raise AssetError(f"{self.name}: singularity {record.name}: {e}") from e
        return specs


def parse_asset(text: str, source: str = "<string>") -> CurveAsset:
    try:
        return CurveAsset.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise AssetError(f"{source}: not JSON ({e})") from e
    except ValidationError as e:
        raise AssetError(f"{source}: {e.errors()[0]['loc']}: {e.errors()[0]['msg']}") from e


def load_curve_asset(path: Union[str, Path], allow_zero: bool = False) -> tuple[HomogeneousPoly, list[SingularitySpec]]:
    """The validated form and its singularity specs."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise AssetError(f"Cannot read asset {path}: {e}") from e
    asset = parse_asset(text, str(path))
    form = asset.polynomial(allow_zero)
    logger.info(f"Loaded asset {asset.name}: degree {asset.degree}, {len(form)} terms over {asset.field.name}")
    return form, asset.singularity_specs()


def _encode(ring: Any, value: Any) -> Any:
    return ring.encode(ring.decode(value))


def _term(ring: Any, term: TermRecord) -> dict:
    return {"exps": list(term.exps), "coeff": _encode(ring, term.coeff)}


def _sorted_terms(terms: list[TermRecord]) -> list[TermRecord]:
    return sorted(terms, key=lambda t: grlex_key(tuple(t.exps)), reverse=True)


def serialize_asset(asset: CurveAsset) -> str:
    """Canonical text: coefficients re-encoded, terms in graded-lex descending order."""
    ring = asset.field

    def block(key: str, items: list) -> str:
        body = ",\n".join("    " + json.dumps(item) for item in items)
        return f'  "{key}": [\n{body}\n  ]'

    entries = [
        f'  "name": {json.dumps(asset.name)}',
        f'  "ring": {json.dumps(asset.ring)}',
        f'  "degree": {json.dumps(asset.degree)}',
        f'  "description": {json.dumps(asset.description)}',
        block("terms", [_term(ring, t) for t in _sorted_terms(asset.terms)]),
    ]
    if asset.factors:
        factors = [
            {"name": f.name, "degree": f.degree, "terms": [_term(ring, t) for t in _sorted_terms(f.terms)]}
            for f in asset.factors
        ]
        entries.append(block("factors", factors))
    if asset.singularities:
        records = [
            {
                "name": s.name,
                "kind": s.kind.value,
                "point": [_encode(ring, c) for c in s.point],
                "tangent": None if s.tangent is None else [_encode(ring, c) for c in s.tangent],
                "multiplicity": s.multiplicity,
            }
            for s in asset.singularities
        ]
        entries.append(block("singularities", records))
    return "{\n" + ",\n".join(entries) + "\n}\n"


def asset_from_form(
    name: str, form: HomogeneousPoly, description: str = "", factors: Optional[dict] = None
) -> CurveAsset:
    ring = form.ring
    terms = [TermRecord(exps=list(e), coeff=ring.encode(c)) for e, c in form.terms.items()]
    records = []
    for factor_name, factor in (factors or {}).items():
        factor_terms = [TermRecord(exps=list(e), coeff=ring.encode(c)) for e, c in factor.terms.items()]
        records.append(FactorRecord(name=factor_name, degree=factor.degree, terms=factor_terms))
    return CurveAsset(name=name, ring=ring.tag, degree=form.degree, description=description, terms=terms, factors=records)


class AssetStore:
    """The asset directory: listing, loading and byte-identity validation."""

    def __init__(self, directory: Union[str, Path]):
        self.directory = Path(directory)

    def path(self, name: str) -> Path:
        return self.directory / f"{name}.json"

    def names(self) -> list[str]:
        return sorted(p.stem for p in self.directory.glob("*.json"))

    def missing(self) -> list[str]:
        return [name for name in SHIPPED_ASSETS if not self.path(name).exists()]

    def asset(self, name: str) -> CurveAsset:
        path = self.path(name)
        if not path.exists():
            raise AssetError(f"Asset {name} not found in {self.directory}")
        return parse_asset(path.read_text(), str(path))

    def form(self, name: str) -> HomogeneousPoly:
        return self.asset(name).polynomial()

    def forms(self, *names: str) -> dict[str, HomogeneousPoly]:
        return {name: self.form(name) for name in names}

    def describe(self) -> list[dict]:
        rows = []
        for name in self.names():
            asset = self.asset(name)
            rows.append({"name": name, "ring": asset.field.name, "degree": asset.degree})
        return rows

    def validate(self, name: str) -> bool:
        """Loads every part of the asset and checks the file is in canonical form."""
        path = self.path(name)
        text = path.read_text()
        asset = parse_asset(text, str(path))
        asset.polynomial()
        asset.factor_polynomials()
        asset.singularity_specs()
        canonical = serialize_asset(asset) == text
        if not canonical:
            logger.warning(f"Asset {name} is not in canonical form")
        return canonical

    def validate_all(self) -> dict[str, bool]:
        return {name: self.validate(name) for name in self.names()}
