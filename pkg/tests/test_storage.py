"""Curve assets and verification reports."""

import json

import pytest

from algebra.poly import HomogeneousPoly
from algebra.primefield import PrimeField
from algebra.rings import QQ_FIELD
from curves.specs import SingularityKind
from storage.assets import (
    SHIPPED_ASSETS,
    AssetError,
    AssetStore,
    asset_from_form,
    load_curve_asset,
    parse_asset,
    serialize_asset,
)
from storage.reports import CheckRecord, ReportStore, VerificationReport, digest


def asset_text(**overrides):
    data = {
        "name": "sample",
        "ring": "rational",
        "degree": 2,
        "terms": [{"exps": [2, 0, 0], "coeff": "1/1"}, {"exps": [0, 1, 1], "coeff": "-3/2"}],
    }
    data.update(overrides)
    return json.dumps(data)


# assets


def test_shipped_assets_are_canonical(asset_store):
    assert asset_store.missing() == []
    results = asset_store.validate_all()
    assert set(results) == set(SHIPPED_ASSETS)
    assert all(results.values())


def test_serialized_form_loads_back(tmp_path):
    form = HomogeneousPoly(PrimeField(101), {(3, 0, 0): 5, (1, 1, 1): -1, (0, 0, 3): 7})
    text = serialize_asset(asset_from_form("cubic", form, "a test cubic"))
    path = tmp_path / "cubic.json"
    path.write_text(text)
    loaded, specs = load_curve_asset(path)
    assert loaded == form
    assert specs == []
    assert serialize_asset(parse_asset(text)) == text


def test_factors_must_multiply_to_the_form():
    x = HomogeneousPoly.linear(QQ_FIELD, [1, 0, 0])
    y = HomogeneousPoly.linear(QQ_FIELD, [0, 1, 0])
    good = asset_from_form("xy", x * y, factors={"x": x, "y": y})
    assert set(good.factor_polynomials()) == {"x", "y"}
    bad = asset_from_form("xy", x * y, factors={"x": x, "x2": x})
    with pytest.raises(AssetError):
        bad.factor_polynomials()


@pytest.mark.parametrize(
    "overrides",
    [
        {"terms": []},
        {"terms": [{"exps": [2, 0, 0], "coeff": "0/1"}]},
        {"terms": [{"exps": [3, 0, 0], "coeff": "1/1"}]},
        {"terms": [{"exps": [2, 0], "coeff": "1/1"}]},
        {"terms": [{"exps": [2, 0, 0], "coeff": "1/1"}, {"exps": [2, 0, 0], "coeff": "2/1"}]},
        {"terms": [{"exps": [2, 0, 0], "coeff": "1/0"}]},
        {"ring": "complex"},
    ],
)
def test_malformed_assets_are_rejected(overrides):
    with pytest.raises(AssetError):
        parse_asset(asset_text(**overrides)).polynomial()


def test_non_json_is_rejected():
    with pytest.raises(AssetError):
        parse_asset("{not json")


def test_missing_fields_are_rejected():
    with pytest.raises(AssetError):
        parse_asset(json.dumps({"name": "x"}))


def test_missing_file(tmp_path):
    with pytest.raises(AssetError):
        load_curve_asset(tmp_path / "absent.json")
    with pytest.raises(AssetError):
        AssetStore(tmp_path).asset("absent")


def test_octic_singularity_specs(asset_store):
    specs = asset_store.asset("campedelli_octic").singularity_specs()
    kinds = {spec.name: spec.kind for spec in specs}
    assert kinds["p"] == SingularityKind.ORDINARY
    assert kinds["p1"] == SingularityKind.INFINITELY_NEAR_TRIPLE
    assert [kinds[f"p{i}"] for i in range(2, 6)] == [SingularityKind.TACNODE] * 4


def test_describe_lists_rings(asset_store):
    rows = {row["name"]: row for row in asset_store.describe()}
    assert rows["campedelli_octic"]["degree"] == 8
    assert rows["campedelli_octic"]["ring"] == "tower"
    assert rows["op_c1"]["ring"] == "rational"


# reports


def make_report():
    return VerificationReport(
        config={"prime": 30047},
        checks=[
            CheckRecord(name="a", example="campedelli", anchor="first", verdict=True, wall_ms=3.0),
            CheckRecord(name="b", example="campedelli", anchor="second", verdict=False, error="boom"),
        ],
    )


def test_report_verdicts():
    report = make_report()
    assert not report.passed
    assert [c.name for c in report.failures] == ["b"]
    text = report.render_text()
    assert "[FAIL] campedelli:b" in text
    assert "1/2 checks passed" in text


def test_report_round_trip(tmp_path):
    store = ReportStore(tmp_path)
    path = store.write(make_report(), tmp_path / "nested" / "report.json")
    again = store.read(path)
    assert again == make_report()
    assert json.loads(path.read_text())["schema"] == "godeaux-report/1"


def test_report_without_timings():
    document = make_report().document(include_timings=False)
    assert all("wall_ms" not in check for check in document["checks"])
    assert document["passed"] is False


def test_digest_is_stable():
    assert digest("campedelli", {"a": 1, "b": 2}) == digest("campedelli", {"b": 2, "a": 1})
    assert digest("campedelli") != digest("oort-peters")
