"""Check registry, the two example pipelines and the concurrent runner."""

import threading
from concurrent.futures import ThreadPoolExecutor

import pytest

from services import oort_peters as oort_peters_module
from services.campedelli import CampedelliPipeline
from services.pipeline import CheckSpec, Pipeline
from services.verifier import UnknownCheckError, build_registry, run_check, run_checks, select_checks
from storage.reports import CheckOutcome
from surfaces.cover import CoverInvariants

CAMPEDELLI_CHECKS = [
    "ring-embedding",
    "condition-count",
    "octic-reconstruction",
    "reduction-match",
    "conic-implicit",
    "residual-conditions",
    "singularity-taxonomy",
    "smoothness",
    "irreducibility",
    "genus",
    "bezout",
    "invariants",
    "torsion",
]
OORT_PETERS_CHECKS = [
    "op-bezout",
    "op-classes",
    "op-invariants",
    "op-torsion",
    "op-bicanonical",
    "op-quadric-relation",
]
HEAVY = {"octic-reconstruction", "smoothness", "invariants", "op-quadric-relation"}


def _params(names):
    return [pytest.param(n, marks=pytest.mark.slow) if n in HEAVY else n for n in names]


def _spec(pipeline, name):
    return next(spec for spec in pipeline.checks() if spec.name == name)


# registry


def test_registry_order(settings):
    names = [spec.name for spec in build_registry(settings)]
    assert names == CAMPEDELLI_CHECKS + OORT_PETERS_CHECKS


def test_registry_for_one_example(settings):
    registry = build_registry(settings, ("oort-peters",))
    assert {spec.example for spec in registry} == {"oort-peters"}


def test_select_checks_keeps_registry_order(settings):
    registry = build_registry(settings)
    selected = select_checks(registry, ["torsion", "genus"])
    assert [spec.name for spec in selected] == ["genus", "torsion"]
    assert select_checks(registry, []) == registry


def test_unknown_check_names(settings):
    with pytest.raises(UnknownCheckError, match="no-such-check"):
        select_checks(build_registry(settings), ["genus", "no-such-check"])


def test_slow_checks_are_flagged(settings):
    slow = {spec.name for spec in build_registry(settings) if spec.slow}
    assert slow == {"octic-reconstruction", "smoothness", "op-quadric-relation"}


# pipelines


@pytest.mark.parametrize("name", _params(CAMPEDELLI_CHECKS))
def test_campedelli_check_passes(campedelli, name):
    outcome = _spec(campedelli, name).run()
    assert outcome.verdict, outcome.witness


@pytest.mark.parametrize("name", _params(OORT_PETERS_CHECKS))
def test_oort_peters_check_passes(oort_peters, name):
    outcome = _spec(oort_peters, name).run()
    assert outcome.verdict, outcome.witness


def test_embedding_witness(campedelli):
    witness = campedelli.check_ring_embedding().witness
    assert witness == {"prime": 30047, "images": [20452, 6941, 27962]}


def test_condition_count_witness(campedelli):
    witness = campedelli.check_condition_count().witness
    assert witness == {"monomials": 45, "killed": 22, "free": 23, "relations": 22, "rank": 22}


def test_printed_reduction_scale(campedelli):
    assert campedelli.check_reduction_match().witness["scale"] == 12141


def test_campedelli_bezout_witness(campedelli):
    witness = campedelli.check_bezout().witness
    assert witness["multiplicities"] == [4, 4, 4, 4]
    assert witness["total"] == witness["expected"] == 16


def test_campedelli_genus_witness(campedelli):
    witness = campedelli.check_genus().witness
    assert (witness["arithmetic"], witness["deficit"], witness["geometric"]) == (21, 20, 1)


def test_campedelli_torsion_witness(campedelli):
    witness = campedelli.check_torsion().witness
    assert witness["group"] == "Z/2"
    assert witness["residual_count"] == 2
    assert witness["base_point_coordinates"] == []


def test_oort_peters_torsion_witness(oort_peters):
    witness = oort_peters.check_torsion().witness
    assert witness["group"] == "Z/4"
    assert witness["base_point_coordinates"] == [[3, 0, 1]]
    assert witness["half_of_witness_is_L1"]


def test_oort_peters_invariants_witness(oort_peters):
    outcome = oort_peters.check_invariants()
    assert outcome.verdict
    witness = outcome.witness
    assert witness["contracted"] == ["E1", "E2", "E3", "E4", "E5"]
    assert (witness["k_squared"], witness["minimal_k_squared"]) == (-4, 1)
    assert (witness["q"], witness["chi"]) == (0, 1)


def test_oort_peters_invariants_reject_an_irregular_cover(oort_peters, monkeypatch):
    irregular = CoverInvariants(k_squared=-4, minimal_k_squared=1, contracted=["E1"], p_g=1, q=1, p_2=2)
    assert irregular.plurigenus_formula_holds
    monkeypatch.setattr(oort_peters_module, "double_cover_invariants", lambda *args, **kwargs: irregular)
    assert not oort_peters.check_invariants().verdict


def test_reduction_match_is_skipped_off_the_default_branches(asset_store):
    outcome = CampedelliPipeline(asset_store, branches=(0, 0, 0)).check_reduction_match()
    assert outcome.verdict
    assert "skipped" in outcome.witness


def test_memo_builds_each_stage_once():
    calls = []
    barrier = threading.Barrier(4)

    class Counting(Pipeline):
        example = "counting"

        def value(self):
            barrier.wait()
            return self.memo("value", lambda: calls.append(1) or len(calls))

    pipeline = Counting()
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda _: pipeline.value(), range(4)))
    assert results == [1, 1, 1, 1]
    assert calls == [1]


# runner


def _fake(name, run):
    return CheckSpec(name, "demo", f"anchor {name}", run)


def _raise():
    raise ArithmeticError("no answer")


def test_exceptions_become_failed_records(asset_store):
    record = run_check(_fake("broken", _raise), {}, asset_store)
    assert not record.verdict
    assert record.witness == {"error_type": "ArithmeticError"}
    assert record.error == "no answer"
    assert record.inputs_digest


def test_non_outcomes_are_rejected(asset_store):
    record = run_check(_fake("odd", lambda: True), {}, asset_store)
    assert not record.verdict
    assert record.witness["error_type"] == "TypeError"


async def test_run_checks_keeps_order(asset_store):
    specs = [
        _fake("first", lambda: CheckOutcome(verdict=True, witness={"n": 1})),
        _fake("second", _raise),
        _fake("third", lambda: CheckOutcome(verdict=True)),
    ]
    report = await run_checks(specs, {"prime": 30047}, asset_store, max_workers=2)
    assert [c.name for c in report.checks] == ["first", "second", "third"]
    assert [c.verdict for c in report.checks] == [True, False, True]
    assert report.config == {"prime": 30047}
    assert not report.passed


async def test_digest_depends_on_config(asset_store):
    spec = _fake("first", lambda: CheckOutcome(verdict=True))
    a = await run_checks([spec], {"prime": 30047}, asset_store)
    b = await run_checks([spec], {"prime": 30059}, asset_store)
    assert a.checks[0].inputs_digest != b.checks[0].inputs_digest
