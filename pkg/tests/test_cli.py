"""The godeaux command line: exit codes, reports and asset commands."""

import json

import pytest

from main import EXIT_FAILED, EXIT_INPUT, EXIT_OK, main


@pytest.fixture(autouse=True)
def environment(monkeypatch, tmp_path):
    for variable in ("GODEAUX_PRIME", "GODEAUX_BRANCHES", "GODEAUX_ASSET_DIR", "GODEAUX_MAX_WORKERS"):
        monkeypatch.delenv(variable, raising=False)
    monkeypatch.setenv("GODEAUX_REPORT_DIR", str(tmp_path / "reports"))


def test_bad_prime_suggests_the_next_one(capsys):
    assert main(["verify", "--prime", "3", "--example", "campedelli"]) == EXIT_INPUT
    assert "next good prime" in capsys.readouterr().err


def test_unknown_check(capsys):
    assert main(["verify", "--check", "no-such-check"]) == EXIT_INPUT
    assert "no-such-check" in capsys.readouterr().err


def test_bad_branch_bits():
    assert main(["verify", "--branches", "1,2,0"]) == EXIT_INPUT


def test_unparsable_branch_bits():
    with pytest.raises(SystemExit):
        main(["verify", "--branches", "one"])


def test_invalid_environment(monkeypatch):
    monkeypatch.setenv("GODEAUX_PRIME", "many")
    assert main(["assets", "list"]) == EXIT_INPUT


def test_missing_assets(monkeypatch, tmp_path):
    monkeypatch.setenv("GODEAUX_ASSET_DIR", str(tmp_path / "empty"))
    assert main(["verify", "--check", "ring-embedding"]) == EXIT_INPUT


def test_structured_report(capsys, tmp_path):
    output = tmp_path / "out" / "report.json"
    code = main(
        [
            "verify",
            "--example", "campedelli",
            "--check", "ring-embedding",
            "--check", "condition-count",
            "--report", "structured",
            "--output", str(output),
        ]
    )
    assert code == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert [c["name"] for c in document["checks"]] == ["ring-embedding", "condition-count"]
    assert document["config"]["prime"] == 30047
    assert document["passed"] is True
    assert json.loads(output.read_text())["checks"][0]["witness"]["images"] == [20452, 6941, 27962]


def test_text_report(capsys):
    assert main(["verify", "--example", "oort-peters", "--check", "op-classes"]) == EXIT_OK
    assert "[PASS] oort-peters:op-classes" in capsys.readouterr().out


def test_failed_check_exits_one(monkeypatch, capsys):
    from services import verifier
    from storage.reports import CheckOutcome

    def failing(self):
        return CheckOutcome(verdict=False)

    monkeypatch.setattr(verifier.CampedelliPipeline, "check_ring_embedding", failing)
    assert main(["verify", "--example", "campedelli", "--check", "ring-embedding"]) == EXIT_FAILED
    assert "campedelli:ring-embedding failed" in capsys.readouterr().err


def test_assets_list(capsys):
    assert main(["assets", "list"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "campedelli_octic" in out and "op_lines" in out


def test_assets_validate(capsys):
    assert main(["assets", "validate"]) == EXIT_OK
    assert "❌" not in capsys.readouterr().out
