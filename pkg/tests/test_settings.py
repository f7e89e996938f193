from pathlib import Path

import pytest
from pydantic import ValidationError

from configs.settings import RunConfig, Settings, load_settings


def test_defaults():
    settings = load_settings({})
    assert settings.prime == 30047
    assert settings.branches == (1, 0, 1)
    assert settings.op_prime == 10009
    assert settings.groebner_method == "buchberger"


def test_environment_overrides():
    settings = load_settings(
        {"GODEAUX_PRIME": "30059", "GODEAUX_BRANCHES": "0,0,1", "GODEAUX_REPORT_DIR": "/tmp/r", "GODEAUX_LOG_LEVEL": ""}
    )
    assert settings.prime == 30059
    assert settings.branches == (0, 0, 1)
    assert settings.report_dir == Path("/tmp/r")
    assert settings.log_level == "INFO"


@pytest.mark.parametrize(
    "variable, value",
    [
        ("GODEAUX_PRIME", "many"),
        ("GODEAUX_BRANCHES", "1,2,0"),
        ("GODEAUX_MAX_WORKERS", "0"),
        ("GODEAUX_GROEBNER_METHOD", "magic"),
    ],
)
def test_invalid_environment_names_the_variable(variable, value):
    with pytest.raises(ValueError, match=variable):
        load_settings({variable: value})


def test_run_config_resolution():
    settings = Settings()
    config = RunConfig(example="campedelli", checks=["torsion", "genus"])
    assert config.examples == ("campedelli",)
    resolved = config.resolved(settings)
    assert resolved["prime"] == 30047
    assert resolved["branches"] == [1, 0, 1]
    assert resolved["checks"] == ["genus", "torsion"]
    assert RunConfig().examples == ("campedelli", "oort-peters")


def test_run_config_overrides():
    resolved = RunConfig(prime=30059, branches=(0, 1, 1)).resolved(Settings())
    assert resolved["prime"] == 30059
    assert resolved["branches"] == [0, 1, 1]


@pytest.mark.parametrize("fields", [{"example": "bagnera"}, {"branches": (1, 1, 2)}, {"report": "yaml"}])
def test_run_config_rejects_bad_input(fields):
    with pytest.raises(ValidationError):
        RunConfig(**fields)
