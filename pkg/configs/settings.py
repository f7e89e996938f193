from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

import os
import logging
from pathlib import Path
from typing import Literal, Optional

# Customize the log format
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(funcName)s - %(message)s"

# Load environment variables
load_dotenv()

REPO_ROOT = Path(__file__).resolve().parent.parent


def configure_logging(level: str = "INFO"):
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=LOG_FORMAT,
        datefmt="%Y-%m-%d %H:%M:%S",
    )


def _branch_bits(value):
    if any(bit not in (0, 1) for bit in value):
        raise ValueError("Branch choices are bits")
    return value


class Settings(BaseModel):
    prime: int = 30047
    branches: tuple[int, int, int] = (1, 0, 1)
    op_prime: int = 10009
    asset_dir: Path = REPO_ROOT / "assets"
    report_dir: Path = Path("reports")
    log_level: str = "INFO"
    max_workers: int = 4
    prime_search_cap: int = 1_000_000
    groebner_method: str = "buchberger"
    noether_depth: int = 12

    @field_validator("branches")
    @classmethod
    def check_bits(cls, value):
        return _branch_bits(value)

    @field_validator("max_workers", "noether_depth")
    @classmethod
    def check_positive(cls, value):
        if value < 1:
            raise ValueError("must be at least 1")
        return value

    @field_validator("groebner_method")
    @classmethod
    def check_method(cls, value):
        if value not in ("buchberger", "f5b"):
            raise ValueError(f"Unknown Groebner method {value}")
        return value


# environment variable -> (field, parser)
_ENVIRONMENT = {
    "GODEAUX_PRIME": ("prime", int),
    "GODEAUX_BRANCHES": ("branches", lambda v: tuple(int(b) for b in v.split(","))),
    "GODEAUX_OP_PRIME": ("op_prime", int),
    "GODEAUX_ASSET_DIR": ("asset_dir", Path),
    "GODEAUX_REPORT_DIR": ("report_dir", Path),
    "GODEAUX_LOG_LEVEL": ("log_level", str),
    "GODEAUX_MAX_WORKERS": ("max_workers", int),
    "GODEAUX_PRIME_SEARCH_CAP": ("prime_search_cap", int),
    "GODEAUX_GROEBNER_METHOD": ("groebner_method", str),
    "GODEAUX_NOETHER_DEPTH": ("noether_depth", int),
}


def load_settings(environ: Optional[dict] = None) -> Settings:
    """Settings from GODEAUX_* variables; unset ones keep their defaults."""
    environ = os.environ if environ is None else environ
    values = {}
    for variable, (name, parse) in _ENVIRONMENT.items():
        raw = environ.get(variable)
        if raw is None or raw == "":
            continue
        try:
            values[name] = parse(raw)
        except ValueError:
            logging.error(f"{variable} has an invalid value: {raw!r}")
            raise ValueError(f"{variable} has an invalid value: {raw!r}")
    try:
        return Settings(**values)
    except ValidationError as e:
        field = e.errors()[0]["loc"][0]
        variable = next((v for v, (n, _) in _ENVIRONMENT.items() if n == field), "GODEAUX_*")
        raise ValueError(f"{variable} is invalid: {e.errors()[0]['msg']}") from e


class RunConfig(BaseModel):
    """One verify invocation; prime and branches fall back to Settings."""

    example: Literal["campedelli", "oort-peters", "both"] = "both"
    prime: Optional[int] = None
    branches: Optional[tuple[int, int, int]] = None
    checks: list[str] = Field(default_factory=list)
    report: Literal["text", "structured"] = "text"
    output: Optional[Path] = None

    @field_validator("branches")
    @classmethod
    def check_bits(cls, value):
        return None if value is None else _branch_bits(value)

    @property
    def examples(self) -> tuple[str, ...]:
        if self.example == "both":
            return ("campedelli", "oort-peters")
        return (self.example,)

    def resolved(self, settings: Settings) -> dict:
        """The settings the run actually uses, as recorded in the report."""
        return {
            "examples": list(self.examples),
            "prime": self.prime or settings.prime,
            "branches": list(self.branches or settings.branches),
            "op_prime": settings.op_prime,
            "checks": sorted(self.checks),
            "groebner_method": settings.groebner_method,
        }
