"""
Lab configuration.

`LabConfig` mirrors the optional `lab.yaml` a user may pass to `lcc lab
--config`; unknown keys are rejected so typos surface as errors. The
enumeration and graph settings are turned into the plain `EnumConfig` and
`GraphBudget` values the suites run on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

import yaml  # type: ignore[import-untyped]
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from lcc.reduction import GraphBudget, RuleSet

_CONSTRUCTOR = re.compile(r"^[A-Z][A-Za-z0-9_']*$")
_VARIABLE = re.compile(r"^[a-z_][A-Za-z0-9_']*$")
# names the enumerator gives to its own binders
BINDER_PREFIX = "x"
_BINDER = re.compile(rf"^{BINDER_PREFIX}[0-9]+$")


@dataclass(frozen=True)
class EnumConfig:
    max_size: int = 6
    constructors: tuple[str, ...] = ("C",)
    variables: tuple[str, ...] = ("y",)
    allow_daimon: bool = True
    closed_only: bool = True
    defined_only: bool = False


class LabConfigError(ValueError):
    """Raised when a lab configuration fails validation."""


class _StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class LabConfig(_StrictModel):
    """Validated `lab.yaml` contents; every field has a desk-scale default."""

    size: int = Field(default=6, ge=1)
    constructors: list[str] = Field(default_factory=lambda: ["C"], min_length=1)
    variables: list[str] = Field(default_factory=lambda: ["y"], min_length=1)
    allow_daimon: bool = True
    max_nodes: int = Field(default=500, ge=1)
    max_depth: int = Field(default=60, ge=1)
    simulation_depth: int = Field(default=30, ge=1)
    workers: int = Field(default=1, ge=1)
    confluence_rules: str = "lcminus"
    # directory of positive derivation scripts; None means the bundled corpus
    corpus: Optional[str] = None

    @field_validator("constructors")
    @classmethod
    def _constructor_names(cls, names: list[str]) -> list[str]:
        for name in names:
            if not _CONSTRUCTOR.match(name):
                raise ValueError(f"constructor names start with an uppercase letter: {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("constructor names must be distinct")
        return names

    @field_validator("confluence_rules")
    @classmethod
    def _rule_set(cls, text: str) -> str:
        RuleSet.parse(text)
        return text

    @field_validator("variables")
    @classmethod
    def _variable_names(cls, names: list[str]) -> list[str]:
        for name in names:
            if not _VARIABLE.match(name):
                raise ValueError(f"variable names start with a lowercase letter: {name!r}")
            if _BINDER.match(name):
                raise ValueError(f"{name!r} is reserved for enumerated binders")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        return names

    def enum_config(self, closed_only: bool = True, defined_only: bool = False) -> EnumConfig:
        return EnumConfig(
            max_size=self.size,
            constructors=tuple(self.constructors),
            variables=tuple(self.variables),
            allow_daimon=self.allow_daimon,
            closed_only=closed_only,
            defined_only=defined_only,
        )

    @property
    def rule_set(self) -> RuleSet:
        return RuleSet.parse(self.confluence_rules)

    @property
    def budget(self) -> GraphBudget:
        return GraphBudget(self.max_nodes, self.max_depth)

    @property
    def simulation_budget(self) -> GraphBudget:
        return GraphBudget(self.max_nodes, self.simulation_depth)


def _format_error(filename: str, exc: ValidationError) -> str:
    lines = [f"Invalid {filename}:"]
    for err in exc.errors():
        loc = ".".join(str(p) for p in err["loc"]) or "<root>"
        lines.append(f"  - {loc}: {err['msg']}")
    return "\n".join(lines)


def parse_lab_yaml(text: str, filename: str = "lab.yaml") -> LabConfig:
    """
    Parse and validate a lab configuration document.

    Raises:
        LabConfigError: If the YAML is malformed or fails validation.
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise LabConfigError(f"Invalid {filename}: {e}") from e
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise LabConfigError(f"Invalid {filename}: top-level must be a mapping")
    try:
        return LabConfig.model_validate(data)
    except ValidationError as e:
        raise LabConfigError(_format_error(filename, e)) from e


def load_lab_config(path: Union[str, Path]) -> LabConfig:
    p = Path(path)
    return parse_lab_yaml(p.read_text(encoding="utf-8"), p.name)


def override(cfg: LabConfig, changes: dict[str, Any], origin: str = "command line") -> LabConfig:
    """`cfg` with `changes` applied, validated like a configuration file."""
    if not changes:
        return cfg
    try:
        return LabConfig.model_validate({**cfg.model_dump(), **changes})
    except ValidationError as e:
        raise LabConfigError(_format_error(origin, e)) from e
