"""Exhaustive property lab: term enumeration, suites and the runner."""

from lcc.lab.config import (
    EnumConfig,
    LabConfig,
    LabConfigError,
    load_lab_config,
    override,
    parse_lab_yaml,
)
from lcc.lab.enumerate import count_terms, enumerate_closed_terms, enumerate_terms
from lcc.lab.models import Failure, InstanceResult, SuiteReport, Verdict, reports_to_json
from lcc.lab.runner import (
    UnknownSuiteError,
    get_suite,
    replay,
    run_suite,
    run_suites,
    suite_com_normalization,
    suite_commutation_simulation,
    suite_confluence,
    suite_normal_form_shape,
    suite_principal_reduct,
    suite_round_trip,
    suite_substitution_pn,
    suite_typed_soundness,
)
from lcc.lab.suites import SUITES, Suite

__all__ = [
    "EnumConfig",
    "Failure",
    "InstanceResult",
    "LabConfig",
    "LabConfigError",
    "SUITES",
    "Suite",
    "SuiteReport",
    "UnknownSuiteError",
    "Verdict",
    "count_terms",
    "enumerate_closed_terms",
    "enumerate_terms",
    "get_suite",
    "load_lab_config",
    "override",
    "parse_lab_yaml",
    "replay",
    "reports_to_json",
    "run_suite",
    "run_suites",
    "suite_com_normalization",
    "suite_commutation_simulation",
    "suite_confluence",
    "suite_normal_form_shape",
    "suite_principal_reduct",
    "suite_round_trip",
    "suite_substitution_pn",
    "suite_typed_soundness",
]
