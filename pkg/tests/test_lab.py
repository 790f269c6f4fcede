"""
Tests for `lcc.lab`: configuration, exhaustive enumeration, the property
suites and their sharded runner.
"""

from __future__ import annotations

import json
from collections import Counter

import pytest

from lcc.lab import (
    SUITES,
    EnumConfig,
    Failure,
    InstanceResult,
    LabConfig,
    LabConfigError,
    SuiteReport,
    Verdict,
    load_lab_config,
    override,
    parse_lab_yaml,
    replay,
    reports_to_json,
    run_suite,
    run_suites,
    suite_confluence,
    suite_typed_soundness,
)
from lcc.lab.enumerate import count_terms, enumerate_closed_terms, enumerate_terms
from lcc.lab.runner import UnknownSuiteError
from lcc.lab.suites import (
    check_commutation_simulation,
    check_confluence,
    check_round_trip,
    mirrors_type,
)
from lcc.parsing import parse_term, parse_type
from lcc.reduction import FULL, LB, is_defined
from lcc.syntax import Constr, Var, alpha_key, free_vars, term_size

SMALL = LabConfig(size=3)


# ---------- configuration ----------


class TestLabConfig:
    def test_defaults(self) -> None:
        cfg = parse_lab_yaml("")
        assert cfg == LabConfig()
        assert cfg.size == 6
        assert cfg.rule_set.label == "lcminus"
        assert cfg.budget.max_nodes == 500

    def test_values(self) -> None:
        cfg = parse_lab_yaml("size: 4\nconstructors: [C, D]\nworkers: 2\nconfluence_rules: full\n")
        assert cfg.size == 4
        assert cfg.enum_config().constructors == ("C", "D")
        assert cfg.rule_set is FULL

    def test_unknown_key_rejected(self) -> None:
        with pytest.raises(LabConfigError, match="sise"):
            parse_lab_yaml("sise: 4\n")

    @pytest.mark.parametrize(
        "text",
        [
            "- 1\n- 2\n",
            "size: [\n",
            "size: 0\n",
            "constructors: [c]\n",
            "constructors: [C, C]\n",
            "variables: [x0]\n",
            "confluence_rules: bogus\n",
        ],
    )
    def test_invalid(self, text: str) -> None:
        with pytest.raises(LabConfigError):
            parse_lab_yaml(text)

    def test_error_names_file(self) -> None:
        with pytest.raises(LabConfigError, match="Invalid mylab.yaml"):
            parse_lab_yaml("size: -1\n", "mylab.yaml")

    def test_load(self, tmp_path) -> None:
        path = tmp_path / "lab.yaml"
        path.write_text("size: 2\n", encoding="utf-8")
        assert load_lab_config(path).size == 2

    def test_override(self) -> None:
        assert override(SMALL, {}) is SMALL
        assert override(SMALL, {"workers": 3}).workers == 3
        with pytest.raises(LabConfigError, match="command line"):
            override(SMALL, {"size": 0})


# ---------- enumeration ----------


class TestEnumeration:
    def test_smallest_sizes(self) -> None:
        # size 1: C, !   size 2: \x0. {x0, C, !}  and  {| |}. {C, !}
        assert count_terms(EnumConfig(max_size=2)) == {1: 2, 2: 5}

    @pytest.mark.parametrize(
        "cfg",
        [
            EnumConfig(max_size=5),
            EnumConfig(max_size=4, constructors=("C", "D")),
            EnumConfig(max_size=4, allow_daimon=False, closed_only=False),
        ],
    )
    def test_count_matches_enumeration(self, cfg: EnumConfig) -> None:
        sizes = Counter(term_size(t) for t in enumerate_terms(cfg))
        assert dict(sizes) == count_terms(cfg)

    def test_no_alpha_duplicates(self) -> None:
        found = list(enumerate_terms(EnumConfig(max_size=5, closed_only=False)))
        assert len({alpha_key(t) for t in found}) == len(found)

    def test_smallest_first(self) -> None:
        found = [term_size(t) for t in enumerate_terms(EnumConfig(max_size=4))]
        assert found == sorted(found)

    def test_closed(self) -> None:
        cfg = EnumConfig(max_size=4, closed_only=False)
        assert all(not free_vars(t) for t in enumerate_closed_terms(cfg))
        assert Var("y") in set(enumerate_terms(cfg))

    def test_defined_only(self) -> None:
        cfg = EnumConfig(max_size=4, defined_only=True)
        found = list(enumerate_terms(cfg))
        assert found
        assert all(is_defined(t) for t in found)


# ---------- reports ----------


class TestReports:
    def test_record(self) -> None:
        report = SuiteReport("demo")
        report.record(0, "C", InstanceResult.passed())
        report.record(1, "!", InstanceResult.excluded())
        report.record(2, "D", InstanceResult.skipped("budget"))
        report.record(3, "E", InstanceResult.failed("broken"))
        assert (report.checked, report.skipped) == (2, 1)
        assert report.failures == [Failure(3, "E", "broken")]
        assert not report.ok
        assert report.summary().splitlines() == [
            "demo: FAILED (2 checked, 1 failed, 1 skipped)",
            "  #3 E: broken",
        ]

    def test_merge_orders_failures(self) -> None:
        a = SuiteReport("demo", 2, 0, [Failure(4, "t", "x")])
        b = SuiteReport("demo", 1, 1, [Failure(1, "u", "y")])
        merged = a.merge(b)
        assert [f.index for f in merged.failures] == [1, 4]
        assert (merged.checked, merged.skipped) == (3, 1)

    def test_json(self) -> None:
        data = json.loads(reports_to_json([SuiteReport("demo", 3)]))
        assert data == {
            "suites": [{"suite": "demo", "checked": 3, "skipped": 0, "failed": 0, "failures": []}]
        }


# ---------- suites ----------


class TestSuites:
    @pytest.mark.parametrize("name", list(SUITES))
    def test_no_failures_at_small_size(self, name: str) -> None:
        report = run_suite(name, SMALL)
        assert report.ok, report.summary()
        assert report.checked > 0

    def test_run_suites_defaults_to_all(self) -> None:
        reports = run_suites(["round-trip"], SMALL)
        assert [r.suite for r in reports] == ["round-trip"]
        assert [r.suite for r in run_suites([], LabConfig(size=1))] == list(SUITES)

    def test_sharded_run_matches_serial(self) -> None:
        serial = run_suite("confluence", SMALL)
        sharded = run_suite("confluence", override(SMALL, {"workers": 2}))
        assert sharded.to_dict() == serial.to_dict()

    def test_unknown_suite(self) -> None:
        with pytest.raises(UnknownSuiteError):
            run_suite("nope", SMALL)

    def test_replay(self) -> None:
        shown, result = replay("round-trip", SMALL, 0)
        assert shown == "C"
        assert result.verdict is Verdict.PASSED
        with pytest.raises(IndexError, match="has no instance #100000"):
            replay("round-trip", SMALL, 100_000)

    def test_confluence_rules_override(self) -> None:
        assert suite_confluence(SMALL, LB).ok

    def test_case_case_reaches_the_same_normal_form(self) -> None:
        t = parse_term("{| C -> ! |}. {| C -> C ; D -> D |}. C")
        assert check_confluence(t, SMALL, FULL).verdict is Verdict.PASSED

    @pytest.mark.parametrize("text", [r"{| |}. \x. !", "{| C -> C |}. (! C)"])
    def test_daimon_step_under_a_case_is_simulated(self, text: str) -> None:
        result = check_commutation_simulation(parse_term(text), SMALL)
        assert result.verdict is Verdict.PASSED, result.reason

    def test_round_trip_check(self) -> None:
        assert check_round_trip(parse_term(r"\x. {| C -> x |}. x"), SMALL).verdict is (
            Verdict.PASSED
        )

    def test_mirrors_type(self) -> None:
        assert mirrors_type(parse_term("S (S Zero)"), parse_type("S (S Zero)"))
        assert not mirrors_type(parse_term("S Zero"), parse_type("S (S Zero)"))
        assert not mirrors_type(Constr("C"), parse_type("C | D"))

    def test_typed_soundness_over_a_custom_corpus(self, tmp_path) -> None:
        (tmp_path / "constr.lcd").write_text('(Constr "|- C : C")\n', encoding="utf-8")
        (tmp_path / "wrong.lcd").write_text('(Constr "|- C : D")\n', encoding="utf-8")
        report = suite_typed_soundness(SMALL, tmp_path)
        assert report.checked == 2
        assert [f.subject for f in report.failures] == ["wrong.lcd"]
        assert report.failures[0].violated.startswith("derivation rejected: rejected at root")


# ---------- default size ----------


@pytest.mark.slow
def test_every_suite_passes_at_the_default_size() -> None:
    reports = run_suites([], LabConfig())
    for report in reports:
        assert report.ok, report.summary()
        assert report.checked > 0, report.summary()
    simulation = next(r for r in reports if r.suite == "commutation-simulation")
    assert simulation.skipped < 0.01 * simulation.checked, simulation.summary()
