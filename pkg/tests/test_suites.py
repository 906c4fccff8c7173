"""Tests for the suite configuration and report plumbing (the claims
themselves are exercised by the acceptance gate)."""
from __future__ import annotations

import json

import pytest

from polyadjoint.errors import PreconditionError
from polyadjoint.suites import (
    SuiteConfig,
    claim_inverse_identity,
    report_to_json,
    run_all,
)


def test_config_validation():
    with pytest.raises(PreconditionError):
        SuiteConfig(field="f32")
    with pytest.raises(PreconditionError):
        SuiteConfig(dims=())
    with pytest.raises(PreconditionError):
        SuiteConfig(trials=0)
    with pytest.raises(PreconditionError):
        SuiteConfig(tol=-1.0)


def test_claim_result_obj_is_json_ready():
    cfg = SuiteConfig(seed=1, trials=2, dims=(2,))
    res = claim_inverse_identity(cfg)
    obj = res.to_obj()
    json.dumps(obj)
    assert obj["name"] == "inverse_identity"
    assert obj["field"] == "rational"
    assert obj["passed"] is True
    assert obj["max_defect"] == "0/1"


def test_run_all_report_shape_and_determinism():
    cfg = SuiteConfig(seed=11, trials=2, field="rational")
    rep1 = run_all(cfg)
    rep2 = run_all(cfg)
    assert report_to_json(rep1) == report_to_json(rep2)
    assert rep1["schema"] == 1
    assert rep1["config"]["seed"] == 11
    assert len(rep1["claims"]) == 11
    assert rep1["passed"] is True
    assert "wall" not in report_to_json(rep1)


def test_field_filter_selects_suites():
    cfg = SuiteConfig(seed=11, trials=1, field="rational")
    names = {c["name"] for c in run_all(cfg)["claims"]}
    assert "norm_duality" not in names
    assert "composition_identity" in names
