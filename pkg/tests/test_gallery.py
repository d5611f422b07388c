import json

import pytest

from scottkit.errors import InvalidArgument
from scottkit.gallery import SCENARIOS, VerificationReport, run_scenario

FAST = {"col_max": 8, "seq_weight_max": 4, "pairs": 300, "chains": 40, "open_pairs": 40,
        "samples": 60, "triples": 60, "bound": 6, "depth": 4, "max_size": 4}


@pytest.mark.parametrize("name", sorted(SCENARIOS))
def test_scenario_passes_at_small_bounds(name):
    rep = run_scenario(name, FAST, seed=3)
    assert rep.passed, rep.to_json()


def test_unknown_scenario():
    with pytest.raises(InvalidArgument):
        run_scenario("nonexistent")


def test_bad_parameter():
    with pytest.raises(InvalidArgument):
        run_scenario("jia-example", {"depth": 0})


def test_report_round_trip():
    rep = run_scenario("product-omega")
    back = VerificationReport.from_dict(json.loads(rep.to_json()))
    assert back.to_json() == rep.to_json()
    with pytest.raises(InvalidArgument):
        VerificationReport.from_dict({"schema": 2})


def test_deterministic():
    a = run_scenario("distributivity-F", FAST, seed=11).to_json(elapsed=False)
    b = run_scenario("distributivity-F", FAST, seed=11).to_json(elapsed=False)
    assert a == b


def test_finite_sober_counts():
    rep = run_scenario("finite-sober", {"max_size": 5})
    assert rep.checks[0].details["posets"] == 1 + 1 + 2 + 5 + 16 + 63
