import logging
from fractions import Fraction

import pytest

import cbdt
from cbdt.common import CaseMemoryError, DecisionError
from cbdt.featurespace import Feature
from cbdt.memory import Case
from cbdt.report import query_from_document, scenario_from_document


def test_api_defaults(api):
    assert api.lattice_cap == 10000
    assert api.exhaustive_limit == 1000
    assert api.outcome_range == (0, 10)
    assert api.logger.name == "cbdt"


def test_api_user_logger():
    logger = logging.getLogger("engine-under-test")
    assert cbdt.api(logger=logger).logger is logger


def test_api_outcome_range():
    try:
        cbdt.api(outcome_range=(10, 0))
        pytest.fail("inverted outcome range was accepted")
    except CaseMemoryError as e:
        assert e.rule == "outcome-range"


def test_answer_plain_query(api, phones, utils):
    document = api.query().deserialize(
        utils.read_fixture("phones_query.yaml")
    )
    evolved, report = api.answer(phones, document)
    assert evolved is phones
    assert report.chosen == "not-buy"


def test_answer_novel_value(api, early_phones, utils):
    document = api.query().deserialize(
        utils.read_fixture("new_price_query.yaml")
    )
    evolved, report = api.answer(early_phones, document)
    assert evolved.space.feature("f1").values == ("5", "5.5", "7")
    assert report.scores["not-buy"] == Fraction(20, 3)


def test_answer_restricted(api, camera_phones, utils):
    document = api.query().deserialize(
        utils.read_fixture("restricted_query.yaml")
    )
    _, report = api.answer(camera_phones, document)
    assert report.chosen == "buy"
    assert len(report.restricted_history) == 1


def test_query_needs_subspace_and_delta(api):
    document = api.query()
    document.problem = {"f1": "7", "f2": "16"}
    document.delta = 0.5
    with pytest.raises(DecisionError):
        query_from_document(document)


def test_query_utility(api, phones, p):
    document = api.query()
    document.problem = {"f1": "7", "f2": "16"}
    document.utility.affine.scale = 2
    document.utility.affine.shift = 0
    _, report = api.answer(phones, document)
    assert report.scores == {"buy": Fraction(8), "not-buy": Fraction(40, 3)}


def test_extend_value_and_feature(api, early_phones):
    extended = api.extend_value(early_phones, "f1", "4", position=0)
    assert extended.history()[0]["f1"] == "5"
    assert extended.space.rank_of("f1", "5") == 1
    extended = api.extend_feature(extended, Feature("f3", ["none", "9"]))
    assert extended.history()[0]["f3"] == "none"
    assert len(early_phones.space) == 2


def test_matrix_power_distance(api, phones, p):
    distance = api.matrix_power_distance(
        phones.space, p("5", "16"), p("7", "32")
    )
    assert distance == 3


def test_learn_rates(api, phones, early_phones, p):
    grown = phones.add_case(Case(p("7", "16"), "buy", 3))
    model = api.learn_rates(early_phones, grown)
    assert model.rate_for("f1") == 1
    assert model.observations == 1


def test_evaluate_wait_with_scenario(api, camera_phones, utils):
    document = api.scenario().deserialize(
        utils.read_fixture("wait_scenario.yaml")
    )
    scenario, rates, u = scenario_from_document(document)
    assert u is None
    assert rates.rate_for("f2") == Fraction(1, 2)
    valuation = api.evaluate_wait(camera_phones, scenario, u, rates)
    assert valuation.recommendation == "act_now"
    assert valuation.act_now_value == Fraction(7, 2)


def test_verify(api, phones):
    results = api.verify(phones, sample_count=20, seed=1)
    assert [r.check_name for r in results][0] == "metric"
    assert all(r.passed or r.expected_failure for r in results)
