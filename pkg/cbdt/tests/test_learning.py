import math
from fractions import Fraction

import pytest

from cbdt.common import LearningError
from cbdt.featurespace import Feature, FeatureSpace
from cbdt.learning import (
    ACT_NOW,
    COMPOUND,
    SINGLE,
    WAIT,
    RateModel,
    WaitScenario,
    estimate_rates,
    evaluate_wait,
    event_probability,
    learn_rates,
    memory_stream,
    poisson_pmf,
)
from cbdt.memory import Case, Memory


@pytest.mark.parametrize(
    "k, lam, expected",
    [
        (1, 0.1, 0.1 * math.exp(-0.1)),
        (1, 1, math.exp(-1)),
        (0, 2, math.exp(-2)),
        (0, 0, 1.0),
        (3, 0, 0.0),
    ],
)
def test_poisson_pmf(k, lam, expected):
    assert abs(poisson_pmf(k, lam) - expected) < 1e-12


@pytest.mark.parametrize("k, lam", [(-1, 1), (1.5, 1), (True, 1), (1, -0.5)])
def test_poisson_pmf_errors(k, lam):
    with pytest.raises(LearningError):
        poisson_pmf(k, lam)


def test_rate_model():
    model = RateModel({"f2": "1/2", "f3": 0.25}, lambda_features="1/20")
    assert model.rate_for("f2") == Fraction(1, 2)
    assert model.pooled_rate == Fraction(3, 8)
    assert model.rate_for("f1") == Fraction(3, 8)
    assert model.with_default(0).rate_for("f1") == 0
    assert RateModel.initial().pooled_rate == 0
    try:
        RateModel.initial().rate_for("f1")
        pytest.fail("rate of a feature with nothing to pool")
    except LearningError as e:
        assert "f1" in str(e)
    for kwargs in [{"batch_size": 0}, {"lambda_features": -1}]:
        with pytest.raises(LearningError):
            RateModel(**kwargs)


def _extended(phones, p):
    return phones.add_case(Case(p("7", "16"), "buy", 3))


def test_estimate_rates_new_value(phones, early_phones, p):
    model = estimate_rates(
        RateModel.initial(), early_phones, _extended(phones, p)
    )
    assert model.lambda_values == {"f1": Fraction(1), "f2": Fraction(0)}
    assert model.lambda_features == 0
    assert model.observations == 1


def test_estimate_rates_waits_for_batch(phones, early_phones, p):
    model = estimate_rates(
        RateModel.initial(batch_size=2), early_phones, _extended(phones, p)
    )
    assert model.lambda_values == {}
    assert model.pending_values == {"f1": 1}
    assert model.pending_problems == 1


def test_estimate_rates_needs_a_prefix(phones, early_phones, p):
    with pytest.raises(LearningError):
        estimate_rates(RateModel.initial(), early_phones, early_phones)
    other = Memory(
        phones.space, phones.actions, [Case(p("7", "32"), "buy", 1)]
    )
    try:
        estimate_rates(RateModel.initial(), early_phones, other)
        pytest.fail("unrelated memories were compared")
    except LearningError as e:
        assert "prefix" in str(e) or "more cases" in str(e)


def test_memory_stream_replays_arrivals(phones):
    empty = Memory(FeatureSpace(), phones.actions)
    stream = memory_stream(empty, phones)
    assert len(stream) == 5
    assert stream[0] is empty
    assert stream[1].space.ids == ("f1", "f2")
    assert stream[1].space.feature("f1").values == ("5",)
    assert stream[2].space.feature("f1").values == ("5", "5.5")
    assert stream[3].space.ids == ("f1", "f2")
    assert stream[4].history() == [c.problem for c in phones.cases]
    model = learn_rates(stream, batch_size=4)
    assert model.lambda_features == Fraction(1, 2)
    quarter = Fraction(1, 4)
    assert model.lambda_values == {"f1": quarter, "f2": quarter}
    assert model.observations == 4


def _scenario(p, **kwargs):
    arguments = dict(
        now=0,
        wait_until=2,
        discount=1,
        anticipated_problem=p("7", "64", "10", "yes"),
        query=p("7", "32", "9"),
        new_values=[("f2", "64", None), ("f3", "10", None)],
        new_features=[Feature("f4", ["none", "yes"])],
        mode=SINGLE,
        action="buy",
    )
    arguments.update(kwargs)
    return WaitScenario(**arguments)


def test_scenario_counts(p):
    scenario = _scenario(p, new_values=[("f2", "64"), ("f4", "maybe")])
    assert scenario.anticipated_values == {"f2": 1}
    assert scenario.anticipated_features == 1
    assert scenario.horizon == 2
    assert _scenario(p, discount="1/2").factor() == Fraction(1, 2)
    assert _scenario(p, discount="1/2", mode=COMPOUND).factor() == Fraction(
        1, 4
    )


@pytest.mark.parametrize(
    "kwargs",
    [
        {"wait_until": -1},
        {"now": 3},
        {"discount": 0},
        {"discount": "x"},
        {"mode": "hyperbolic"},
    ],
)
def test_scenario_errors(p, kwargs):
    with pytest.raises(LearningError):
        _scenario(p, **kwargs)


def test_event_probability(p):
    rates = RateModel({"f2": "1/2", "f3": "1/2"}, lambda_features="1/20")
    probability = event_probability(rates, _scenario(p))
    assert abs(probability - 0.1 * math.exp(-2.1)) < 1e-12
    with pytest.raises(LearningError):
        event_probability(rates, _scenario(p, wait_until=0))


def test_evaluate_wait(camera_phones, p):
    rates = RateModel({"f2": "1/2", "f3": "1/2"}, lambda_features="1/20")
    valuation = evaluate_wait(camera_phones, None, _scenario(p), rates=rates)
    assert valuation.act_now_value == Fraction(7, 2)
    assert valuation.future_value == Fraction(2)
    assert valuation.future_report.similarity.diameter_used == 7
    assert [s for _, _, s in valuation.future_report.similarity.rows()] == [
        Fraction(0),
        Fraction(1, 7),
        Fraction(1, 7),
        Fraction(2, 7),
    ]
    assert abs(valuation.event_probability - 0.012246) < 1e-6
    assert valuation.recommendation == ACT_NOW
    assert valuation.action_now == valuation.action_later == "buy"
    assert len(camera_phones.space) == 3


def test_evaluate_wait_threshold(camera_phones, p):
    probability = Fraction(1) / (10 * Fraction(math.exp(12)))
    valuation = evaluate_wait(
        camera_phones, None, _scenario(p), probability=probability
    )
    threshold = 17.5 * math.exp(12)
    assert abs(valuation.threshold_discount / threshold - 1) < 1e-9
    assert valuation.recommendation == ACT_NOW


def test_evaluate_wait_recommends_waiting(camera_phones, p):
    valuation = evaluate_wait(
        camera_phones, None, _scenario(p, discount=2), probability=1
    )
    assert valuation.wait_value == 4
    assert valuation.recommendation == WAIT


def test_evaluate_wait_errors(camera_phones, p):
    with pytest.raises(LearningError):
        evaluate_wait(camera_phones, None, _scenario(p))
    with pytest.raises(LearningError):
        evaluate_wait(camera_phones, None, _scenario(p), probability=2)
    with pytest.raises(LearningError):
        scenario = _scenario(p, action="sell")
        evaluate_wait(camera_phones, None, scenario, probability=1)
    unplaceable = _scenario(p, new_values=[("f2", "64")])
    with pytest.raises(LearningError):
        evaluate_wait(camera_phones, None, unplaceable, probability=1)


def test_first_problem_brings_absent_features(phones):
    empty = Memory(FeatureSpace(), phones.actions)
    first = Memory(phones.space, phones.actions, phones.cases[:1])
    model = estimate_rates(RateModel.initial(), empty, first)
    assert model.lambda_features == 2
    assert model.lambda_values == {"f1": 0, "f2": 0}
    stepped = learn_rates(memory_stream(empty, first))
    assert stepped == model


@pytest.mark.parametrize("lam", [0, 0.1, 0.5, 1, 2.5, 5, 7.5, 10])
def test_poisson_pmf_sums_to_one(lam):
    total = sum(poisson_pmf(k, lam) for k in range(51))
    assert abs(total - 1) < 1e-12


def test_event_probability_pools_missing_rates(p):
    rates = RateModel({"f2": "1/2"}, lambda_features="1/20")
    probability = event_probability(rates, _scenario(p))
    assert abs(probability - 0.1 * math.exp(-2.1)) < 1e-12


def test_event_probability_grows_with_the_horizon(p):
    rates = RateModel({"f2": "1/10"})
    probabilities = [
        event_probability(
            rates,
            _scenario(
                p,
                wait_until=n,
                anticipated_problem=p("7", "64", "9"),
                new_values=[("f2", "64")],
                new_features=[],
            ),
        )
        for n in range(1, 10)
    ]
    assert all(a < b for a, b in zip(probabilities, probabilities[1:]))
    assert abs(probabilities[0] - 0.1 * math.exp(-0.1)) < 1e-12


@pytest.mark.parametrize("mode", [SINGLE, COMPOUND])
def test_wait_value_grows_with_the_discount(camera_phones, p, mode):
    values = [
        evaluate_wait(
            camera_phones,
            None,
            _scenario(p, discount=kappa, mode=mode),
            probability=Fraction(1, 20),
        ).wait_value
        for kappa in ["1/2", 1, 2, 35, 100]
    ]
    assert all(a < b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize(
    "mode, expected", [(SINGLE, 35.0), (COMPOUND, math.sqrt(35))]
)
def test_threshold_discount_balances_the_lottery(
    camera_phones, p, mode, expected
):
    probability = Fraction(1, 20)
    valuation = evaluate_wait(
        camera_phones, None, _scenario(p, mode=mode), probability=probability
    )
    threshold = valuation.threshold_discount
    assert abs(threshold / expected - 1) < 1e-9
    balanced = evaluate_wait(
        camera_phones,
        None,
        _scenario(p, mode=mode, discount=threshold),
        probability=probability,
    )
    relative = (balanced.wait_value - balanced.act_now_value) / 7 * 2
    assert abs(relative) < 1e-9
