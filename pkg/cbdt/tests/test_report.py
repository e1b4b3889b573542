from fractions import Fraction

import pytest
import yaml

from cbdt import report
from cbdt.decision import decide, decide_restricted
from cbdt.featurespace import Feature, SubspaceSelector
from cbdt.learning import SINGLE, RateModel, WaitScenario, evaluate_wait
from cbdt.similarity import pairwise_similarity
from cbdt.verifier import check_similarity_triangle


@pytest.mark.parametrize(
    "value, expected",
    [
        (Fraction(20, 3), "20/3"),
        (Fraction(4), "4"),
        (Fraction(1, 1000), "0.001000"),
        (0.012245642825298191, "0.0122456"),
        (2, "2"),
    ],
)
def test_format_number(value, expected):
    assert report.format_number(value) == expected


def test_render_decision(phones, p):
    decision = decide(phones, p("7", "16"))
    text = report.render_decision(decision, phones.space)
    assert "diameter 3" in text
    assert "20/3" in text
    assert "0.333333" in text
    assert text.splitlines()[-1] == "chosen not-buy"


def test_render_restricted_decision(camera_phones, p):
    selector = SubspaceSelector(["f1", "f2"])
    decision = decide_restricted(
        camera_phones, p("7", "32", "9"), None, selector, 1
    )
    text = report.render_decision(decision, camera_phones.space)
    assert "subspace f1, f2 delta 1" in text
    assert "kept" in text
    assert "entire history used" in text


def test_decision_document(phones, p):
    document = report.decision_to_document(
        decide(phones, p("7", "16")), phones.space
    )
    encoded = yaml.safe_load(document.serialize("yaml"))
    assert encoded["chosen"] == "not-buy"
    assert encoded["diameter"] == 3
    assert encoded["scores"][1]["score"] == "20/3"
    assert encoded["similarities"][1]["similarity"] == "2/3"
    assert encoded["similarities"][1]["problem"] == {"f1": "5.5", "f2": "16"}



def test_lottery_document(camera_phones, p):
    scenario = WaitScenario(
        now=0,
        wait_until=2,
        discount=2,
        anticipated_problem=p("7", "64", "10", "yes"),
        query=p("7", "32", "9"),
        new_values=[("f2", "64"), ("f3", "10")],
        new_features=[Feature("f4", ["none", "yes"])],
        mode=SINGLE,
        action="buy",
    )
    valuation = evaluate_wait(camera_phones, None, scenario, probability=1)
    document = report.lottery_to_document(valuation)
    encoded = yaml.safe_load(document.serialize())
    assert encoded["recommendation"] == "wait"
    assert encoded["wait_value"] == 4
    assert encoded["threshold_discount"] == 1.75
    assert encoded["hypothetical_diameter"] == 7
    assert len(encoded["similarities"]) == 4
    for entry in encoded["similarities"]:
        assert sorted(entry["problem"]) == ["f1", "f2", "f3", "f4"]

def test_rates_round_trip():
    model = RateModel(
        {"f1": "1/3"},
        lambda_features="1/20",
        batch_size=2,
        observations=3,
        pending_values={"f1": 1},
        pending_problems=1,
    )
    assert report.rates_from_document(report.rates_to_document(model)) == model


def test_similarity_dump(early_phones, p):
    space = early_phones.space
    distances = pairwise_similarity(space, early_phones, p("5", "16"))
    text = report.render_similarity(distances, early_phones.space)
    assert text.splitlines()[0] == "diameter 2"
    assert "to query" in text
    document = report.similarity_to_document(
        distances, early_phones.space, p("5", "16")
    )
    encoded = document.serialize("dict")
    assert len(encoded["pairs"]) == 6
    assert encoded["to_query"][0]["similarity"] == 1


def test_render_checks(phones):
    results = [check_similarity_triangle(phones.space, sample_count=20)]
    text = report.render_checks(results, phones.space)
    assert "expected failure" in text
    assert "violated" in text
    document = report.checks_to_document(results, 0, phones.space)
    assert document.checks[0].expected_failure is True
    assert document.checks[0].passed is False
