from fractions import Fraction

import pytest

from cbdt.common import DecisionError, DistanceError
from cbdt.featurespace import Feature, FeatureSpace
from cbdt.memory import Memory
from cbdt.similarity import lattice_distance
from cbdt.verifier import (
    MAX_WITNESSES,
    check_metric,
    check_oracle,
    check_representation,
    check_similarity_triangle,
    check_symmetry_product,
    run_checks,
)


def squared_distance(space, a, b):
    return lattice_distance(space, a, b) ** 2


def lopsided_similarity(space, a, b):
    return Fraction(1, 1 + sum(space.ranks(a)) + 2 * sum(space.ranks(b)))


def test_metric(space):
    result = check_metric(space, sample_count=100, seed=3)
    assert result.passed
    assert result.instances_tested == 100 + 6 ** 3


def test_metric_without_exhaustive_pass(space):
    result = check_metric(space, sample_count=50, exhaustive_limit=5)
    assert result.instances_tested == 50


def test_metric_finds_and_shrinks_witnesses(space):
    result = check_metric(space, sample_count=200, distance=squared_distance)
    assert not result.passed
    assert 0 < len(result.failures) <= MAX_WITNESSES
    for failure in result.failures:
        assert failure.relation == "d(a,c) <= d(a,b) + d(b,c)"
        a, b, c = failure.witness
        assert squared_distance(space, a, c) > squared_distance(
            space, a, b
        ) + squared_distance(space, b, c)


def test_metric_errors():
    flat = FeatureSpace([Feature("f1", ["5"])])
    with pytest.raises(DistanceError):
        check_metric(flat)
    with pytest.raises(DistanceError):
        check_metric(FeatureSpace([Feature("f1", ["5", "6"])]), sample_count=0)


def test_symmetry_product(phones):
    result = check_symmetry_product(phones.space, phones, sample_count=200)
    assert result.passed
    assert result.instances_tested == 200


def test_symmetry_product_detects_asymmetry(phones):
    result = check_symmetry_product(
        phones.space,
        sample_count=200,
        similarity_fn=lopsided_similarity,
    )
    assert not result.passed
    for failure in result.failures:
        assert len(set(failure.witness)) == 3


def test_symmetry_product_needs_three_points():
    with pytest.raises(DistanceError):
        check_symmetry_product(FeatureSpace([Feature("f1", ["5", "6"])]))


def test_representation(phones, p):
    result = check_representation(phones, p("7", "16"), sample_count=200)
    assert result.passed
    assert result.instances_tested == 2 + 200
    with pytest.raises(DecisionError):
        check_representation(
            Memory(phones.space, phones.actions), p("7", "16")
        )


def test_similarity_triangle_is_an_expected_failure(phones):
    result = check_similarity_triangle(phones.space, sample_count=200)
    assert result.expected_failure
    assert not result.passed
    failure = result.failures[0]
    assert len(set(failure.witness)) == 3
    assert failure.relation == "s(p,q) >= s(p,m) + s(m,q)"


def test_oracle(camera_phones):
    result = check_oracle(camera_phones.space, sample_count=300, seed=11)
    assert result.passed
    assert result.instances_tested == 300


def test_run_checks(phones, p):
    results = run_checks(phones, p("7", "16"), sample_count=50, seed=5)
    assert [r.check_name for r in results] == [
        "metric",
        "symmetry_product",
        "representation",
        "similarity_triangle",
        "oracle",
    ]
    assert all(r.passed or r.expected_failure for r in results)
    again = run_checks(phones, p("7", "16"), sample_count=50, seed=5)
    assert [r.failures for r in results] == [r.failures for r in again]
