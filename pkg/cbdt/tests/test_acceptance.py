"""Worked examples shipped as fixtures and the seeded property suites"""
import math
import random
from fractions import Fraction

import pytest

from cbdt.decision import UtilityFunction, decide, decide_restricted
from cbdt.featurespace import (
    Feature,
    FeatureSpace,
    SubspaceSelector,
    extend_with_value,
    project,
)
from cbdt.learning import (
    RateModel,
    estimate_rates,
    learn_rates,
    memory_stream,
    poisson_pmf,
)
from cbdt.memory import Case, Memory, load_memory, save_memory
from cbdt.report import scenario_from_document
from cbdt.similarity import lattice_distance, pairwise_similarity
from cbdt.verifier import (
    check_metric,
    check_oracle,
    check_representation,
    check_symmetry_product,
)


def random_space(rng, features=3, largest=4):
    return FeatureSpace(
        [
            Feature(
                "f{}".format(i + 1),
                [str(v) for v in range(rng.randint(2, largest))],
                default_rank=0,
            )
            for i in range(features)
        ]
    )


def random_memory(rng, space=None, cases=None, actions=("a", "b", "c")):
    space = random_space(rng) if space is None else space
    points = rng.sample(
        range(space.lattice_size),
        min(space.lattice_size, cases or rng.randint(1, 6)),
    )
    kappas = [f.kappa for f in space]
    memory = Memory(space, actions)
    for point in points:
        ranks = []
        for kappa in reversed(kappas):
            point, rank = divmod(point, kappa)
            ranks.append(rank)
        memory = memory.add_case(
            Case(
                space.problem_at(tuple(reversed(ranks))),
                rng.choice(actions),
                Fraction(rng.randint(1, 10), rng.randint(1, 4)),
            )
        )
    return memory


def random_query(rng, space):
    return space.problem_at(tuple(rng.randrange(f.kappa) for f in space))


def brute_force_scores(memory, query, u):
    """Sum of s * u per action, straight from the value positions"""
    D = sum(f.kappa - 1 for f in memory.space)
    scores = dict((a, Fraction(0)) for a in memory.actions)
    for case in memory.cases:
        d = 0
        for f in memory.space:
            rank = f.values.index(case.problem[f.id])
            d += abs(f.values.index(query[f.id]) - rank)
        s = Fraction(1) if D == 0 else 1 - Fraction(d, D)
        scores[case.action] += s * u(case.result)
    return scores


def test_phone_decision(api, phones, p):
    report = api.decide(phones, p("7", "16"))
    assert [s for _, _, s in report.similarity.rows()] == [
        Fraction(1, 3),
        Fraction(2, 3),
        Fraction(0),
        Fraction(1, 3),
    ]
    assert report.scores["buy"] == 4
    assert report.scores["not-buy"] == Fraction(20, 3)
    assert report.chosen == "not-buy"
    result = check_representation(phones, p("7", "16"), sample_count=100)
    assert result.passed


def test_new_price_rescales_similarities(api, early_phones, utils):
    before = pairwise_similarity(early_phones.space, early_phones)
    document = api.query().deserialize(
        utils.read_fixture("new_price_query.yaml")
    )
    evolved, _ = api.answer(early_phones, document)
    after = pairwise_similarity(evolved.space, evolved)
    q1, q2, q3, q4 = early_phones.history()
    pairs = [(q1, q2), (q2, q3), (q3, q4), (q1, q3), (q2, q4), (q1, q4)]
    assert before.diameter == 2
    assert after.diameter == 3
    assert [before.similarity(a, b) for a, b in pairs] == [
        Fraction(v) for v in ["1/2", "0", "1/2", "1/2", "1/2", "0"]
    ]
    assert [after.similarity(a, b) for a, b in pairs] == [
        Fraction(v) for v in ["2/3", "1/3", "2/3", "2/3", "2/3", "1/3"]
    ]


def test_restricted_camera_decision(api, camera_phones, p):
    selector = SubspaceSelector(["f1", "f2"])
    report = api.decide_restricted(
        camera_phones, p("7", "32", "9"), None, selector, 0.5
    )
    assert [s for _, _, s in report.similarity.rows()] == [
        Fraction(0),
        Fraction(1, 3),
        Fraction(1, 3),
        Fraction(2, 3),
    ]
    assert report.restricted_history == [p("5.5", "32", "none")]
    assert report.chosen == "buy"


def test_wait_for_a_better_phone(api, camera_phones, utils, p):
    document = api.scenario().deserialize(
        utils.read_fixture("wait_scenario.yaml")
    )
    scenario, rates, _ = scenario_from_document(document)
    now = api.decide(camera_phones, scenario.query)
    assert now.similarity.diameter_used == 4
    assert [s for _, _, s in now.similarity.rows()] == [
        Fraction(0),
        Fraction(1, 4),
        Fraction(1, 4),
        Fraction(1, 2),
    ]
    assert now.scores["buy"] == Fraction(7, 2)
    # the printed constant 1/(10e^12) stands in for 0.1 e^-0.1
    printed = 1 / (10 * Fraction(math.exp(12)))
    valuation = api.evaluate_wait(camera_phones, scenario, probability=printed)
    assert valuation.future_report.similarity.diameter_used == 7
    assert [s for _, _, s in valuation.future_report.similarity.rows()] == [
        Fraction(0),
        Fraction(1, 7),
        Fraction(1, 7),
        Fraction(2, 7),
    ]
    threshold = 17.5 * math.exp(12)
    assert abs(valuation.threshold_discount / threshold - 1) < 1e-9
    assert abs(poisson_pmf(1, 0.1) - 0.1 * math.exp(-0.1)) < 1e-12
    computed = api.evaluate_wait(camera_phones, scenario, rates=rates)
    assert computed.recommendation == "act_now"


def test_oracle_on_random_spaces():
    rng = random.Random(2024)
    pairs = 0
    for _ in range(10):
        space = random_space(rng, features=rng.randint(1, 3))
        seed = rng.randint(0, 99)
        result = check_oracle(space, sample_count=100, seed=seed)
        assert result.passed, result.failures
        pairs += result.instances_tested
    values = [str(v) for v in range(10)]
    large = FeatureSpace([Feature("f{}".format(i), values) for i in range(4)])
    assert large.lattice_size == 10 ** 4
    result = check_oracle(large, sample_count=10, seed=1)
    assert result.passed, result.failures
    assert pairs + result.instances_tested >= 1000


@pytest.mark.parametrize("kappas", [(3, 2), (8, 8, 8), (5, 30, 40)])
def test_metric_suite(kappas):
    space = FeatureSpace(
        [
            Feature("f{}".format(i), [str(v) for v in range(k)])
            for i, k in enumerate(kappas)
        ]
    )
    result = check_metric(space, sample_count=10 ** 4, seed=17)
    assert result.passed, result.failures
    if space.lattice_size <= 1000:
        assert result.instances_tested == 10 ** 4 + space.lattice_size ** 3
    else:
        assert result.instances_tested == 10 ** 4


def test_metric_suite_witnesses_a_corrupted_distance(space):
    a, b = space.problem_at((0, 0)), space.problem_at((2, 1))

    def corrupted(space, x, y):
        d = lattice_distance(space, x, y)
        return d + 1 if set([x, y]) == set([a, b]) else d

    result = check_metric(space, sample_count=10, distance=corrupted)
    assert not result.passed
    assert any(a in f.witness and b in f.witness for f in result.failures)


def test_symmetry_product_on_random_memories():
    rng = random.Random(7)
    for seed in range(5):
        memory = random_memory(rng)
        if memory.space.lattice_size < 3:
            continue
        result = check_symmetry_product(
            memory.space, memory, sample_count=200, seed=seed
        )
        assert result.passed, result.failures


def test_estimator_matches_sample_mean():
    rng = random.Random(11)
    for _ in range(5):
        values = [str(v) for v in range(6)]
        full = FeatureSpace([Feature(i, values) for i in ("f1", "f2", "f3")])
        seen = FeatureSpace(
            [Feature(f.id, list(f.values[:2])) for f in full]
        )
        count = rng.randint(20, 200)
        new = random_memory(rng, full, cases=count)
        old = Memory(seen, new.actions)
        ranges = dict((f.id, set(f.values)) for f in seen)
        arrivals = dict((f.id, 0) for f in full)
        for case in new.cases:
            for feature_id, label in case.problem.items():
                if label not in ranges[feature_id]:
                    ranges[feature_id].add(label)
                    arrivals[feature_id] += 1
        model = estimate_rates(RateModel.initial(batch_size=count), old, new)
        assert model.lambda_values == dict(
            (i, Fraction(n, count)) for i, n in arrivals.items()
        )
        assert model.lambda_features == 0
        stream = memory_stream(old, new)
        assert learn_rates(stream, batch_size=count) == model


def test_positive_scaling_keeps_argmax():
    rng = random.Random(3)
    for _ in range(1000):
        memory = random_memory(rng)
        query = rng.choice(memory.history())
        a = Fraction(rng.randint(1, 30), rng.randint(1, 7))
        plain = decide(memory, query)
        scaled = decide(memory, query, UtilityFunction.affine(a))
        assert (scaled.chosen, scaled.ties) == (plain.chosen, plain.ties)


def test_save_then_load_random_memories():
    rng = random.Random(5)
    for index in range(1000):
        memory = random_memory(rng)
        encoding = "json" if index % 2 else "yaml"
        assert load_memory(save_memory(memory, encoding)) == memory


def test_scores_match_brute_force():
    rng = random.Random(13)
    for index in range(300):
        memory = random_memory(rng, cases=rng.randint(1, 8))
        query = random_query(rng, memory.space)
        u = UtilityFunction.identity()
        if index % 2:
            u = UtilityFunction.affine(Fraction(rng.randint(1, 5), 3), -2)
        report = decide(memory, query, u)
        assert report.scores == brute_force_scores(memory, query, u)


def test_restriction_to_every_feature_at_zero_keeps_scores():
    rng = random.Random(17)
    for _ in range(300):
        memory = random_memory(rng)
        query = random_query(rng, memory.space)
        selector = SubspaceSelector(memory.space.ids)
        plain = decide(memory, query)
        restricted = decide_restricted(memory, query, None, selector, 0)
        assert restricted.scores == plain.scores
        assert restricted.ties == plain.ties


def test_equal_mass_shift_keeps_argmax():
    values = [str(v) for v in range(5)]
    space = FeatureSpace([Feature("f1", values), Feature("f2", values)])
    query = space.problem_at((2, 2))
    rng = random.Random(19)
    for _ in range(200):
        memory = Memory(space, ["a", "b"])
        for radius in rng.sample([1, 2, 3], rng.randint(1, 3)):
            ring = [
                (x, y)
                for x in range(5)
                for y in range(5)
                if abs(x - 2) + abs(y - 2) == radius
            ]
            rng.shuffle(ring)
            m = rng.randint(1, min(3, len(ring) // 2))
            for i, ranks in enumerate(ring[: 2 * m]):
                memory = memory.add_case(
                    Case(
                        space.problem_at(ranks),
                        "a" if i < m else "b",
                        rng.randint(1, 10),
                    )
                )
        results = set(c.result for c in memory.cases)
        table = dict((r, Fraction(rng.randint(0, 20))) for r in results)
        shift = Fraction(rng.randint(1, 10))
        plain = decide(memory, query, UtilityFunction.table(table))
        lifted = dict((r, v + shift) for r, v in table.items())
        shifted = decide(memory, query, UtilityFunction.table(lifted))
        assert (shifted.chosen, shifted.ties) == (plain.chosen, plain.ties)
        gains = set(shifted.scores[a] - plain.scores[a] for a in ("a", "b"))
        assert len(gains) == 1


def test_nested_projections():
    rng = random.Random(23)
    for _ in range(200):
        space = random_space(rng, features=rng.randint(1, 4))
        ids = list(space.ids)
        outer = rng.sample(ids, rng.randint(1, len(ids)))
        inner = rng.sample(outer, rng.randint(1, len(outer)))
        query = random_query(rng, space)
        twice = project(
            project(query, SubspaceSelector(outer)), SubspaceSelector(inner)
        )
        assert twice == project(query, SubspaceSelector(inner))


def test_extremal_extension_keeps_distances():
    rng = random.Random(29)
    for _ in range(200):
        memory = random_memory(rng)
        space = memory.space
        feature = rng.choice(list(space))
        position = rng.choice([None, 0])
        extended = extend_with_value(space, feature.id, "new", position)
        assert "new" not in space.feature(feature.id).values
        before = pairwise_similarity(space, memory)
        after = pairwise_similarity(extended, memory.with_space(extended))
        assert after.diameter == before.diameter + 1
        for old, new in zip(before.pairwise, after.pairwise):
            assert new[4] == old[4]
            if old[4] == 0:
                assert new[5] == old[5] == 1
            else:
                assert new[5] > old[5]
