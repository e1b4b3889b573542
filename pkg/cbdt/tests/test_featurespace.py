import pytest

from cbdt.common import FeatureSpaceError
from cbdt.featurespace import (
    Feature,
    FeatureSpace,
    Problem,
    SubspaceSelector,
    complete_problem,
    extend_with_feature,
    extend_with_value,
    project,
    rank_of,
)


@pytest.mark.parametrize(
    "feature_id, label, rank",
    [("f1", "7", 2), ("f2", "16", 0), ("f1", "5.5", 1), ("f1", 5.5, 1)],
)
def test_rank_of(space, feature_id, label, rank):
    assert rank_of(space, feature_id, label) == rank


@pytest.mark.parametrize(
    "feature_id, label", [("f3", "5"), ("f1", "6"), ("f2", "64")]
)
def test_rank_of_unknown(space, feature_id, label):
    try:
        rank_of(space, feature_id, label)
        pytest.fail("{}={} was ranked".format(feature_id, label))
    except FeatureSpaceError:
        pass


def test_feature_invariants():
    for values, default_rank in [([], 0), (["a", "a"], 0), (["a"], 1)]:
        try:
            Feature("f", values, default_rank=default_rank)
            pytest.fail("{} was accepted".format(values))
        except FeatureSpaceError:
            pass
    feature = Feature("f", [5, 5.5, 7], default_rank=1)
    assert feature.values == ("5", "5.5", "7")
    assert feature.default_value == "5.5"
    assert feature.kappa == 3
    assert feature.name == "f"


def test_continuous_feature_rejected():
    with pytest.raises(FeatureSpaceError) as execinfo:
        Feature("weight", ["light", "heavy"], kind="continuous")
    assert "discrete" in str(execinfo.value)


def test_duplicate_feature_ids():
    try:
        FeatureSpace([Feature("f1", ["a"]), Feature("f1", ["b"])])
        pytest.fail("duplicate feature ids were accepted")
    except FeatureSpaceError as e:
        assert "f1" in str(e)


def test_extend_with_value_appends(space):
    extended = extend_with_value(space, "f1", "8")
    assert extended.feature("f1").values == ("5", "5.5", "7", "8")
    assert extended.feature("f2") == space.feature("f2")
    assert space.feature("f1").values == ("5", "5.5", "7")


def test_extend_with_value_inserts_below_default():
    space = FeatureSpace([Feature("f1", ["5", "5.5"], default_rank=1)])
    extended = extend_with_value(space, "f1", "4", position=0)
    feature = extended.feature("f1")
    assert feature.values == ("4", "5", "5.5")
    assert feature.default_value == "5.5"
    assert feature.default_rank == 2


def test_extend_with_value_example(p):
    space = FeatureSpace(
        [Feature("f1", ["5", "5.5"]), Feature("f2", ["16", "32"])]
    )
    extended = extend_with_value(space, "f1", "7")
    assert extended.feature("f1").values == ("5", "5.5", "7")
    assert extended.ranks(p("7", "16")) == (2, 0)


@pytest.mark.parametrize(
    "feature_id, label, position",
    [("f2", "32", None), ("f1", "9", 4), ("f1", "9", -1), ("f9", "1", 0)],
)
def test_extend_with_value_errors(space, feature_id, label, position):
    try:
        extend_with_value(space, feature_id, label, position)
        extension = (feature_id, label, position)
        pytest.fail("{} was accepted".format(extension))
    except FeatureSpaceError:
        pass


def test_extend_with_feature(space, p):
    camera = Feature("f3", ["none", "9"], name="camera")
    extended = extend_with_feature(space, camera)
    assert extended.ids == ("f1", "f2", "f3")
    assert len(space) == 2
    completed = complete_problem(extended, p("5", "16"))
    assert completed == p("5", "16", "none")
    try:
        extend_with_feature(extended, Feature("f3", ["x"]))
        pytest.fail("feature f3 was added twice")
    except FeatureSpaceError:
        pass


def test_complete_problem_keeps_known_values(space, p):
    problem = p("5.5", "32")
    assert complete_problem(space, problem) is problem
    try:
        complete_problem(space, p("6", "32"))
        pytest.fail("out of range value was completed")
    except FeatureSpaceError:
        pass


def test_project(p):
    selector = SubspaceSelector(["f1", "f2"])
    assert project(p("7", "32", "9"), selector) == p("7", "32")
    assert project(p("5.5", "32", "none"), selector) == p("5.5", "32")
    try:
        project(p("7"), selector)
        pytest.fail("projection onto a missing coordinate succeeded")
    except FeatureSpaceError:
        pass


def test_subspace(space):
    three = extend_with_feature(space, Feature("f3", ["none", "9"]))
    subspace = three.subspace(SubspaceSelector(["f2", "f1"]))
    assert subspace.ids == ("f1", "f2")
    try:
        three.subspace(SubspaceSelector(["f1", "f4"]))
        pytest.fail("selector with unknown feature was accepted")
    except FeatureSpaceError:
        pass
    try:
        SubspaceSelector([])
        pytest.fail("empty selector was accepted")
    except FeatureSpaceError:
        pass


def test_problem_labels_and_ranks(space):
    problem = Problem({"f1": 5.5, "f2": 16})
    assert problem == Problem(f1="5.5", f2="16")
    assert hash(problem) == hash(Problem(f2="16", f1="5.5"))
    assert space.ranks(problem) == (1, 0)
    assert space.problem_at((1, 0)) == problem
    assert space.is_complete(problem)
    assert not space.is_complete(Problem(f1="5"))
    assert space.lattice_size == 6
