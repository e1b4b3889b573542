"""Discrete feature lattice

A feature is a finite, linearly ordered range of opaque value labels. The
product of the ranges is the lattice every problem is a point of. Every type
here is immutable; evolution operations return new objects and never touch
their inputs.
"""
import logging

from .common import FeatureSpaceError

try:
    from typing import Dict, Optional, Tuple
except ImportError:  # pragma: no cover
    pass


_LOGGER = logging.getLogger(__name__)

DISCRETE = "discrete"
CONTINUOUS = "continuous"


def _as_label(value):
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


class Feature(object):
    """A discrete feature and its ordered value range

    Args
    ----
    - id (str): feature identifier, unique within a space
    - values (list[str]): ordered, distinct value labels
    - name (str): human label, defaults to the id
    - default_rank (int): index of the value given to problems that have no
      recorded value for this feature
    - kind (enum["discrete", "continuous"]): continuous features are
      rejected, they have to be partitioned before ingestion
    """

    __slots__ = ("_id", "_name", "_values", "_default_rank", "_ranks")

    def __init__(
        self, id, values, name=None, default_rank=0, kind=DISCRETE
    ):
        if kind == CONTINUOUS:
            raise FeatureSpaceError(
                "feature {} is continuous; partition its range into "
                "discrete ordered values (for instance with a CART split) "
                "before loading it".format(id)
            )
        if kind != DISCRETE:
            raise FeatureSpaceError(
                "feature {} has unknown kind {!r}".format(id, kind)
            )
        if id is None or _as_label(id) == "":
            raise FeatureSpaceError("feature id must be non-empty")
        self._id = _as_label(id)
        self._name = self._id if name is None else str(name)
        self._values = tuple(_as_label(v) for v in (values or ()))
        if len(self._values) == 0:
            raise FeatureSpaceError(
                "feature {} must have at least one value".format(self._id)
            )
        self._ranks = {}
        for rank, label in enumerate(self._values):
            if label in self._ranks:
                raise FeatureSpaceError(
                    "feature {} lists value {} twice".format(self._id, label)
                )
            self._ranks[label] = rank
        if (
            isinstance(default_rank, bool)
            or not isinstance(default_rank, int)
            or not 0 <= default_rank < len(self._values)
        ):
            raise FeatureSpaceError(
                "default_rank {!r} of feature {} is not an index into "
                "{} values".format(default_rank, self._id, len(self._values))
            )
        self._default_rank = default_rank

    @property
    def id(self):
        return self._id

    @property
    def name(self):
        return self._name

    @property
    def values(self):
        # type: () -> Tuple[str, ...]
        return self._values

    @property
    def default_rank(self):
        return self._default_rank

    @property
    def default_value(self):
        return self._values[self._default_rank]

    @property
    def kappa(self):
        """Number of values in the range"""
        return len(self._values)

    def __contains__(self, label):
        return _as_label(label) in self._ranks

    def rank(self, label):
        try:
            return self._ranks[_as_label(label)]
        except KeyError:
            raise FeatureSpaceError(
                "value {} is not in the range of feature {} {}".format(
                    label, self._id, list(self._values)
                )
            )

    def with_value(self, label, position=None):
        """Return a copy of this feature with label inserted at position.

        The default rank keeps pointing at the same value.
        """
        label = _as_label(label)
        if label in self._ranks:
            raise FeatureSpaceError(
                "feature {} already has value {}".format(self._id, label)
            )
        if position is None:
            position = len(self._values)
        if (
            isinstance(position, bool)
            or not isinstance(position, int)
            or not 0 <= position <= len(self._values)
        ):
            raise FeatureSpaceError(
                "position {!r} is not a valid insertion index for feature "
                "{} with {} values".format(
                    position, self._id, len(self._values)
                )
            )
        values = list(self._values)
        values.insert(position, label)
        default_rank = self._default_rank
        if position <= default_rank:
            default_rank += 1
        return Feature(
            self._id, values, name=self._name, default_rank=default_rank
        )

    def __eq__(self, other):
        if not isinstance(other, Feature):
            return NotImplemented
        return (
            self._id == other._id
            and self._name == other._name
            and self._values == other._values
            and self._default_rank == other._default_rank
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._id, self._values, self._default_rank))

    def __repr__(self):
        return "Feature({}, {}, default_rank={})".format(
            self._id, list(self._values), self._default_rank
        )


class FeatureSpace(object):
    """Ordered sequence of features spanning the problem lattice"""

    __slots__ = ("_features", "_by_id")

    def __init__(self, features=()):
        self._features = tuple(features)
        self._by_id = {}
        for feature in self._features:
            if not isinstance(feature, Feature):
                raise FeatureSpaceError(
                    "{!r} is not a Feature".format(feature)
                )
            if feature.id in self._by_id:
                raise FeatureSpaceError(
                    "feature id {} is used twice".format(feature.id)
                )
            self._by_id[feature.id] = feature

    @property
    def features(self):
        # type: () -> Tuple[Feature, ...]
        return self._features

    @property
    def ids(self):
        return tuple(f.id for f in self._features)

    @property
    def lattice_size(self):
        size = 1
        for feature in self._features:
            size *= feature.kappa
        return size

    def feature(self, feature_id):
        try:
            return self._by_id[_as_label(feature_id)]
        except KeyError:
            raise FeatureSpaceError(
                "unknown feature id {}, expected one of {}".format(
                    feature_id, list(self.ids)
                )
            )

    def rank_of(self, feature_id, value_label):
        return self.feature(feature_id).rank(value_label)

    def ranks(self, problem):
        """Rank vector of a complete problem in feature order"""
        ranks = []
        for feature in self._features:
            if feature.id not in problem:
                raise FeatureSpaceError(
                    "problem {} has no value for feature {}".format(
                        problem, feature.id
                    )
                )
            ranks.append(feature.rank(problem[feature.id]))
        return tuple(ranks)

    def problem_at(self, ranks):
        """Inverse of ranks"""
        return Problem(
            dict(
                (f.id, f.values[r]) for f, r in zip(self._features, ranks)
            )
        )

    def is_complete(self, problem):
        if set(problem.feature_ids) != set(self._by_id.keys()):
            return False
        for feature_id, label in problem.items():
            if label not in self._by_id[feature_id]:
                return False
        return True

    def subspace(self, selector):
        """The space spanned by the selected features, in space order"""
        selector.validate(self)
        selected = set(selector.feature_ids)
        return FeatureSpace([f for f in self._features if f.id in selected])

    def replace(self, feature):
        features = [
            feature if f.id == feature.id else f for f in self._features
        ]
        return FeatureSpace(features)

    def __contains__(self, feature_id):
        return _as_label(feature_id) in self._by_id

    def __len__(self):
        return len(self._features)

    def __iter__(self):
        return iter(self._features)

    def __eq__(self, other):
        if not isinstance(other, FeatureSpace):
            return NotImplemented
        return self._features == other._features

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._features)

    def __repr__(self):
        return "FeatureSpace({})".format(
            ", ".join(repr(f) for f in self._features)
        )


class Problem(object):
    """A lattice point: one value label per feature id"""

    __slots__ = ("_coordinates", "_key")

    def __init__(self, coordinates=None, **kwargs):
        items = dict(coordinates or {})
        items.update(kwargs)
        self._coordinates = dict(
            (_as_label(k), _as_label(v)) for k, v in items.items()
        )
        self._key = frozenset(self._coordinates.items())

    @property
    def coordinates(self):
        # type: () -> Dict[str, str]
        return dict(self._coordinates)

    @property
    def feature_ids(self):
        return tuple(self._coordinates.keys())

    def items(self):
        return self._coordinates.items()

    def get(self, feature_id, default=None):
        return self._coordinates.get(_as_label(feature_id), default)

    def ordered(self, space):
        """Labels in the feature order of space, None where missing"""
        return tuple(self._coordinates.get(f.id) for f in space)

    def __getitem__(self, feature_id):
        return self._coordinates[_as_label(feature_id)]

    def __contains__(self, feature_id):
        return _as_label(feature_id) in self._coordinates

    def __len__(self):
        return len(self._coordinates)

    def __eq__(self, other):
        if not isinstance(other, Problem):
            return NotImplemented
        return self._key == other._key

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "Problem({})".format(
            ", ".join(
                "{}={}".format(k, v) for k, v in self._coordinates.items()
            )
        )


class SubspaceSelector(object):
    """Non-empty subset of feature ids an aspect comparison is made on"""

    __slots__ = ("_feature_ids",)

    def __init__(self, feature_ids):
        ids = []
        for feature_id in feature_ids:
            feature_id = _as_label(feature_id)
            if feature_id not in ids:
                ids.append(feature_id)
        if len(ids) == 0:
            raise FeatureSpaceError("a subspace selector needs a feature id")
        self._feature_ids = tuple(ids)

    @property
    def feature_ids(self):
        return self._feature_ids

    def validate(self, space):
        unknown = [i for i in self._feature_ids if i not in space]
        if len(unknown) > 0:
            raise FeatureSpaceError(
                "selector references unknown features {}".format(unknown)
            )
        return self

    def __repr__(self):
        return "SubspaceSelector({})".format(list(self._feature_ids))


def rank_of(space, feature_id, value_label):
    # type: (FeatureSpace, str, str) -> int
    """0-based position of value_label in the range of feature_id"""
    return space.rank_of(feature_id, value_label)


def extend_with_value(space, feature_id, value_label, position=None):
    # type: (FeatureSpace, str, str, Optional[int]) -> FeatureSpace
    """Return a space whose feature_id range includes value_label.

    position is the insertion index in the linear order of the range;
    None appends the value as the new maximum.
    """
    feature = space.feature(feature_id).with_value(value_label, position)
    _LOGGER.debug(
        "feature {} extended with {} -> {}".format(
            feature_id, value_label, list(feature.values)
        )
    )
    return space.replace(feature)


def extend_with_feature(space, new_feature):
    # type: (FeatureSpace, Feature) -> FeatureSpace
    """Return a space with new_feature appended.

    Existing problems gain a coordinate lazily through complete_problem.
    """
    if not isinstance(new_feature, Feature):
        raise FeatureSpaceError("{!r} is not a Feature".format(new_feature))
    if new_feature.id in space:
        raise FeatureSpaceError(
            "feature id {} is already in the space".format(new_feature.id)
        )
    _LOGGER.debug("feature {} added to the space".format(new_feature.id))
    return FeatureSpace(list(space.features) + [new_feature])


def complete_problem(space, problem):
    # type: (FeatureSpace, Problem) -> Problem
    """Give every feature the problem has no value for its default value.

    Known coordinates must already be valid in space.
    """
    for feature_id, label in problem.items():
        feature = space.feature(feature_id)
        if label not in feature:
            raise FeatureSpaceError(
                "value {} of problem {} is not in the range of feature "
                "{}".format(label, problem, feature_id)
            )
    missing = [f for f in space if f.id not in problem]
    if len(missing) == 0:
        return problem
    coordinates = problem.coordinates
    for feature in missing:
        coordinates[feature.id] = feature.default_value
    return Problem(coordinates)


def project(problem, selector):
    # type: (Problem, SubspaceSelector) -> Problem
    """Restrict problem to the coordinates named by selector"""
    missing = [i for i in selector.feature_ids if i not in problem]
    if len(missing) > 0:
        raise FeatureSpaceError(
            "cannot project {} on unknown features {}".format(
                problem, missing
            )
        )
    return Problem(dict((i, problem[i]) for i in selector.feature_ids))
