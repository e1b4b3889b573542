"""Case based action choice

U(a) is the sum of s(query, q) * u(r) over the cases (q, a, r) of the
memory; the chosen action maximizes U. Ties go to the lexicographically
first action id and are always reported.
"""
import logging
from fractions import Fraction

from .common import CbdtStatus, DecisionError, FeatureSpaceError
from .common import to_fraction
from .featurespace import (
    Feature,
    Problem,
    SubspaceSelector,
    extend_with_feature,
    extend_with_value,
    project,
)
from .similarity import similarity, similarity_table

try:
    from typing import Dict, Optional, Tuple
except ImportError:  # pragma: no cover
    pass


_LOGGER = logging.getLogger(__name__)

IDENTITY = "identity"
AFFINE = "affine"
TABLE = "table"


class UtilityFunction(object):
    """Instantaneous utility u applied to results

    Use the identity, affine and table constructors.
    """

    __slots__ = ("_kind", "_scale", "_shift", "_table")

    def __init__(self, kind=IDENTITY, scale=1, shift=0, table=None):
        if kind not in (IDENTITY, AFFINE, TABLE):
            raise DecisionError("unknown utility kind {!r}".format(kind))
        self._kind = kind
        self._scale = to_fraction(scale)
        self._shift = to_fraction(shift)
        if self._scale <= 0:
            raise DecisionError(
                "affine utility scale must be positive, got {}".format(
                    self._scale
                )
            )
        self._table = None
        if kind == TABLE:
            if table is None:
                raise DecisionError("a table utility needs a table")
            self._table = dict(
                (to_fraction(r), to_fraction(v)) for r, v in table.items()
            )

    @classmethod
    def identity(cls):
        return cls(IDENTITY)

    @classmethod
    def affine(cls, scale, shift=0):
        return cls(AFFINE, scale=scale, shift=shift)

    @classmethod
    def table(cls, table):
        return cls(TABLE, table=table)

    @property
    def kind(self):
        return self._kind

    @property
    def scale(self):
        return self._scale

    @property
    def shift(self):
        return self._shift

    @property
    def mapping(self):
        return dict(self._table or {})

    def __call__(self, result):
        # type: (Fraction) -> Fraction
        result = to_fraction(result)
        if self._kind == IDENTITY:
            return result
        if self._kind == AFFINE:
            return self._scale * result + self._shift
        try:
            return self._table[result]
        except KeyError:
            raise DecisionError(
                "utility table has no entry for result {}".format(result)
            )

    def scaled(self, factor):
        """a * u for a positive a"""
        factor = to_fraction(factor)
        if factor <= 0:
            raise DecisionError("scale factor must be positive")
        if self._kind == TABLE:
            return UtilityFunction.table(
                dict((r, factor * v) for r, v in self._table.items())
            )
        if self._kind == IDENTITY:
            return UtilityFunction.affine(factor, 0)
        return UtilityFunction.affine(
            factor * self._scale, factor * self._shift
        )

    def check(self, memory):
        """Raise DecisionError unless the table covers every result"""
        if self._kind != TABLE:
            return self
        missing = sorted(
            set(c.result for c in memory.cases) - set(self._table.keys())
        )
        if len(missing) > 0:
            raise DecisionError(
                "utility table is not total, results {} have no "
                "utility".format([str(m) for m in missing])
            )
        return self

    def __repr__(self):
        if self._kind == AFFINE:
            return "UtilityFunction(affine, scale={}, shift={})".format(
                self._scale, self._shift
            )
        return "UtilityFunction({})".format(self._kind)


class DecisionReport(object):
    """Outcome of a decision

    - query (Problem): the problem decided on
    - scores (dict[str, Fraction]): U(a) per action, in action set order
    - chosen (str): the lexicographically first maximizer
    - ties (list[str]): every maximizer, sorted
    - similarity (SimilarityTable): the similarities the scores used
    - restricted_history (list[Problem]): problems kept by an aspect
      restricted decision, None otherwise
    - fallback_used (bool): the restriction was empty and the full history
      was used
    """

    __slots__ = (
        "query",
        "scores",
        "chosen",
        "ties",
        "similarity",
        "restricted_history",
        "fallback_used",
        "subspace",
        "delta",
    )

    def __init__(
        self,
        query,
        scores,
        chosen,
        ties,
        similarity,
        restricted_history=None,
        fallback_used=False,
        subspace=None,
        delta=None,
    ):
        self.query = query
        self.scores = scores
        self.chosen = chosen
        self.ties = ties
        self.similarity = similarity
        self.restricted_history = restricted_history
        self.fallback_used = fallback_used
        self.subspace = subspace
        self.delta = delta

    @property
    def degenerate(self):
        return self.similarity.degenerate

    @property
    def best_score(self):
        return self.scores[self.chosen]

    def __repr__(self):
        return "DecisionReport(chosen={}, scores={})".format(
            self.chosen,
            dict((a, str(s)) for a, s in self.scores.items()),
        )


def _check_decidable(memory):
    if len(memory.actions) == 0:
        raise DecisionError("the action set is empty")
    if len(memory) == 0:
        raise DecisionError(
            "memory is empty, there is no case to base a decision on"
        )


def _score(memory, table, u, cases=None):
    entries = table.entries
    scores = dict((a, Fraction(0)) for a in memory.actions)
    for case in memory.cases if cases is None else cases:
        scores[case.action] += entries[case.problem] * u(case.result)
    best = max(scores.values())
    ties = sorted(a for a, s in scores.items() if s == best)
    return scores, ties


def decide(memory, query, u=None):
    # type: (object, Problem, Optional[UtilityFunction]) -> DecisionReport
    """Choose the action maximizing the similarity weighted utility.

    query must be complete in the memory's space; extend the space first
    when it carries new values or features (see evolve_then_decide).
    """
    u = UtilityFunction.identity() if u is None else u
    _check_decidable(memory)
    u.check(memory)
    table = similarity(memory.space, query, memory)
    scores, ties = _score(memory, table, u)
    _LOGGER.debug(
        "decide {}: {}".format(
            query, ", ".join("{}={}".format(a, s) for a, s in scores.items())
        )
    )
    return DecisionReport(query, scores, ties[0], ties, table)


def decide_restricted(memory, query, u, selector, delta):
    # type: (object, Problem, UtilityFunction, SubspaceSelector, object) -> DecisionReport
    """Decide on the cases whose projected problem is more than delta
    similar to the projected query.

    Similarities are computed in the subspace spanned by the selected
    features, with that subspace's own diameter. An empty restriction falls
    back to the full history.
    """
    u = UtilityFunction.identity() if u is None else u
    _check_decidable(memory)
    u.check(memory)
    try:
        delta = to_fraction(delta)
    except (TypeError, ValueError) as err:
        raise DecisionError("delta {!r}: {}".format(delta, err))
    if not 0 <= delta <= 1:
        raise DecisionError("delta must lie in [0, 1], got {}".format(delta))
    try:
        subspace = memory.space.subspace(selector)
        projected_query = project(query, selector)
        history = memory.history()
        projected = [project(q, selector) for q in history]
    except FeatureSpaceError as err:
        raise DecisionError(str(err))
    table = similarity_table(subspace, projected_query, projected, history)
    entries = table.entries
    restricted = [q for q in history if entries[q] > delta]
    fallback_used = False
    if len(restricted) == 0:
        CbdtStatus.warn(
            "no history problem is more than {} similar to {} on {}; "
            "using the entire history".format(
                delta, projected_query, list(selector.feature_ids)
            ),
            logger=_LOGGER,
        )
        restricted = history
        fallback_used = True
    kept = set(restricted)
    cases = [c for c in memory.cases if c.problem in kept]
    scores, ties = _score(memory, table, u, cases)
    _LOGGER.debug(
        "restricted history {} of {} problems".format(
            len(restricted), len(history)
        )
    )
    return DecisionReport(
        query,
        scores,
        ties[0],
        ties,
        table,
        restricted_history=restricted,
        fallback_used=fallback_used,
        subspace=tuple(f.id for f in subspace),
        delta=delta,
    )


class RawQuery(object):
    """A query that may use values or features the memory does not know

    Args
    ----
    - coordinates (dict): value label per feature id
    - new_values (list[tuple]): (feature_id, label, position) for every
      label not yet in its feature's range; position None appends
    - new_features (list[Feature]): full definitions of features that became
      relevant
    """

    __slots__ = ("_problem", "_new_values", "_new_features")

    def __init__(self, coordinates, new_values=(), new_features=()):
        self._problem = (
            coordinates
            if isinstance(coordinates, Problem)
            else Problem(coordinates)
        )
        values = []
        for extension in new_values:
            if len(extension) == 2:
                extension = (extension[0], extension[1], None)
            feature_id, label, position = extension
            values.append((str(feature_id), str(label), position))
        self._new_values = tuple(values)
        for feature in new_features:
            if not isinstance(feature, Feature):
                raise DecisionError("{!r} is not a Feature".format(feature))
        self._new_features = tuple(new_features)

    @property
    def problem(self):
        return self._problem

    @property
    def new_values(self):
        return self._new_values

    @property
    def new_features(self):
        return self._new_features

    @property
    def is_novel(self):
        return len(self._new_values) + len(self._new_features) > 0

    def evolve(self, space):
        """The space extended with the query's features, then its values"""
        for feature in self._new_features:
            space = extend_with_feature(space, feature)
        for feature_id, label, position in self._new_values:
            space = extend_with_value(space, feature_id, label, position)
        for feature_id, label in self._problem.items():
            if feature_id not in space:
                raise DecisionError(
                    "query uses unknown feature {}; declare it as a new "
                    "feature".format(feature_id)
                )
            if label not in space.feature(feature_id):
                raise DecisionError(
                    "query value {} is not in the range of feature {}; "
                    "declare it as a new value with its position".format(
                        label, feature_id
                    )
                )
        return space


def evolve_then_decide(memory, raw_query, u=None):
    # type: (object, RawQuery, Optional[UtilityFunction]) -> Tuple[object, DecisionReport]
    """Extend the space with the query's novelties, re-complete the history
    and decide in the evolved space.

    Returns the evolved memory and the report; memory is not modified.
    """
    if not isinstance(raw_query, RawQuery):
        raw_query = RawQuery(raw_query)
    space = raw_query.evolve(memory.space)
    evolved = memory.with_space(space)
    if evolved is not memory:
        _LOGGER.debug(
            "space evolved from {} to {} lattice points".format(
                memory.space.lattice_size, space.lattice_size
            )
        )
    return evolved, decide(evolved, raw_query.problem, u)


def profile_value(table, profile, u=None):
    # type: (object, Dict[Problem, Fraction], Optional[UtilityFunction]) -> Fraction
    """Sum of s(query, q) * u(x(q)) over the problems with a non-null
    result in profile"""
    u = UtilityFunction.identity() if u is None else u
    entries = table.entries
    value = Fraction(0)
    for problem, result in profile.items():
        result = to_fraction(result)
        if result == 0:
            continue
        if problem not in entries:
            raise DecisionError(
                "profile problem {} is not in the history".format(problem)
            )
        value += entries[problem] * u(result)
    return value


def compare_profiles(table, x, y, u=None):
    # type: (object, Dict[Problem, Fraction], Dict[Problem, Fraction], Optional[UtilityFunction]) -> int
    """1 if x is preferred to y, -1 if y is preferred, 0 if indifferent"""
    vx = profile_value(table, x, u)
    vy = profile_value(table, y, u)
    return (vx > vy) - (vx < vy)
