"""Arrival rates of new values and features, and wait-vs-act lotteries

Every problem interval may bring new values of a feature (rate lambda_j) and
new features (rate lambda_J). Rates are sample means of those arrivals over
the problems seen since the last re-estimation and are refined every
batch_size problems, starting from an empty memory with every rate 0.

A wait lottery compares acting on the current problem now with acting
later on an anticipated problem in an extended space. Arrivals are taken
as independent Poisson events; the outcome when they do not occur is
valued at 0.
"""
import logging
from fractions import Fraction

from scipy import stats

from .common import DecisionError, FeatureSpaceError, LearningError
from .common import to_fraction
from .decision import RawQuery, decide
from .featurespace import Feature, FeatureSpace, Problem
from .memory import Case, Memory
from .similarity import diameter

try:
    from typing import Dict, Iterable, List, Optional
except ImportError:  # pragma: no cover
    pass


_LOGGER = logging.getLogger(__name__)

COMPOUND = "compound"
SINGLE = "single"

ACT_NOW = "act_now"
WAIT = "wait"
INDIFFERENT = "indifferent"


def poisson_pmf(k, lam):
    # type: (int, float) -> float
    """Probability of k events when lam are expected: e**-lam lam**k / k!"""
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise LearningError("k must be a non-negative integer, got %r" % k)
    lam = float(lam)
    if not lam >= 0:
        raise LearningError("lambda must be non-negative, got %r" % lam)
    if lam == 0:
        return 1.0 if k == 0 else 0.0
    return float(stats.poisson.pmf(k, lam))


class RateModel(object):
    """Estimated arrival rates

    Args
    ----
    - lambda_values (dict[str, Fraction]): new values per problem, by
      feature id
    - lambda_features (Fraction): new features per problem
    - batch_size (int): problems between two re-estimations
    - observations (int): problems consumed so far
    - lambda_default (Fraction): rate used for features without their own
      rate; None falls back to the pooled rate
    - pending_values, pending_features, pending_problems: arrivals counted
      since the last re-estimation
    """

    __slots__ = (
        "_lambda_values",
        "_lambda_features",
        "_lambda_default",
        "_batch_size",
        "_observations",
        "_pending_values",
        "_pending_features",
        "_pending_problems",
    )

    def __init__(
        self,
        lambda_values=None,
        lambda_features=0,
        batch_size=1,
        observations=0,
        lambda_default=None,
        pending_values=None,
        pending_features=0,
        pending_problems=0,
    ):
        self._lambda_values = dict(
            (str(k), _rate(v)) for k, v in (lambda_values or {}).items()
        )
        self._lambda_features = _rate(lambda_features)
        self._lambda_default = (
            None if lambda_default is None else _rate(lambda_default)
        )
        if (
            isinstance(batch_size, bool)
            or not isinstance(batch_size, int)
            or batch_size < 1
        ):
            raise LearningError(
                "batch_size must be a positive integer, got %r" % batch_size
            )
        self._batch_size = batch_size
        self._observations = _count(observations, "observations")
        self._pending_values = dict(
            (str(k), _count(v, "pending count"))
            for k, v in (pending_values or {}).items()
        )
        self._pending_features = _count(pending_features, "pending count")
        self._pending_problems = _count(pending_problems, "pending count")

    @classmethod
    def initial(cls, batch_size=1):
        """Model of an empty memory: every rate is 0"""
        return cls(batch_size=batch_size)

    @property
    def lambda_values(self):
        # type: () -> Dict[str, Fraction]
        return dict(self._lambda_values)

    @property
    def lambda_features(self):
        return self._lambda_features

    @property
    def lambda_default(self):
        return self._lambda_default

    @property
    def batch_size(self):
        return self._batch_size

    @property
    def observations(self):
        return self._observations

    @property
    def pending_values(self):
        return dict(self._pending_values)

    @property
    def pending_features(self):
        return self._pending_features

    @property
    def pending_problems(self):
        return self._pending_problems

    @property
    def pooled_rate(self):
        """Mean of the per-feature rates, the common rate when every
        feature is assumed to gain values equally often"""
        if len(self._lambda_values) == 0:
            return Fraction(0)
        return sum(self._lambda_values.values(), Fraction(0)) / len(
            self._lambda_values
        )

    def rate_for(self, feature_id):
        """The feature's own rate, else lambda_default, else the pooled
        rate of the features that have one"""
        feature_id = str(feature_id)
        if feature_id in self._lambda_values:
            return self._lambda_values[feature_id]
        if self._lambda_default is not None:
            return self._lambda_default
        if len(self._lambda_values) > 0:
            return self.pooled_rate
        raise LearningError(
            "no arrival rate for feature {} and no rate to pool, known "
            "features are {}".format(
                feature_id, sorted(self._lambda_values)
            )
        )

    def with_default(self, lambda_default):
        """Copy of this model using lambda_default for unknown features"""
        return RateModel(
            self._lambda_values,
            self._lambda_features,
            self._batch_size,
            self._observations,
            lambda_default,
            self._pending_values,
            self._pending_features,
            self._pending_problems,
        )

    def __eq__(self, other):
        if not isinstance(other, RateModel):
            return NotImplemented
        return all(
            getattr(self, name) == getattr(other, name)
            for name in self.__slots__
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return "RateModel(values={}, features={}, observations={})".format(
            dict((k, str(v)) for k, v in self._lambda_values.items()),
            self._lambda_features,
            self._observations,
        )


def _rate(value):
    try:
        value = to_fraction(value)
    except (TypeError, ValueError) as err:
        raise LearningError("rate {!r}: {}".format(value, err))
    if value < 0:
        raise LearningError("rates must be non-negative, got %s" % value)
    return value


def _count(value, name):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise LearningError(
            "{} must be a non-negative integer, got {!r}".format(name, value)
        )
    return value


def _check_prefix(old_memory, new_memory):
    missing = [f.id for f in old_memory.space if f.id not in new_memory.space]
    if len(missing) > 0:
        raise LearningError(
            "features {} of the old memory are missing from the new "
            "one".format(missing)
        )
    if len(old_memory) > len(new_memory):
        raise LearningError(
            "the old memory has more cases than the new memory"
        )
    for index, (old, new) in enumerate(
        zip(old_memory.cases, new_memory.cases)
    ):
        if (
            old.action != new.action
            or old.result != new.result
            or any(new.problem.get(f) != v for f, v in old.problem.items())
        ):
            raise LearningError(
                "case[{}] differs between the memories, the old memory is "
                "not a prefix of the new one".format(index)
            )


def _novelties(old_memory, new_memory):
    """Per new case: the (feature_id, label) pairs new to their feature's
    range and the ids of features first appearing with it.

    A feature absent from the old space appears with the first new problem,
    every new problem carrying a value for it. Its range then starts from
    its default value and that problem's value.
    """
    _check_prefix(old_memory, new_memory)
    added = new_memory.cases[len(old_memory) :]
    if len(added) == 0:
        raise LearningError(
            "the new memory has no case the old memory lacks, rates are "
            "estimated over at least one new problem"
        )
    ranges = dict((f.id, set(f.values)) for f in old_memory.space)
    novelties = []
    for index, case in enumerate(added):
        features = []
        if index == 0:
            for feature in new_memory.space:
                if feature.id in ranges:
                    continue
                features.append(feature.id)
                ranges[feature.id] = set(
                    [feature.default_value, case.problem[feature.id]]
                )
        values = []
        for feature in new_memory.space:
            if feature.id in features:
                continue
            label = case.problem[feature.id]
            if label not in ranges[feature.id]:
                ranges[feature.id].add(label)
                values.append((feature.id, label))
        novelties.append((values, features))
    return novelties


def estimate_rates(model, old_memory, new_memory):
    # type: (RateModel, Memory, Memory) -> RateModel
    """Count the arrivals brought by the cases new_memory adds to
    old_memory and re-estimate when a batch boundary is crossed.

    Rates are the arrival counts pending since the last re-estimation
    divided by the number of problems they were counted over.
    """
    novelties = _novelties(old_memory, new_memory)
    pending_values = model.pending_values
    pending_features = model.pending_features
    for values, features in novelties:
        for feature_id, _ in values:
            pending_values[feature_id] = pending_values.get(feature_id, 0) + 1
        pending_features += len(features)
    pending_problems = model.pending_problems + len(novelties)
    observations = model.observations + len(novelties)
    batch = model.batch_size
    if observations // batch == model.observations // batch:
        _LOGGER.debug(
            "{} problems observed, next re-estimation at {}".format(
                observations, (observations // batch + 1) * batch
            )
        )
        return RateModel(
            model.lambda_values,
            model.lambda_features,
            batch,
            observations,
            model.lambda_default,
            pending_values,
            pending_features,
            pending_problems,
        )
    lambda_values = dict(
        (f.id, Fraction(pending_values.get(f.id, 0), pending_problems))
        for f in new_memory.space
    )
    lambda_features = Fraction(pending_features, pending_problems)
    _LOGGER.debug(
        "rates re-estimated over {} problems: values {}, features {}".format(
            pending_problems,
            dict((k, str(v)) for k, v in lambda_values.items()),
            lambda_features,
        )
    )
    return RateModel(
        lambda_values,
        lambda_features,
        batch,
        observations,
        model.lambda_default,
    )


def memory_stream(old_memory, new_memory):
    # type: (Memory, Memory) -> List[Memory]
    """old_memory followed by one memory per case new_memory adds.

    Each memory's space holds only the values and features seen up to its
    last case, so consecutive memories replay the arrivals one problem at a
    time.
    """
    novelties = _novelties(old_memory, new_memory)
    seen = dict((f.id, set(f.values)) for f in old_memory.space)
    stream = [old_memory]
    start = len(old_memory)
    for index, (values, features) in enumerate(novelties):
        case = new_memory.cases[start + index]
        for feature_id in features:
            feature = new_memory.space.feature(feature_id)
            seen[feature_id] = set(
                [feature.default_value, case.problem[feature_id]]
            )
        for feature_id, label in values:
            seen[feature_id].add(label)
        space = []
        for feature in new_memory.space:
            if feature.id not in seen:
                continue
            labels = [v for v in feature.values if v in seen[feature.id]]
            space.append(
                Feature(
                    feature.id,
                    labels,
                    name=feature.name,
                    default_rank=labels.index(feature.default_value),
                )
            )
        space = FeatureSpace(space)
        cases = []
        for past in new_memory.cases[: start + index + 1]:
            problem = Problem(
                dict((f, past.problem[f]) for f in space.ids)
            )
            cases.append(Case(problem, past.action, past.result))
        stream.append(
            Memory(
                space,
                new_memory.actions,
                cases,
                outcome_range=new_memory.outcome_range,
            )
        )
    return stream


def learn_rates(memories, batch_size=1, model=None):
    # type: (Iterable[Memory], int, Optional[RateModel]) -> RateModel
    """Fold estimate_rates over a sequence of growing memories"""
    memories = list(memories)
    if model is None:
        model = RateModel.initial(batch_size)
    for old_memory, new_memory in zip(memories, memories[1:]):
        model = estimate_rates(model, old_memory, new_memory)
    return model


class WaitScenario(object):
    """Act now on query, or wait for anticipated_problem

    Args
    ----
    - now (int): time index of the decision, in problem intervals
    - wait_until (int): time index after waiting
    - discount (number): positive per interval factor kappa
    - anticipated_problem (Problem): problem expected after waiting, in the
      space extended by new_features then new_values
    - query (Problem): the problem that can be acted on now
    - new_values (list[tuple]): anticipated (feature_id, label, position)
    - new_features (list[Feature]): anticipated features
    - mode (enum["compound", "single"]): kappa**n or kappa once
    - action (str): compare this action in both periods instead of the
      best action of each period
    """

    __slots__ = (
        "_now",
        "_wait_until",
        "_discount",
        "_anticipated",
        "_query",
        "_mode",
        "_action",
    )

    def __init__(
        self,
        now,
        wait_until,
        discount,
        anticipated_problem,
        query=None,
        new_values=(),
        new_features=(),
        mode=COMPOUND,
        action=None,
    ):
        now = _count(now, "now")
        wait_until = _count(wait_until, "wait_until")
        if wait_until < now:
            raise LearningError(
                "wait_until {} precedes now {}".format(wait_until, now)
            )
        self._now = now
        self._wait_until = wait_until
        try:
            self._discount = to_fraction(discount)
        except (TypeError, ValueError) as err:
            raise LearningError("discount {!r}: {}".format(discount, err))
        if self._discount <= 0:
            raise LearningError(
                "discount must be positive, got {}".format(self._discount)
            )
        if mode not in (COMPOUND, SINGLE):
            raise LearningError(
                "discount mode must be compound or single, got %r" % mode
            )
        self._mode = mode
        try:
            self._anticipated = RawQuery(
                anticipated_problem, new_values, new_features
            )
        except DecisionError as err:
            raise LearningError(str(err))
        if query is not None and not isinstance(query, Problem):
            query = Problem(query)
        self._query = query
        self._action = action

    @property
    def now(self):
        return self._now

    @property
    def wait_until(self):
        return self._wait_until

    @property
    def horizon(self):
        return self._wait_until - self._now

    @property
    def discount(self):
        return self._discount

    @property
    def mode(self):
        return self._mode

    @property
    def action(self):
        return self._action

    @property
    def query(self):
        return self._query

    @property
    def anticipated_problem(self):
        return self._anticipated.problem

    @property
    def new_values(self):
        return self._anticipated.new_values

    @property
    def new_features(self):
        return self._anticipated.new_features

    @property
    def anticipated_values(self):
        # type: () -> Dict[str, int]
        """k_j: anticipated new values per existing feature.

        Values of anticipated features come with the feature and are not
        counted.
        """
        new_ids = set(f.id for f in self.new_features)
        counts = {}
        for feature_id, _, _ in self.new_values:
            if feature_id in new_ids:
                continue
            counts[feature_id] = counts.get(feature_id, 0) + 1
        return counts

    @property
    def anticipated_features(self):
        """k_J"""
        return len(self.new_features)

    def factor(self):
        """Discount applied to the future decision utility"""
        if self._mode == SINGLE:
            return self._discount
        return self._discount ** self.horizon

    def hypothetical_space(self, space):
        try:
            return self._anticipated.evolve(space)
        except (DecisionError, FeatureSpaceError) as err:
            raise LearningError(
                "anticipated problem cannot be placed in the extended "
                "space: {}".format(err)
            )


def event_probability(model, scenario):
    # type: (RateModel, WaitScenario) -> float
    """Probability that exactly the anticipated arrivals happen within the
    horizon, arrivals of each kind being independent Poisson events"""
    n = scenario.horizon
    if n < 1:
        raise LearningError(
            "the horizon must be at least one interval, got {}".format(n)
        )
    probability = 1.0
    for feature_id, k in scenario.anticipated_values.items():
        probability *= poisson_pmf(k, n * model.rate_for(feature_id))
    probability *= poisson_pmf(
        scenario.anticipated_features, n * model.lambda_features
    )
    return probability


class LotteryValuation(object):
    """Act-now value against the discounted value of waiting

    threshold_discount is the kappa making both equal, None when the wait
    value does not grow with kappa.
    """

    __slots__ = (
        "act_now_value",
        "future_value",
        "wait_value",
        "event_probability",
        "threshold_discount",
        "recommendation",
        "horizon",
        "mode",
        "action_now",
        "action_later",
        "act_report",
        "future_report",
    )

    def __init__(self, **kwargs):
        for name in self.__slots__:
            setattr(self, name, kwargs.get(name))

    def __repr__(self):
        return (
            "LotteryValuation(act_now={}, wait={}, probability={}, "
            "threshold={}, {})".format(
                self.act_now_value,
                float(self.wait_value),
                self.event_probability,
                self.threshold_discount,
                self.recommendation,
            )
        )


def _action_value(report, action, memory):
    if action is None:
        return report.chosen, report.best_score
    if action not in memory.actions:
        raise LearningError(
            "scenario action {} is not one of {}".format(
                action, list(memory.actions)
            )
        )
    return action, report.scores[action]


def evaluate_wait(
    memory, query_now, scenario, u=None, rates=None, probability=None
):
    # type: (Memory, Problem, WaitScenario, object, Optional[RateModel], Optional[float]) -> LotteryValuation
    """Value acting now on query_now against waiting for the scenario's
    anticipated problem.

    probability replaces the event probability computed from rates.
    """
    if query_now is None:
        query_now = scenario.query
    act_report = decide(memory, query_now, u)
    action_now, act_now_value = _action_value(
        act_report, scenario.action, memory
    )
    space = scenario.hypothetical_space(memory.space)
    if diameter(space) == 0:
        raise LearningError(
            "the extended space {} is degenerate".format(list(space.ids))
        )
    future_memory = memory.with_space(space)
    future_report = decide(future_memory, scenario.anticipated_problem, u)
    action_later, future_value = _action_value(
        future_report, scenario.action, memory
    )
    if probability is None:
        if rates is None:
            raise LearningError(
                "no rates to compute the event probability from"
            )
        probability = event_probability(rates, scenario)
    p = probability if isinstance(probability, Fraction) else None
    if p is None:
        try:
            p = Fraction(probability)
        except (TypeError, ValueError) as err:
            raise LearningError(
                "probability {!r}: {}".format(probability, err)
            )
    if not 0 <= p <= 1:
        raise LearningError("probability must lie in [0, 1], got %s" % p)
    wait_value = p * scenario.factor() * future_value
    threshold = None
    if future_value > 0 and p > 0 and act_now_value > 0:
        ratio = act_now_value / (p * future_value)
        if scenario.mode == SINGLE:
            threshold = float(ratio)
        elif scenario.horizon > 0:
            threshold = float(ratio) ** (1.0 / scenario.horizon)
    if wait_value > act_now_value:
        recommendation = WAIT
    elif wait_value < act_now_value:
        recommendation = ACT_NOW
    else:
        recommendation = INDIFFERENT
    _LOGGER.debug(
        "act now {} against wait {} (p={}), {}".format(
            act_now_value, float(wait_value), float(p), recommendation
        )
    )
    return LotteryValuation(
        act_now_value=act_now_value,
        future_value=future_value,
        wait_value=wait_value,
        event_probability=float(p),
        threshold_discount=threshold,
        recommendation=recommendation,
        horizon=scenario.horizon,
        mode=scenario.mode,
        action_now=action_now,
        action_later=action_later,
        act_report=act_report,
        future_report=future_report,
    )
