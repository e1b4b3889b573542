import logging

from . import decision, learning, memory, report, similarity, verifier
from .common import CaseMemoryError, get_logger
from .documents import (
    MemoryDocument,
    QueryDocument,
    RateSnapshotDocument,
    ScenarioDocument,
    UtilityDocument,
)
from .featurespace import extend_with_feature, extend_with_value

try:
    from typing import Optional, Tuple
except ImportError:  # pragma: no cover
    pass


def api(
    logger=None,
    loglevel=logging.INFO,
    lattice_cap=similarity.LATTICE_CAP,
    exhaustive_limit=verifier.EXHAUSTIVE_LIMIT,
    fraction_limit=report.FRACTION_LIMIT,
    seed=0,
    outcome_range=memory.OUTCOME_RANGE,
):
    """Create an instance of the Api class

    Args
    ----
    - logger (logging.Logger): A user defined logging.Logger, if none is
      provided the `cbdt` logger with a stderr handler is used
    - loglevel (logging.loglevel): The logging package log level.
      The default loglevel is logging.INFO
    - lattice_cap (int): largest lattice the matrix power distance builds
    - exhaustive_limit (int): lattices up to this size get exhaustive
      metric checks
    - fraction_limit (int): largest denominator rendered as a fraction
    - seed (int): default seed of the property checks
    - outcome_range (tuple): results outside [min, max] are loaded with a
      warning
    """
    return Api(**locals())


class Api(object):
    """Case based decisions over a memory

    Every operation takes and returns engine objects; memories are never
    modified in place.
    """

    def __init__(self, **kwargs):
        self.logger = get_logger(
            loglevel=kwargs.get("loglevel", logging.INFO),
            logger=kwargs.get("logger"),
        )
        self.lattice_cap = kwargs.get("lattice_cap", similarity.LATTICE_CAP)
        self.exhaustive_limit = kwargs.get(
            "exhaustive_limit", verifier.EXHAUSTIVE_LIMIT
        )
        self.fraction_limit = kwargs.get(
            "fraction_limit", report.FRACTION_LIMIT
        )
        self.seed = kwargs.get("seed", 0)
        self.outcome_range = tuple(
            kwargs.get("outcome_range", memory.OUTCOME_RANGE)
        )
        if len(self.outcome_range) != 2 or (
            self.outcome_range[0] > self.outcome_range[1]
        ):
            raise CaseMemoryError(
                "outcome_range must be (min, max), got {!r}".format(
                    self.outcome_range
                ),
                rule="outcome-range",
            )
        self.logger.debug(
            "Api args: {}".format(
                ", ".join(["{}={!r}".format(k, v) for k, v in kwargs.items()])
            )
        )

    def memory(self):
        """Factory method that creates an instance of MemoryDocument

        Return: MemoryDocument
        """
        return MemoryDocument()

    def query(self):
        """Factory method that creates an instance of QueryDocument

        Return: QueryDocument
        """
        return QueryDocument()

    def scenario(self):
        """Factory method that creates an instance of ScenarioDocument

        Return: ScenarioDocument
        """
        return ScenarioDocument()

    def rate_snapshot(self):
        """Factory method that creates an instance of RateSnapshotDocument

        Return: RateSnapshotDocument
        """
        return RateSnapshotDocument()

    def utility(self):
        """Factory method that creates an instance of UtilityDocument

        Return: UtilityDocument
        """
        return UtilityDocument()

    def load_memory(self, document):
        loaded = memory.load_memory(document, self.outcome_range)
        for warning in loaded.warnings():
            self.logger.debug("memory warning: {}".format(warning))
        return loaded

    def save_memory(self, loaded, encoding="yaml"):
        return memory.save_memory(loaded, encoding)

    def add_case(self, loaded, case):
        return loaded.add_case(case)

    def extend_value(self, loaded, feature_id, label, position=None):
        """loaded re-expressed in a space where feature_id has label"""
        space = extend_with_value(loaded.space, feature_id, label, position)
        return loaded.with_space(space)

    def extend_feature(self, loaded, feature):
        """loaded re-expressed in a space with the new feature"""
        return loaded.with_space(extend_with_feature(loaded.space, feature))

    def decide(self, loaded, query, u=None):
        return decision.decide(loaded, query, u)

    def decide_restricted(self, loaded, query, u, selector, delta):
        return decision.decide_restricted(loaded, query, u, selector, delta)

    def evolve_then_decide(self, loaded, raw_query, u=None):
        # type: (memory.Memory, decision.RawQuery, Optional[decision.UtilityFunction]) -> Tuple[memory.Memory, decision.DecisionReport]
        return decision.evolve_then_decide(loaded, raw_query, u)

    def answer(self, loaded, query_document):
        """Decide on a QueryDocument

        Novel values and features evolve the space first; a subspace and
        delta make the decision aspect restricted. Returns the evolved
        memory and the report.
        """
        raw_query, selector, delta, u = report.query_from_document(
            query_document
        )
        if selector is None:
            return self.evolve_then_decide(loaded, raw_query, u)
        evolved = loaded.with_space(raw_query.evolve(loaded.space))
        return evolved, self.decide_restricted(
            evolved, raw_query.problem, u, selector, delta
        )

    def similarity(self, loaded, query):
        return similarity.similarity(loaded.space, query, loaded)

    def pairwise_similarity(self, loaded, query=None):
        return similarity.pairwise_similarity(loaded.space, loaded, query)

    def matrix_power_distance(self, space, a, b, problems=None):
        return similarity.matrix_power_distance(
            space, problems, a, b, cap=self.lattice_cap
        )

    def estimate_rates(self, model, old_memory, new_memory):
        return learning.estimate_rates(model, old_memory, new_memory)

    def learn_rates(self, old_memory, new_memory, batch_size=1, model=None):
        """Rates after replaying the cases new_memory adds to old_memory
        one problem at a time"""
        if model is None:
            model = learning.RateModel.initial(batch_size)
        stream = learning.memory_stream(old_memory, new_memory)
        return learning.learn_rates(stream, model=model)

    def evaluate_wait(
        self, loaded, scenario, u=None, rates=None, probability=None
    ):
        return learning.evaluate_wait(
            loaded,
            scenario.query,
            scenario,
            u=u,
            rates=rates,
            probability=probability,
        )

    def verify(self, loaded, query=None, u=None, sample_count=1000, seed=None):
        """Run every applicable property check on loaded"""
        seed = self.seed if seed is None else seed
        results = verifier.run_checks(
            loaded,
            query,
            u,
            sample_count=sample_count,
            seed=seed,
            exhaustive_limit=self.exhaustive_limit,
            cap=self.lattice_cap,
        )
        for result in results:
            if not result.passed and not result.expected_failure:
                self.logger.warning(
                    "check {} failed on {} instances".format(
                        result.check_name, len(result.failures)
                    )
                )
        return results
