"""Case memory

A memory is a feature space, the full action set and the cases (problem,
action, result) recorded so far. Each history problem carries exactly one
non-null result, the one for the action actually taken; the result of any
other action on that problem is the null result 0 and is never stored.
"""
import logging
from fractions import Fraction

from .common import CaseMemoryError, CbdtStatus, DocumentError, to_fraction
from .common import FeatureSpaceError
from .featurespace import Feature, FeatureSpace, Problem, complete_problem

try:
    from typing import Dict, List, Tuple
except ImportError:  # pragma: no cover
    pass


_LOGGER = logging.getLogger(__name__)

NULL_RESULT = Fraction(0)
OUTCOME_RANGE = (0, 10)


def _check_action(action):
    if not isinstance(action, str) or len(action) == 0:
        raise CaseMemoryError(
            "action id {!r} must be a non-empty string".format(action),
            rule="empty-action",
        )
    return action


class Case(object):
    """One remembered decision: problem, action taken and its result"""

    __slots__ = ("_problem", "_action", "_result")

    def __init__(self, problem, action, result):
        if not isinstance(problem, Problem):
            problem = Problem(problem)
        self._problem = problem
        self._action = _check_action(action)
        try:
            self._result = to_fraction(result)
        except (TypeError, ValueError) as err:
            raise CaseMemoryError(
                "result {!r} is not a finite real: {}".format(result, err),
                rule="finite-result",
            )
        if self._result == NULL_RESULT:
            raise CaseMemoryError(
                "result of the action taken on {} is the null result 0; "
                "only the action actually taken is recorded".format(problem),
                rule="null-result",
            )

    @property
    def problem(self):
        return self._problem

    @property
    def action(self):
        return self._action

    @property
    def result(self):
        # type: () -> Fraction
        return self._result

    def _replace_problem(self, problem):
        case = Case.__new__(Case)
        case._problem = problem
        case._action = self._action
        case._result = self._result
        return case

    def __eq__(self, other):
        if not isinstance(other, Case):
            return NotImplemented
        return (
            self._problem == other._problem
            and self._action == other._action
            and self._result == other._result
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._problem, self._action, self._result))

    def __repr__(self):
        return "Case({!r}, {}, {})".format(
            self._problem, self._action, self._result
        )


class Memory(object):
    """Immutable case memory

    Args
    ----
    - space (FeatureSpace): the space every history problem is complete in
    - actions (list[str]): the action set, available for every problem
    - cases (list[Case]): cases in insertion order
    - outcome_range (tuple): nominal result range; results outside it are
      accepted with a warning
    """

    __slots__ = (
        "_space",
        "_actions",
        "_cases",
        "_problems",
        "_outcome_range",
        "__warnings__",
    )

    def __init__(self, space, actions, cases=(), outcome_range=OUTCOME_RANGE):
        if not isinstance(space, FeatureSpace):
            raise CaseMemoryError("{!r} is not a FeatureSpace".format(space))
        self._space = space
        self._actions = tuple(_check_action(a) for a in actions)
        if len(set(self._actions)) != len(self._actions):
            raise CaseMemoryError(
                "action ids must be unique, got {}".format(
                    list(self._actions)
                ),
                rule="unique-action",
            )
        self._outcome_range = outcome_range
        self._cases = ()
        self._problems = {}
        self.__warnings__ = []
        checked = []
        for index, case in enumerate(cases):
            case = self._check_case(case, index)
            checked.append(case)
            self._problems[case.problem] = index
        self._cases = tuple(checked)

    def _check_case(self, case, index):
        if case.action not in self._actions:
            raise CaseMemoryError(
                "action {} is not one of {}".format(
                    case.action, list(self._actions)
                ),
                rule="unknown-action",
                index=index,
            )
        try:
            problem = complete_problem(self._space, case.problem)
        except FeatureSpaceError as err:
            raise CaseMemoryError(
                "{}; extend the feature space first".format(err),
                rule="incomplete-problem",
                index=index,
            )
        if problem in self._problems:
            raise CaseMemoryError(
                "problem {} is already in the history (case {})".format(
                    problem, self._problems[problem]
                ),
                rule="unique-problem",
                index=index,
            )
        low, high = self._outcome_range
        if not low <= case.result <= high:
            CbdtStatus.warn(
                "case[{}]: result {} is outside the nominal range "
                "[{}, {}]".format(index, case.result, low, high),
                owner=self,
                logger=_LOGGER,
            )
        if problem is not case.problem:
            case = case._replace_problem(problem)
        return case

    @property
    def space(self):
        # type: () -> FeatureSpace
        return self._space

    @property
    def actions(self):
        # type: () -> Tuple[str, ...]
        return self._actions

    @property
    def cases(self):
        # type: () -> Tuple[Case, ...]
        return self._cases

    @property
    def outcome_range(self):
        return self._outcome_range

    def __len__(self):
        return len(self._cases)

    def __contains__(self, problem):
        return problem in self._problems

    def case_for(self, problem):
        return self._cases[self._problems[problem]]

    def warnings(self):
        return list(self.__warnings__)

    def add_case(self, case):
        # type: (Case) -> Memory
        memory = Memory(
            self._space, self._actions, (), outcome_range=self._outcome_range
        )
        memory._cases = self._cases
        memory._problems = dict(self._problems)
        memory.__warnings__ = list(self.__warnings__)
        case = memory._check_case(case, len(self._cases))
        memory._problems[case.problem] = len(self._cases)
        memory._cases = self._cases + (case,)
        return memory

    def history(self):
        # type: () -> List[Problem]
        return [case.problem for case in self._cases]

    def result_profile(self, action):
        # type: (str) -> Dict[Problem, Fraction]
        if action not in self._actions:
            raise CaseMemoryError(
                "action {} is not one of {}".format(
                    action, list(self._actions)
                ),
                rule="unknown-action",
            )
        return dict(
            (
                case.problem,
                case.result if case.action == action else NULL_RESULT,
            )
            for case in self._cases
        )

    def with_space(self, space):
        # type: (FeatureSpace) -> Memory
        """The same cases re-completed in an evolved space"""
        if space == self._space:
            return self
        return Memory(
            space,
            self._actions,
            self._cases,
            outcome_range=self._outcome_range,
        )

    def __eq__(self, other):
        if not isinstance(other, Memory):
            return NotImplemented
        return (
            self._space == other._space
            and self._actions == other._actions
            and self._cases == other._cases
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._space, self._actions, self._cases))

    def __repr__(self):
        return "Memory({} features, {} actions, {} cases)".format(
            len(self._space), len(self._actions), len(self._cases)
        )


def add_case(memory, case):
    # type: (Memory, Case) -> Memory
    """New memory with case appended; memory is left untouched"""
    return memory.add_case(case)


def history(memory):
    # type: (Memory) -> List[Problem]
    """Problems of all cases in insertion order"""
    return memory.history()


def result_profile(memory, action):
    # type: (Memory, str) -> Dict[Problem, Fraction]
    """Result of action on every history problem, 0 where another action
    was taken"""
    return memory.result_profile(action)


def feature_from_document(document):
    return Feature(
        document.id,
        document.values,
        name=document.name,
        default_rank=document.default_rank,
        kind=document.kind,
    )


def feature_to_document(feature, features):
    return features.feature(
        id=feature.id,
        name=feature.name,
        values=list(feature.values),
        default_rank=feature.default_rank,
    )


def memory_from_document(document, outcome_range=OUTCOME_RANGE):
    """Build a Memory from a MemoryDocument"""
    space = FeatureSpace([feature_from_document(f) for f in document.features])
    memory = Memory(space, document.actions, outcome_range=outcome_range)
    for index, case in enumerate(document.cases):
        if index != len(memory):
            raise CaseMemoryError("cases out of order", index=index)
        memory = memory.add_case(
            Case(Problem(case.problem), case.action, case.result)
        )
    return memory


def memory_to_document(memory):
    from .documents import MemoryDocument

    document = MemoryDocument()
    for feature in memory.space:
        feature_to_document(feature, document.features)
    document.actions = list(memory.actions)
    for case in memory.cases:
        document.cases.case(
            problem=dict(
                (f.id, case.problem[f.id]) for f in memory.space
            ),
            action=case.action,
            result=case.result,
        )
    return document


def load_memory(document, outcome_range=OUTCOME_RANGE):
    # type: (object, tuple) -> Memory
    """Load a memory from a yaml/json string, a dict or a MemoryDocument.

    Malformed documents raise DocumentError, memory rule violations raise
    CaseMemoryError naming the case index and the rule.
    """
    from .documents import MemoryDocument

    if not isinstance(document, MemoryDocument):
        try:
            document = MemoryDocument().deserialize(document)
        except (TypeError, ValueError) as err:
            raise DocumentError("malformed memory document: {}".format(err))
    memory = memory_from_document(document, outcome_range=outcome_range)
    _LOGGER.debug("loaded {!r}".format(memory))
    return memory


def save_memory(memory, encoding="yaml"):
    # type: (Memory, str) -> object
    """Serialize memory; the inverse of load_memory"""
    return memory_to_document(memory).serialize(encoding)
