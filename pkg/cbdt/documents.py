"""Structured documents read and written by cbdt

Every file the engine consumes or produces is one of the classes below:
memory, query, scenario, rate snapshot, decision report, lottery valuation
and check report. Field names are fixed in FORMATGUIDE.md.
"""
from .common import DocumentIter, DocumentObject

try:
    from typing import Dict, List, Union
except ImportError:  # pragma: no cover
    pass


class FeatureDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "id": {"type": str, "format": "label", "unique": "features"},
        "name": {"type": str},
        "values": {"type": list, "itemtype": str, "itemformat": "label"},
        "default_rank": {"type": int, "minimum": 0},
        "kind": {"type": str, "enum": ["discrete", "continuous"]},
    }  # type: Dict[str, str]

    _REQUIRED = ("id", "values")  # type: tuple(str)

    _DEFAULTS = {
        "default_rank": 0,
        "kind": "discrete",
    }  # type: Dict[str, Union(type)]

    DISCRETE = "discrete"  # type: str
    CONTINUOUS = "continuous"  # type: str

    def __init__(
        self,
        parent=None,
        id=None,
        name=None,
        values=None,
        default_rank=0,
        kind="discrete",
    ):
        super(FeatureDocument, self).__init__()
        self._parent = parent
        self._set_property("id", id)
        self._set_property("name", name)
        self._set_property("values", values)
        self._set_property("default_rank", default_rank)
        self._set_property("kind", kind)

    @property
    def id(self):
        # type: () -> str
        """id getter

        Feature identifier, unique within a memory.

        Returns: str
        """
        return self._get_property("id")

    @id.setter
    def id(self, value):
        self._set_property("id", value)

    @property
    def name(self):
        # type: () -> str
        """name getter

        Human label of the feature, defaults to the id.

        Returns: str
        """
        return self._get_property("name")

    @name.setter
    def name(self, value):
        self._set_property("name", value)

    @property
    def values(self):
        # type: () -> List[str]
        """values getter

        Ordered value labels. The order is the linear order distances are
        measured along.

        Returns: List[str]
        """
        return self._get_property("values")

    @values.setter
    def values(self, value):
        self._set_property("values", value)

    @property
    def default_rank(self):
        # type: () -> int
        """default_rank getter

        Index of the value given to problems recorded before the feature or
        without a value for it.

        Returns: int
        """
        return self._get_property("default_rank")

    @default_rank.setter
    def default_rank(self, value):
        self._set_property("default_rank", value)

    @property
    def kind(self):
        # type: () -> Union[Literal["continuous"], Literal["discrete"]]
        """kind getter

        Only discrete features are accepted.

        Returns: Union[Literal["continuous"], Literal["discrete"]]
        """
        return self._get_property("kind")

    @kind.setter
    def kind(self, value):
        self._set_property("kind", value)


class FeatureDocumentIter(DocumentIter):
    __slots__ = ()

    def __init__(self, parent=None):
        super(FeatureDocumentIter, self).__init__(parent=parent)

    def __getitem__(self, key):
        # type: (str) -> FeatureDocument
        return self._getitem(key)

    def feature(
        self, id=None, name=None, values=None, default_rank=0, kind="discrete"
    ):
        # type: (str,str,List[str],int,str) -> FeatureDocumentIter
        """Factory method that creates an instance of the FeatureDocument
        class

        Returns: FeatureDocumentIter
        """
        item = FeatureDocument(
            parent=self._parent,
            id=id,
            name=name,
            values=values,
            default_rank=default_rank,
            kind=kind,
        )
        self._add(item)
        return self

    def add(
        self, id=None, name=None, values=None, default_rank=0, kind="discrete"
    ):
        # type: (str,str,List[str],int,str) -> FeatureDocument
        """Add method that creates and returns an instance of the
        FeatureDocument class

        Returns: FeatureDocument
        """
        item = FeatureDocument(
            parent=self._parent,
            id=id,
            name=name,
            values=values,
            default_rank=default_rank,
            kind=kind,
        )
        self._add(item)
        return item


class CaseDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "problem": {"type": dict, "format": "coordinates"},
        "action": {"type": str, "format": "label"},
        "result": {"type": "number"},
    }  # type: Dict[str, str]

    _REQUIRED = ("problem", "action", "result")  # type: tuple(str)

    _DEFAULTS = {}  # type: Dict[str, Union(type)]

    def __init__(self, parent=None, problem=None, action=None, result=None):
        super(CaseDocument, self).__init__()
        self._parent = parent
        self._set_property("problem", problem)
        self._set_property("action", action)
        self._set_property("result", result)

    @property
    def problem(self):
        # type: () -> Dict[str, str]
        """problem getter

        Value label per feature id. Features the problem has no value for
        take their default value when the memory is loaded.

        Returns: Dict[str, str]
        """
        return self._get_property("problem")

    @problem.setter
    def problem(self, value):
        self._set_property("problem", value)

    @property
    def action(self):
        # type: () -> str
        """action getter

        The action actually taken on the problem.

        Returns: str
        """
        return self._get_property("action")

    @action.setter
    def action(self, value):
        self._set_property("action", value)

    @property
    def result(self):
        # type: () -> Union[int, float, str]
        """result getter

        Non-null result of the action taken. Written as an integer, a
        decimal or a p/q string.

        Returns: Union[int, float, str]
        """
        return self._get_property("result")

    @result.setter
    def result(self, value):
        self._set_property("result", value)


class CaseDocumentIter(DocumentIter):
    __slots__ = ()

    def __init__(self, parent=None):
        super(CaseDocumentIter, self).__init__(parent=parent)

    def __getitem__(self, key):
        # type: (int) -> CaseDocument
        return self._getitem(key)

    def case(self, problem=None, action=None, result=None):
        # type: (Dict[str, str],str,Union[int, float, str]) -> CaseDocumentIter
        """Factory method that creates an instance of the CaseDocument class

        Returns: CaseDocumentIter
        """
        item = CaseDocument(
            parent=self._parent, problem=problem, action=action, result=result
        )
        self._add(item)
        return self

    def add(self, problem=None, action=None, result=None):
        # type: (Dict[str, str],str,Union[int, float, str]) -> CaseDocument
        """Add method that creates and returns an instance of the
        CaseDocument class

        Returns: CaseDocument
        """
        item = CaseDocument(
            parent=self._parent, problem=problem, action=action, result=result
        )
        self._add(item)
        return item


class MemoryDocument(DocumentObject):
    """Memory file: features, actions and cases in insertion order"""

    __slots__ = ()

    _TYPES = {
        "features": {"type": "FeatureDocumentIter"},
        "actions": {"type": list, "itemtype": str, "itemformat": "label"},
        "cases": {"type": "CaseDocumentIter"},
    }  # type: Dict[str, str]

    _REQUIRED = ("features", "actions")  # type: tuple(str)

    _DEFAULTS = {}  # type: Dict[str, Union(type)]

    def __init__(self, parent=None, actions=None):
        super(MemoryDocument, self).__init__()
        self._parent = parent
        self._set_property("actions", actions)

    @property
    def features(self):
        # type: () -> FeatureDocumentIter
        """features getter

        Ordered features spanning the problem lattice.

        Returns: FeatureDocumentIter
        """
        return self._get_property("features", FeatureDocumentIter, self)

    @property
    def actions(self):
        # type: () -> List[str]
        """actions getter

        The action set, available for every problem.

        Returns: List[str]
        """
        return self._get_property("actions")

    @actions.setter
    def actions(self, value):
        self._set_property("actions", value)

    @property
    def cases(self):
        # type: () -> CaseDocumentIter
        """cases getter

        Cases in insertion order.

        Returns: CaseDocumentIter
        """
        return self._get_property("cases", CaseDocumentIter, self)


class ValueExtensionDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "feature": {"type": str, "format": "label"},
        "value": {"type": str, "format": "label"},
        "position": {"type": int, "minimum": 0},
    }  # type: Dict[str, str]

    _REQUIRED = ("feature", "value")  # type: tuple(str)

    _DEFAULTS = {}  # type: Dict[str, Union(type)]

    def __init__(self, parent=None, feature=None, value=None, position=None):
        super(ValueExtensionDocument, self).__init__()
        self._parent = parent
        self._set_property("feature", feature)
        self._set_property("value", value)
        self._set_property("position", position)

    @property
    def feature(self):
        # type: () -> str
        """feature getter

        Id of the feature whose range gains the value.

        Returns: str
        """
        return self._get_property("feature")

    @feature.setter
    def feature(self, value):
        self._set_property("feature", value)

    @property
    def value(self):
        # type: () -> str
        """value getter

        The new value label.

        Returns: str
        """
        return self._get_property("value")

    @value.setter
    def value(self, value):
        self._set_property("value", value)

    @property
    def position(self):
        # type: () -> int
        """position getter

        Insertion index in the order of the range. Absent means the value
        becomes the new maximum.

        Returns: int
        """
        return self._get_property("position")

    @position.setter
    def position(self, value):
        self._set_property("position", value)


class ValueExtensionDocumentIter(DocumentIter):
    __slots__ = ()

    def __init__(self, parent=None):
        super(ValueExtensionDocumentIter, self).__init__(parent=parent)

    def __getitem__(self, key):
        # type: (int) -> ValueExtensionDocument
        return self._getitem(key)

    def extension(self, feature=None, value=None, position=None):
        # type: (str,str,int) -> ValueExtensionDocumentIter
        """Factory method that creates an instance of the
        ValueExtensionDocument class

        Returns: ValueExtensionDocumentIter
        """
        item = ValueExtensionDocument(
            parent=self._parent,
            feature=feature,
            value=value,
            position=position,
        )
        self._add(item)
        return self


class AffineUtilityDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "scale": {"type": "number"},
        "shift": {"type": "number"},
    }  # type: Dict[str, str]

    _REQUIRED = ()  # type: tuple(str)

    _DEFAULTS = {
        "scale": 1,
        "shift": 0,
    }  # type: Dict[str, Union(type)]

    def __init__(self, parent=None, scale=1, shift=0):
        super(AffineUtilityDocument, self).__init__()
        self._parent = parent
        self._set_property("scale", scale)
        self._set_property("shift", shift)

    @property
    def scale(self):
        # type: () -> Union[int, float, str]
        """scale getter

        Positive multiplier applied to the result.

        Returns: Union[int, float, str]
        """
        return self._get_property("scale")

    @scale.setter
    def scale(self, value):
        self._set_property("scale", value)

    @property
    def shift(self):
        # type: () -> Union[int, float, str]
        """shift getter

        Returns: Union[int, float, str]
        """
        return self._get_property("shift")

    @shift.setter
    def shift(self, value):
        self._set_property("shift", value)


class UtilityEntryDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "result": {"type": "number"},
        "utility": {"type": "number"},
    }  # type: Dict[str, str]

    _REQUIRED = ("result", "utility")  # type: tuple(str)

    _DEFAULTS = {}  # type: Dict[str, Union(type)]

    def __init__(self, parent=None, result=None, utility=None):
        super(UtilityEntryDocument, self).__init__()
        self._parent = parent
        self._set_property("result", result)
        self._set_property("utility", utility)

    @property
    def result(self):
        # type: () -> Union[int, float, str]
        """result getter

        Returns: Union[int, float, str]
        """
        return self._get_property("result")

    @result.setter
    def result(self, value):
        self._set_property("result", value)

    @property
    def utility(self):
        # type: () -> Union[int, float, str]
        """utility getter

        Returns: Union[int, float, str]
        """
        return self._get_property("utility")

    @utility.setter
    def utility(self, value):
        self._set_property("utility", value)


class UtilityEntryDocumentIter(DocumentIter):
    __slots__ = ()

    def __init__(self, parent=None):
        super(UtilityEntryDocumentIter, self).__init__(parent=parent)

    def __getitem__(self, key):
        # type: (int) -> UtilityEntryDocument
        return self._getitem(key)

    def entry(self, result=None, utility=None):
        # type: (Union[int, float, str],Union[int, float, str]) -> UtilityEntryDocumentIter
        """Factory method that creates an instance of the
        UtilityEntryDocument class

        Returns: UtilityEntryDocumentIter
        """
        item = UtilityEntryDocument(
            parent=self._parent, result=result, utility=utility
        )
        self._add(item)
        return self


class UtilityDocument(DocumentObject):
    """Utility function applied to results, one of identity, affine, table"""

    __slots__ = ()

    _TYPES = {
        "choice": {
            "type": str,
            "enum": ["identity", "affine", "table"],
        },
        "affine": {"type": "AffineUtilityDocument"},
        "table": {"type": "UtilityEntryDocumentIter"},
    }  # type: Dict[str, str]

    _REQUIRED = ()  # type: tuple(str)

    _DEFAULTS = {
        "choice": "identity",
    }  # type: Dict[str, Union(type)]

    IDENTITY = "identity"  # type: str
    AFFINE = "affine"  # type: str
    TABLE = "table"  # type: str

    def __init__(self, parent=None, choice=None):
        super(UtilityDocument, self).__init__()
        self._parent = parent
        if choice is not None:
            self._set_property("choice", choice)

    @property
    def affine(self):
        # type: () -> AffineUtilityDocument
        """Factory property that returns an instance of the
        AffineUtilityDocument class

        Returns: AffineUtilityDocument
        """
        return self._get_property("affine", AffineUtilityDocument, self)

    @property
    def table(self):
        # type: () -> UtilityEntryDocumentIter
        """table getter

        Utility of every result present in the memory.

        Returns: UtilityEntryDocumentIter
        """
        return self._get_property("table", UtilityEntryDocumentIter, self)

    @property
    def choice(self):
        # type: () -> Union[Literal["affine"], Literal["identity"], Literal["table"]]
        """choice getter

        Returns: Union[Literal["affine"], Literal["identity"], Literal["table"]]
        """
        return self._get_property("choice")

    @choice.setter
    def choice(self, value):
        self._set_property("choice", value)


class QueryDocument(DocumentObject):
    """A new problem, optionally carrying values and features the memory
    does not know yet"""

    __slots__ = ()

    _TYPES = {
        "problem": {"type": dict, "format": "coordinates"},
        "new_values": {"type": "ValueExtensionDocumentIter"},
        "new_features": {"type": "FeatureDocumentIter"},
        "subspace": {"type": list, "itemtype": str, "itemformat": "label"},
        "delta": {"type": "number", "minimum": 0, "maximum": 1},
        "utility": {"type": "UtilityDocument"},
    }  # type: Dict[str, str]

    _REQUIRED = ("problem",)  # type: tuple(str)

    _DEFAULTS = {}  # type: Dict[str, Union(type)]

    def __init__(self, parent=None, problem=None, subspace=None, delta=None):
        super(QueryDocument, self).__init__()
        self._parent = parent
        self._set_property("problem", problem)
        self._set_property("subspace", subspace)
        self._set_property("delta", delta)

    @property
    def problem(self):
        # type: () -> Dict[str, str]
        """problem getter

        Returns: Dict[str, str]
        """
        return self._get_property("problem")

    @problem.setter
    def problem(self, value):
        self._set_property("problem", value)

    @property
    def new_values(self):
        # type: () -> ValueExtensionDocumentIter
        """new_values getter

        Values the problem uses that are not yet in their feature's range.

        Returns: ValueExtensionDocumentIter
        """
        return self._get_property(
            "new_values", ValueExtensionDocumentIter, self
        )

    @property
    def new_features(self):
        # type: () -> FeatureDocumentIter
        """new_features getter

        Features that became relevant with this problem.

        Returns: FeatureDocumentIter
        """
        return self._get_property("new_features", FeatureDocumentIter, self)

    @property
    def subspace(self):
        # type: () -> List[str]
        """subspace getter

        Feature ids an aspect restricted decision compares on.

        Returns: List[str]
        """
        return self._get_property("subspace")

    @subspace.setter
    def subspace(self, value):
        self._set_property("subspace", value)

    @property
    def delta(self):
        # type: () -> Union[int, float, str]
        """delta getter

        Similarity threshold in [0, 1] of an aspect restricted decision.

        Returns: Union[int, float, str]
        """
        return self._get_property("delta")

    @delta.setter
    def delta(self, value):
        self._set_property("delta", value)

    @property
    def utility(self):
        # type: () -> UtilityDocument
        """Factory property that returns an instance of the UtilityDocument
        class

        Returns: UtilityDocument
        """
        return self._get_property("utility", UtilityDocument, self)


class FeatureRateDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "feature": {"type": str, "format": "label"},
        "rate": {"type": "number", "minimum": 0},
    }  # type: Dict[str, str]

    _REQUIRED = ("feature", "rate")  # type: tuple(str)

    _DEFAULTS = {}  # type: Dict[str, Union(type)]

    def __init__(self, parent=None, feature=None, rate=None):
        super(FeatureRateDocument, self).__init__()
        self._parent = parent
        self._set_property("feature", feature)
        self._set_property("rate", rate)

    @property
    def feature(self):
        # type: () -> str
        """feature getter

        Returns: str
        """
        return self._get_property("feature")

    @feature.setter
    def feature(self, value):
        self._set_property("feature", value)

    @property
    def rate(self):
        # type: () -> Union[int, float, str]
        """rate getter

        New values per problem interval.

        Returns: Union[int, float, str]
        """
        return self._get_property("rate")

    @rate.setter
    def rate(self, value):
        self._set_property("rate", value)


class FeatureRateDocumentIter(DocumentIter):
    __slots__ = ()

    def __init__(self, parent=None):
        super(FeatureRateDocumentIter, self).__init__(parent=parent)

    def __getitem__(self, key):
        # type: (int) -> FeatureRateDocument
        return self._getitem(key)

    def rate(self, feature=None, rate=None):
        # type: (str,Union[int, float, str]) -> FeatureRateDocumentIter
        """Factory method that creates an instance of the
        FeatureRateDocument class

        Returns: FeatureRateDocumentIter
        """
        item = FeatureRateDocument(
            parent=self._parent, feature=feature, rate=rate
        )
        self._add(item)
        return self


class RateSnapshotDocument(DocumentObject):
    """Rate model state, written next to the memory it was learnt from"""

    __slots__ = ()

    _TYPES = {
        "values": {"type": "FeatureRateDocumentIter"},
        "features": {"type": "number", "minimum": 0},
        "default": {"type": "number", "minimum": 0},
        "batch_size": {"type": int, "minimum": 1},
        "observations": {"type": int, "minimum": 0},
        "pending_values": {"type": "FeatureRateDocumentIter"},
        "pending_features": {"type": int, "minimum": 0},
        "pending_problems": {"type": int, "minimum": 0},
    }  # type: Dict[str, str]

    _REQUIRED = ("features",)  # type: tuple(str)

    _DEFAULTS = {
        "features": 0,
        "batch_size": 1,
        "observations": 0,
        "pending_features": 0,
        "pending_problems": 0,
    }  # type: Dict[str, Union(type)]

    def __init__(
        self,
        parent=None,
        features=0,
        default=None,
        batch_size=1,
        observations=0,
        pending_features=0,
        pending_problems=0,
    ):
        super(RateSnapshotDocument, self).__init__()
        self._parent = parent
        self._set_property("features", features)
        self._set_property("default", default)
        self._set_property("batch_size", batch_size)
        self._set_property("observations", observations)
        self._set_property("pending_features", pending_features)
        self._set_property("pending_problems", pending_problems)

    @property
    def values(self):
        # type: () -> FeatureRateDocumentIter
        """values getter

        Arrival rate of new values per feature.

        Returns: FeatureRateDocumentIter
        """
        return self._get_property("values", FeatureRateDocumentIter, self)

    @property
    def features(self):
        # type: () -> Union[int, float, str]
        """features getter

        Arrival rate of new features.

        Returns: Union[int, float, str]
        """
        return self._get_property("features")

    @features.setter
    def features(self, value):
        self._set_property("features", value)

    @property
    def default(self):
        # type: () -> Union[int, float, str]
        """default getter

        Rate used for features that have no rate of their own.

        Returns: Union[int, float, str]
        """
        return self._get_property("default")

    @default.setter
    def default(self, value):
        self._set_property("default", value)

    @property
    def batch_size(self):
        # type: () -> int
        """batch_size getter

        Number of problems between two re-estimations.

        Returns: int
        """
        return self._get_property("batch_size")

    @batch_size.setter
    def batch_size(self, value):
        self._set_property("batch_size", value)

    @property
    def observations(self):
        # type: () -> int
        """observations getter

        Returns: int
        """
        return self._get_property("observations")

    @observations.setter
    def observations(self, value):
        self._set_property("observations", value)

    @property
    def pending_values(self):
        # type: () -> FeatureRateDocumentIter
        """pending_values getter

        New value counts observed since the last re-estimation, stored in
        the rate field.

        Returns: FeatureRateDocumentIter
        """
        return self._get_property(
            "pending_values", FeatureRateDocumentIter, self
        )

    @property
    def pending_features(self):
        # type: () -> int
        """pending_features getter

        Returns: int
        """
        return self._get_property("pending_features")

    @pending_features.setter
    def pending_features(self, value):
        self._set_property("pending_features", value)

    @property
    def pending_problems(self):
        # type: () -> int
        """pending_problems getter

        Returns: int
        """
        return self._get_property("pending_problems")

    @pending_problems.setter
    def pending_problems(self, value):
        self._set_property("pending_problems", value)


class ScenarioDocument(DocumentObject):
    """Wait-vs-act scenario"""

    __slots__ = ()

    _TYPES = {
        "now": {"type": int, "minimum": 0},
        "wait_until": {"type": int, "minimum": 0},
        "discount": {"type": "number"},
        "mode": {"type": str, "enum": ["compound", "single"]},
        "action": {"type": str, "format": "label"},
        "query": {"type": dict, "format": "coordinates"},
        "anticipated_problem": {"type": dict, "format": "coordinates"},
        "new_values": {"type": "ValueExtensionDocumentIter"},
        "new_features": {"type": "FeatureDocumentIter"},
        "rates": {"type": "RateSnapshotDocument"},
        "utility": {"type": "UtilityDocument"},
    }  # type: Dict[str, str]

    _REQUIRED = (
        "now",
        "wait_until",
        "discount",
        "query",
        "anticipated_problem",
    )  # type: tuple(str)

    _DEFAULTS = {
        "mode": "compound",
    }  # type: Dict[str, Union(type)]

    COMPOUND = "compound"  # type: str
    SINGLE = "single"  # type: str

    def __init__(
        self,
        parent=None,
        now=None,
        wait_until=None,
        discount=None,
        mode="compound",
        action=None,
        query=None,
        anticipated_problem=None,
    ):
        super(ScenarioDocument, self).__init__()
        self._parent = parent
        self._set_property("now", now)
        self._set_property("wait_until", wait_until)
        self._set_property("discount", discount)
        self._set_property("mode", mode)
        self._set_property("action", action)
        self._set_property("query", query)
        self._set_property("anticipated_problem", anticipated_problem)

    @property
    def now(self):
        # type: () -> int
        """now getter

        Time index of the decision, in problem intervals.

        Returns: int
        """
        return self._get_property("now")

    @now.setter
    def now(self, value):
        self._set_property("now", value)

    @property
    def wait_until(self):
        # type: () -> int
        """wait_until getter

        Returns: int
        """
        return self._get_property("wait_until")

    @wait_until.setter
    def wait_until(self, value):
        self._set_property("wait_until", value)

    @property
    def discount(self):
        # type: () -> Union[int, float, str]
        """discount getter

        Per interval factor applied to the future decision utility.

        Returns: Union[int, float, str]
        """
        return self._get_property("discount")

    @discount.setter
    def discount(self, value):
        self._set_property("discount", value)

    @property
    def mode(self):
        # type: () -> Union[Literal["compound"], Literal["single"]]
        """mode getter

        compound applies the discount once per interval, single applies it
        once for the whole wait.

        Returns: Union[Literal["compound"], Literal["single"]]
        """
        return self._get_property("mode")

    @mode.setter
    def mode(self, value):
        self._set_property("mode", value)

    @property
    def action(self):
        # type: () -> str
        """action getter

        Action compared in both periods. Absent means the best action of
        each period.

        Returns: str
        """
        return self._get_property("action")

    @action.setter
    def action(self, value):
        self._set_property("action", value)

    @property
    def query(self):
        # type: () -> Dict[str, str]
        """query getter

        The problem as it can be solved now.

        Returns: Dict[str, str]
        """
        return self._get_property("query")

    @query.setter
    def query(self, value):
        self._set_property("query", value)

    @property
    def anticipated_problem(self):
        # type: () -> Dict[str, str]
        """anticipated_problem getter

        The problem expected after waiting, in the extended space.

        Returns: Dict[str, str]
        """
        return self._get_property("anticipated_problem")

    @anticipated_problem.setter
    def anticipated_problem(self, value):
        self._set_property("anticipated_problem", value)

    @property
    def new_values(self):
        # type: () -> ValueExtensionDocumentIter
        """new_values getter

        Returns: ValueExtensionDocumentIter
        """
        return self._get_property(
            "new_values", ValueExtensionDocumentIter, self
        )

    @property
    def new_features(self):
        # type: () -> FeatureDocumentIter
        """new_features getter

        Returns: FeatureDocumentIter
        """
        return self._get_property("new_features", FeatureDocumentIter, self)

    @property
    def rates(self):
        # type: () -> RateSnapshotDocument
        """Factory property that returns an instance of the
        RateSnapshotDocument class

        Returns: RateSnapshotDocument
        """
        return self._get_property("rates", RateSnapshotDocument, self)

    @property
    def utility(self):
        # type: () -> UtilityDocument
        """Factory property that returns an instance of the UtilityDocument
        class

        Returns: UtilityDocument
        """
        return self._get_property("utility", UtilityDocument, self)


class ScoreDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "action": {"type": str},
        "score": {"type": "number"},
        "decimal": {"type": float},
    }  # type: Dict[str, str]

    _REQUIRED = ("action", "score")  # type: tuple(str)

    _DEFAULTS = {}  # type: Dict[str, Union(type)]

    def __init__(self, parent=None, action=None, score=None, decimal=None):
        super(ScoreDocument, self).__init__()
        self._parent = parent
        self._set_property("action", action)
        self._set_property("score", score)
        self._set_property("decimal", decimal)

    @property
    def action(self):
        # type: () -> str
        return self._get_property("action")

    @property
    def score(self):
        # type: () -> Union[int, float, str]
        return self._get_property("score")

    @property
    def decimal(self):
        # type: () -> float
        return self._get_property("decimal")


class ScoreDocumentIter(DocumentIter):
    __slots__ = ()

    def __init__(self, parent=None):
        super(ScoreDocumentIter, self).__init__(parent=parent)

    def __getitem__(self, key):
        # type: (int) -> ScoreDocument
        return self._getitem(key)

    def score(self, action=None, score=None, decimal=None):
        # type: (str,Union[int, float, str],float) -> ScoreDocumentIter
        """Factory method that creates an instance of the ScoreDocument class

        Returns: ScoreDocumentIter
        """
        item = ScoreDocument(
            parent=self._parent, action=action, score=score, decimal=decimal
        )
        self._add(item)
        return self


class SimilarityEntryDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "problem": {"type": dict, "format": "coordinates"},
        "other": {"type": dict, "format": "coordinates"},
        "distance": {"type": int, "minimum": 0},
        "similarity": {"type": "number", "minimum": 0, "maximum": 1},
        "decimal": {"type": float},
    }  # type: Dict[str, str]

    _REQUIRED = ("problem", "distance", "similarity")  # type: tuple(str)

    _DEFAULTS = {}  # type: Dict[str, Union(type)]

    def __init__(
        self,
        parent=None,
        problem=None,
        other=None,
        distance=None,
        similarity=None,
        decimal=None,
    ):
        super(SimilarityEntryDocument, self).__init__()
        self._parent = parent
        self._set_property("problem", problem)
        self._set_property("other", other)
        self._set_property("distance", distance)
        self._set_property("similarity", similarity)
        self._set_property("decimal", decimal)

    @property
    def problem(self):
        # type: () -> Dict[str, str]
        return self._get_property("problem")

    @property
    def other(self):
        # type: () -> Dict[str, str]
        """other getter

        Second problem of a pairwise entry.

        Returns: Dict[str, str]
        """
        return self._get_property("other")

    @property
    def distance(self):
        # type: () -> int
        return self._get_property("distance")

    @property
    def similarity(self):
        # type: () -> Union[int, float, str]
        return self._get_property("similarity")


class SimilarityEntryDocumentIter(DocumentIter):
    __slots__ = ()

    def __init__(self, parent=None):
        super(SimilarityEntryDocumentIter, self).__init__(parent=parent)

    def __getitem__(self, key):
        # type: (int) -> SimilarityEntryDocument
        return self._getitem(key)

    def entry(
        self,
        problem=None,
        other=None,
        distance=None,
        similarity=None,
        decimal=None,
    ):
        # type: (Dict[str, str],Dict[str, str],int,Union[int, float, str],float) -> SimilarityEntryDocumentIter
        """Factory method that creates an instance of the
        SimilarityEntryDocument class

        Returns: SimilarityEntryDocumentIter
        """
        item = SimilarityEntryDocument(
            parent=self._parent,
            problem=problem,
            other=other,
            distance=distance,
            similarity=similarity,
            decimal=decimal,
        )
        self._add(item)
        return self


class DecisionReportDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "query": {"type": dict, "format": "coordinates"},
        "diameter": {"type": int, "minimum": 0},
        "degenerate": {"type": bool},
        "subspace": {"type": list, "itemtype": str},
        "delta": {"type": "number"},
        "similarities": {"type": "SimilarityEntryDocumentIter"},
        "scores": {"type": "ScoreDocumentIter"},
        "chosen": {"type": str},
        "ties": {"type": list, "itemtype": str},
        "restricted_history": {"type": list, "itemtype": dict},
        "fallback_used": {"type": bool},
    }  # type: Dict[str, str]

    _REQUIRED = ("query", "chosen")  # type: tuple(str)

    _DEFAULTS = {
        "degenerate": False,
        "fallback_used": False,
    }  # type: Dict[str, Union(type)]

    def __init__(
        self,
        parent=None,
        query=None,
        diameter=None,
        degenerate=False,
        subspace=None,
        delta=None,
        chosen=None,
        ties=None,
        restricted_history=None,
        fallback_used=False,
    ):
        super(DecisionReportDocument, self).__init__()
        self._parent = parent
        self._set_property("query", query)
        self._set_property("diameter", diameter)
        self._set_property("degenerate", degenerate)
        self._set_property("subspace", subspace)
        self._set_property("delta", delta)
        self._set_property("chosen", chosen)
        self._set_property("ties", ties)
        self._set_property("restricted_history", restricted_history)
        self._set_property("fallback_used", fallback_used)

    @property
    def query(self):
        # type: () -> Dict[str, str]
        return self._get_property("query")

    @property
    def diameter(self):
        # type: () -> int
        """diameter getter

        Normalizer of the distances, 0 when every problem coincides.

        Returns: int
        """
        return self._get_property("diameter")

    @property
    def degenerate(self):
        # type: () -> bool
        return self._get_property("degenerate")

    @property
    def similarities(self):
        # type: () -> SimilarityEntryDocumentIter
        return self._get_property(
            "similarities", SimilarityEntryDocumentIter, self
        )

    @property
    def scores(self):
        # type: () -> ScoreDocumentIter
        return self._get_property("scores", ScoreDocumentIter, self)

    @property
    def chosen(self):
        # type: () -> str
        return self._get_property("chosen")

    @property
    def ties(self):
        # type: () -> List[str]
        return self._get_property("ties")

    @property
    def restricted_history(self):
        # type: () -> List[Dict[str, str]]
        return self._get_property("restricted_history")

    @property
    def fallback_used(self):
        # type: () -> bool
        return self._get_property("fallback_used")


class LotteryDocument(DocumentObject):
    """Wait-vs-act valuation"""

    __slots__ = ()

    _TYPES = {
        "horizon": {"type": int, "minimum": 0},
        "mode": {"type": str, "enum": ["compound", "single"]},
        "action_now": {"type": str},
        "action_later": {"type": str},
        "act_now_value": {"type": "number"},
        "future_value": {"type": "number"},
        "event_probability": {"type": float, "minimum": 0, "maximum": 1},
        "wait_value": {"type": float},
        "threshold_discount": {"type": float},
        "hypothetical_diameter": {"type": int, "minimum": 0},
        "similarities": {"type": "SimilarityEntryDocumentIter"},
        "recommendation": {
            "type": str,
            "enum": ["act_now", "wait", "indifferent"],
        },
    }  # type: Dict[str, str]

    _REQUIRED = ("recommendation",)  # type: tuple(str)

    _DEFAULTS = {}  # type: Dict[str, Union(type)]

    def __init__(
        self,
        parent=None,
        horizon=None,
        mode=None,
        action_now=None,
        action_later=None,
        act_now_value=None,
        future_value=None,
        event_probability=None,
        wait_value=None,
        threshold_discount=None,
        hypothetical_diameter=None,
        recommendation=None,
    ):
        super(LotteryDocument, self).__init__()
        self._parent = parent
        self._set_property("horizon", horizon)
        self._set_property("mode", mode)
        self._set_property("action_now", action_now)
        self._set_property("action_later", action_later)
        self._set_property("act_now_value", act_now_value)
        self._set_property("future_value", future_value)
        self._set_property("event_probability", event_probability)
        self._set_property("wait_value", wait_value)
        self._set_property("threshold_discount", threshold_discount)
        self._set_property("hypothetical_diameter", hypothetical_diameter)
        self._set_property("recommendation", recommendation)

    @property
    def similarities(self):
        # type: () -> SimilarityEntryDocumentIter
        """similarities getter

        Similarities of the anticipated problem in the extended space.

        Returns: SimilarityEntryDocumentIter
        """
        return self._get_property(
            "similarities", SimilarityEntryDocumentIter, self
        )

    @property
    def recommendation(self):
        # type: () -> Union[Literal["act_now"], Literal["indifferent"], Literal["wait"]]
        return self._get_property("recommendation")

    @property
    def threshold_discount(self):
        # type: () -> float
        return self._get_property("threshold_discount")


class FailureDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "witness": {"type": list, "itemtype": dict},
        "relation": {"type": str},
        "observed": {"type": str},
    }  # type: Dict[str, str]

    _REQUIRED = ("witness", "relation", "observed")  # type: tuple(str)

    _DEFAULTS = {}  # type: Dict[str, Union(type)]

    def __init__(
        self, parent=None, witness=None, relation=None, observed=None
    ):
        super(FailureDocument, self).__init__()
        self._parent = parent
        self._set_property("witness", witness)
        self._set_property("relation", relation)
        self._set_property("observed", observed)

    @property
    def witness(self):
        # type: () -> List[Dict[str, str]]
        return self._get_property("witness")

    @property
    def relation(self):
        # type: () -> str
        return self._get_property("relation")

    @property
    def observed(self):
        # type: () -> str
        return self._get_property("observed")


class FailureDocumentIter(DocumentIter):
    __slots__ = ()

    def __init__(self, parent=None):
        super(FailureDocumentIter, self).__init__(parent=parent)

    def __getitem__(self, key):
        # type: (int) -> FailureDocument
        return self._getitem(key)

    def failure(self, witness=None, relation=None, observed=None):
        # type: (List[Dict[str, str]],str,str) -> FailureDocumentIter
        """Factory method that creates an instance of the FailureDocument
        class

        Returns: FailureDocumentIter
        """
        item = FailureDocument(
            parent=self._parent,
            witness=witness,
            relation=relation,
            observed=observed,
        )
        self._add(item)
        return self


class CheckDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "id": {"type": str, "unique": "checks"},
        "instances_tested": {"type": int, "minimum": 0},
        "passed": {"type": bool},
        "expected_failure": {"type": bool},
        "failures": {"type": "FailureDocumentIter"},
    }  # type: Dict[str, str]

    _REQUIRED = ("id", "instances_tested", "passed")  # type: tuple(str)

    _DEFAULTS = {
        "expected_failure": False,
    }  # type: Dict[str, Union(type)]

    def __init__(
        self,
        parent=None,
        id=None,
        instances_tested=None,
        passed=None,
        expected_failure=False,
    ):
        super(CheckDocument, self).__init__()
        self._parent = parent
        self._set_property("id", id)
        self._set_property("instances_tested", instances_tested)
        self._set_property("passed", passed)
        self._set_property("expected_failure", expected_failure)

    @property
    def id(self):
        # type: () -> str
        """id getter

        Name of the check.

        Returns: str
        """
        return self._get_property("id")

    @property
    def instances_tested(self):
        # type: () -> int
        return self._get_property("instances_tested")

    @property
    def passed(self):
        # type: () -> bool
        return self._get_property("passed")

    @property
    def expected_failure(self):
        # type: () -> bool
        return self._get_property("expected_failure")

    @property
    def failures(self):
        # type: () -> FailureDocumentIter
        return self._get_property("failures", FailureDocumentIter, self)


class CheckDocumentIter(DocumentIter):
    __slots__ = ()

    def __init__(self, parent=None):
        super(CheckDocumentIter, self).__init__(parent=parent)

    def __getitem__(self, key):
        # type: (str) -> CheckDocument
        return self._getitem(key)

    def add(
        self,
        id=None,
        instances_tested=None,
        passed=None,
        expected_failure=False,
    ):
        # type: (str,int,bool,bool) -> CheckDocument
        """Add method that creates and returns an instance of the
        CheckDocument class

        Returns: CheckDocument
        """
        item = CheckDocument(
            parent=self._parent,
            id=id,
            instances_tested=instances_tested,
            passed=passed,
            expected_failure=expected_failure,
        )
        self._add(item)
        return item


class CheckReportDocument(DocumentObject):
    __slots__ = ()

    _TYPES = {
        "seed": {"type": int},
        "checks": {"type": "CheckDocumentIter"},
    }  # type: Dict[str, str]

    _REQUIRED = ()  # type: tuple(str)

    _DEFAULTS = {
        "seed": 0,
    }  # type: Dict[str, Union(type)]

    def __init__(self, parent=None, seed=0):
        super(CheckReportDocument, self).__init__()
        self._parent = parent
        self._set_property("seed", seed)

    @property
    def seed(self):
        # type: () -> int
        return self._get_property("seed")

    @property
    def checks(self):
        # type: () -> CheckDocumentIter
        return self._get_property("checks", CheckDocumentIter, self)


class SimilarityDumpDocument(DocumentObject):
    """Pairwise distances and similarities of a memory's history"""

    __slots__ = ()

    _TYPES = {
        "diameter": {"type": int, "minimum": 0},
        "degenerate": {"type": bool},
        "query": {"type": dict, "format": "coordinates"},
        "pairs": {"type": "SimilarityEntryDocumentIter"},
        "to_query": {"type": "SimilarityEntryDocumentIter"},
    }  # type: Dict[str, str]

    _REQUIRED = ("diameter",)  # type: tuple(str)

    _DEFAULTS = {
        "degenerate": False,
    }  # type: Dict[str, Union(type)]

    def __init__(
        self, parent=None, diameter=None, degenerate=False, query=None
    ):
        super(SimilarityDumpDocument, self).__init__()
        self._parent = parent
        self._set_property("diameter", diameter)
        self._set_property("degenerate", degenerate)
        self._set_property("query", query)

    @property
    def diameter(self):
        # type: () -> int
        return self._get_property("diameter")

    @property
    def degenerate(self):
        # type: () -> bool
        return self._get_property("degenerate")

    @property
    def query(self):
        # type: () -> Dict[str, str]
        return self._get_property("query")

    @property
    def pairs(self):
        # type: () -> SimilarityEntryDocumentIter
        """pairs getter

        One entry per pair of history problems, in history order.

        Returns: SimilarityEntryDocumentIter
        """
        return self._get_property("pairs", SimilarityEntryDocumentIter, self)

    @property
    def to_query(self):
        # type: () -> SimilarityEntryDocumentIter
        return self._get_property(
            "to_query", SimilarityEntryDocumentIter, self
        )
