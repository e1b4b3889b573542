"""Shared runtime for cbdt

Holds the error hierarchy, the logger factory, the status/warning channel,
exact number coercion and the document runtime every file format is built
on (serialize / deserialize / validate).
"""
import importlib
import json
import logging
import math
import sys
import time
from fractions import Fraction

import yaml


LOG_FORMAT = "%(asctime)s [%(name)s] [%(levelname)s] %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class CbdtError(Exception):
    """Base class for every error raised by the engine"""


class FeatureSpaceError(CbdtError):
    pass


class CaseMemoryError(CbdtError):
    """Memory invariant violation

    Args
    ----
    - message (str): human readable description
    - rule (str): the memory rule that was violated, one of
      unique-problem, null-result, unknown-action, incomplete-problem,
      empty-action
    - index (int): index of the offending case, if known
    """

    def __init__(self, message, rule=None, index=None):
        self.rule = rule
        self.index = index
        if index is not None:
            message = "case[{}]: {}".format(index, message)
        if rule is not None:
            message = "{} [rule: {}]".format(message, rule)
        super(CaseMemoryError, self).__init__(message)


class DistanceError(CbdtError):
    pass


class DecisionError(CbdtError):
    pass


class LearningError(CbdtError):
    pass


class DocumentError(CbdtError):
    pass


def get_logger(name="cbdt", loglevel=logging.INFO, logger=None):
    """Return the logger used by the engine

    If a user defined logging.Logger is provided it is returned as is,
    otherwise the named logger is given a single stderr handler with UTC
    timestamps.

    Args
    ----
    - name (str): logger name, library modules log to children of `cbdt`
    - loglevel (int): the logging package log level
    - logger (logging.Logger): a user defined logger
    """
    if logger is not None:
        return logger
    logger = logging.getLogger(name)
    logger.setLevel(loglevel)
    for handler in logger.handlers:
        if getattr(handler, "_cbdt_handler", False) is True:
            if handler.stream is not sys.stderr:
                handler.setStream(sys.stderr)
            return logger
    stderr_handler = logging.StreamHandler(sys.stderr)
    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)
    formatter.converter = time.gmtime
    stderr_handler.setFormatter(formatter)
    stderr_handler._cbdt_handler = True
    logger.addHandler(stderr_handler)
    logger.propagate = False
    return logger


class CbdtStatus(object):
    """Collects data-quality warnings on the object they concern and logs
    them once per object."""

    @staticmethod
    def warn(message, owner=None, logger=None):
        if owner is not None:
            if message in owner.__warnings__:
                return
            owner.__warnings__.append(message)
        if logger is None:
            logger = logging.getLogger("cbdt")
        logger.warning(message)


def to_fraction(value):
    """Convert a document number into an exact Fraction.

    Floats are read through their shortest decimal text so 5.5 becomes 11/2
    and 0.1 becomes 1/10. Strings may be decimals or p/q fractions.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or value is None:
        raise TypeError("{!r} is not a number".format(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if math.isfinite(value) is False:
            raise ValueError("{!r} is not a finite number".format(value))
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError("{!r} is not a number".format(value))
    raise TypeError("{!r} is not a number".format(value))


def from_fraction(value):
    """Inverse of to_fraction for document output.

    Integral values become int, values with an exact short decimal form
    become float and everything else is written as a p/q string.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return int(value.numerator)
    as_float = float(value)
    if Fraction(repr(as_float)) == value:
        return as_float
    return "{}/{}".format(value.numerator, value.denominator)


class DocumentBase(object):
    """Base class for all document classes"""

    JSON = "json"
    YAML = "yaml"
    DICT = "dict"

    __slots__ = ()

    __constraints__ = {}
    __validate_latter__ = {"unique": []}

    def __init__(self):
        pass

    def serialize(self, encoding=JSON):
        """Serialize the current object according to a specified encoding.

        Args
        ----
        - encoding (str[json, yaml, dict]): The object will be recursively
            serialized according to the specified encoding.

        Returns
        -------
        - obj(Union[str, dict]): A str for the json and yaml encodings, a
            python dict for the dict encoding.
        """
        self._clear_globals()
        if encoding == DocumentBase.JSON:
            data = json.dumps(self._encode(), indent=2, sort_keys=True)
        elif encoding == DocumentBase.YAML:
            data = yaml.safe_dump(
                self._encode(), sort_keys=False, allow_unicode=True
            )
        elif encoding == DocumentBase.DICT:
            data = self._encode()
        else:
            raise NotImplementedError("Encoding %s not supported" % encoding)
        self._validate_coded()
        return data

    def _encode(self):
        raise NotImplementedError()

    def deserialize(self, serialized_object):
        """Deserialize a python object into the current object.

        Args
        ----
        - serialized_object (Union[str, dict]): The object to deserialize.
            A str must hold json or yaml.

        Returns
        -------
        - obj(DocumentObject): This object with all the serialized_object
            deserialized within.
        """
        self._clear_globals()
        if isinstance(serialized_object, (bytes, bytearray)):
            serialized_object = serialized_object.decode("utf-8")
        if isinstance(serialized_object, str):
            try:
                serialized_object = yaml.safe_load(serialized_object)
            except yaml.YAMLError as err:
                raise DocumentError("document is not valid yaml: %s" % err)
        if not isinstance(serialized_object, dict):
            raise DocumentError(
                "document must be a mapping, got {}".format(
                    type(serialized_object).__name__
                )
            )
        self._decode(serialized_object)
        self._validate_coded()
        return self

    def _decode(self, dict_object):
        raise NotImplementedError()

    def _clear_globals(self):
        for key in list(self.__constraints__.keys()):
            del self.__constraints__[key]
        del self.__validate_latter__["unique"][:]
        del DocumentValidator._validation_errors[:]


class DocumentValidator(object):

    __slots__ = ()

    _validation_errors = []

    def __init__(self):
        pass

    def _clear_errors(self):
        del self._validation_errors[:]

    def validate_integer(self, value, min, max):
        if value is None or isinstance(value, bool):
            return False
        if not isinstance(value, int):
            return False
        if min is not None and value < min:
            return False
        if max is not None and value > max:
            return False
        return True

    def validate_float(self, value, min=None, max=None):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            return False
        if math.isfinite(value) is False:
            return False
        if min is not None and value < min:
            return False
        if max is not None and value > max:
            return False
        return True

    def validate_number(self, value, min=None, max=None):
        """A finite real given as int, float or a decimal / p/q string"""
        try:
            number = to_fraction(value)
        except (TypeError, ValueError):
            return False
        if min is not None and number < min:
            return False
        if max is not None and number > max:
            return False
        return True

    def validate_string(self, value, min_length, max_length):
        if value is None or not isinstance(value, str):
            return False
        if min_length is not None and len(value) < min_length:
            return False
        if max_length is not None and len(value) > max_length:
            return False
        return True

    def validate_bool(self, value):
        return isinstance(value, bool)

    def validate_label(self, value):
        return isinstance(value, str) and len(value) > 0

    def validate_mapping(self, value):
        if not isinstance(value, dict):
            return False
        return all(
            [
                self.validate_label(k) and self.validate_label(v)
                for k, v in value.items()
            ]
        )

    def validate_list(self, value, itemtype, min, max, min_length, max_length):
        if value is None or not isinstance(value, list):
            return False
        v_obj = getattr(self, "validate_{}".format(itemtype), None)
        if v_obj is None:
            raise AttributeError(
                "{} is not a valid attribute".format(itemtype)
            )
        v_obj_lst = []
        for item in value:
            if itemtype in ("integer", "float", "number"):
                v_obj_lst.append(v_obj(item, min, max))
            elif itemtype == "string":
                v_obj_lst.append(v_obj(item, min_length, max_length))
            else:
                v_obj_lst.append(v_obj(item))
        return v_obj_lst

    def types_validation(
        self,
        value,
        type_,
        err_msg,
        itemtype=None,
        min=None,
        max=None,
        min_length=None,
        max_length=None,
    ):
        type_map = {
            int: "integer",
            str: "string",
            float: "float",
            bool: "bool",
            list: "list",
            dict: "mapping",
        }
        if type_ in type_map:
            type_ = type_map[type_]
        if itemtype is not None and itemtype in type_map:
            itemtype = type_map[itemtype]
        v_obj = getattr(self, "validate_{}".format(type_), None)
        if v_obj is None:
            msg = "{} is not a valid or unsupported format".format(type_)
            raise TypeError(msg)
        if type_ == "list":
            verdict = v_obj(value, itemtype, min, max, min_length, max_length)
            if verdict is not False and all(verdict) is True:
                return
            if verdict is not False:
                err_msg = "{} \n {} are not valid".format(
                    err_msg,
                    [
                        value[index]
                        for index, item in enumerate(verdict)
                        if item is False
                    ],
                )
            verdict = False
        elif type_ in ("integer", "float", "number"):
            verdict = v_obj(value, min, max)
            if verdict is True:
                return
            min_max = ""
            if min is not None:
                min_max = ", expected min {}".format(min)
            if max is not None:
                min_max = min_max + ", expected max {}".format(max)
            err_msg = "{} \n got {} of type {} {}".format(
                err_msg, value, type(value), min_max
            )
        elif type_ == "string":
            verdict = v_obj(value, min_length, max_length)
            if verdict is True:
                return
            msg = ""
            if min_length is not None:
                msg = ", expected min {}".format(min_length)
            if max_length is not None:
                msg = msg + ", expected max {}".format(max_length)
            err_msg = "{} \n got {} of type {} {}".format(
                err_msg, value, type(value), msg
            )
        else:
            verdict = v_obj(value)
        if verdict is False:
            raise TypeError(err_msg)

    def _validate_unique_and_name(self, name, value, latter=False):
        if self._TYPES[name].get("unique") is None or value is None:
            return
        if latter is True:
            self.__validate_latter__["unique"].append(
                (self._validate_unique_and_name, name, value)
            )
            return
        scope = "{}.{}".format(self._TYPES[name]["unique"], name)
        values = self.__constraints__.setdefault(scope, [])
        if value in values:
            self._validation_errors.append(
                "{} with {} already exists".format(name, value)
            )
            return
        values.append(value)

    def _validate_coded(self):
        for item in self.__validate_latter__["unique"]:
            item[0](item[1], item[2])
        del self.__validate_latter__["unique"][:]
        if len(self._validation_errors) > 0:
            errors = "\n".join(self._validation_errors)
            self._clear_errors()
            raise DocumentError(errors)


class DocumentObject(DocumentBase, DocumentValidator):
    """Base class for any document object

    Subclasses declare `_TYPES`, `_REQUIRED` and `_DEFAULTS`. A property
    typed with another DocumentObject class name is decoded into that
    class, a property typed with a `...Iter` class name holds a list of
    its items. The `choice` property discriminates between alternative
    child objects.
    """

    __slots__ = ("__warnings__", "_properties", "_parent", "_choice")
    _DEFAULTS = {}
    _TYPES = {}
    _REQUIRED = []

    def __init__(self, parent=None, choice=None):
        super(DocumentObject, self).__init__()
        self._parent = parent
        self._choice = choice
        self._properties = {}
        self.__warnings__ = []

    @property
    def parent(self):
        return self._parent

    def _set_choice(self, name):
        if self._has_choice(name):
            for enum in self._TYPES["choice"]["enum"]:
                if enum in self._properties and name != enum:
                    self._properties.pop(enum)
            self._properties["choice"] = name

    def _has_choice(self, name):
        return (
            "choice" in self._TYPES
            and name in self._TYPES["choice"]["enum"]
        )

    def _get_property(self, name, default_value=None, parent=None):
        if name in self._properties and self._properties[name] is not None:
            return self._properties[name]
        if isinstance(default_value, type) is True:
            self._set_choice(name)
            self._properties[name] = default_value(parent=parent)
        elif default_value is None and name in self._DEFAULTS:
            self._set_choice(name)
            self._properties[name] = self._DEFAULTS[name]
        else:
            self._properties[name] = default_value
        return self._properties[name]

    def _set_property(self, name, value):
        if name in self._DEFAULTS and value is None:
            self._set_choice(name)
            self._properties[name] = self._DEFAULTS[name]
        else:
            if value is not None:
                self._set_choice(name)
            self._properties[name] = value

    def _encode(self):
        """Helper method for serialization"""
        output = {}
        self._validate_required()
        for key in self._ordered_keys():
            value = self._properties[key]
            self._validate_types(key, value)
            self._validate_unique_and_name(key, value, True)
            if isinstance(value, (DocumentObject, DocumentIter)):
                output[key] = value._encode()
            elif value is not None:
                details = self._TYPES.get(key, {})
                if details.get("type") == "number":
                    value = from_fraction(to_fraction(value))
                elif details.get("itemtype") == "number":
                    value = [from_fraction(to_fraction(v)) for v in value]
                elif isinstance(value, dict):
                    value = dict(value)
                elif isinstance(value, list):
                    value = list(value)
                output[key] = value
        return output

    def _ordered_keys(self):
        keys = [k for k in self._TYPES if k in self._properties]
        keys.extend([k for k in self._properties if k not in self._TYPES])
        return keys

    def _decode(self, obj):
        dtypes = [list, str, int, float, bool, dict, "number"]
        if not isinstance(obj, dict):
            raise DocumentError(
                "{} expects a mapping, got {!r}".format(
                    type(self).__name__, obj
                )
            )
        for property_name, property_value in obj.items():
            if property_name not in self._TYPES:
                self._validation_errors.append(
                    "{} is not a property of {}".format(
                        property_name, type(self).__name__
                    )
                )
                continue
            details = self._TYPES[property_name]
            if details["type"] not in dtypes and property_value is not None:
                child = self._get_child_class(property_name)
                if child[0] is not None:
                    if not isinstance(property_value, list):
                        raise TypeError(
                            "property {} shall be a list at {}".format(
                                property_name, self.__class__
                            )
                        )
                    item_list = child[0](parent=self)
                    for item in property_value:
                        item_list._items.append(
                            child[1](parent=self)._decode(item)
                        )
                    property_value = item_list
                else:
                    property_value = child[1](parent=self)._decode(
                        property_value
                    )
            elif property_name in self._DEFAULTS and property_value is None:
                property_value = self._DEFAULTS[property_name]
            # labels are opaque: 5 and 5.5 in yaml are the labels "5", "5.5"
            if details.get("itemformat") == "label" and isinstance(
                property_value, list
            ):
                property_value = [_label(v) for v in property_value]
            elif details.get("format") == "label":
                property_value = _label(property_value)
            elif details.get("format") == "coordinates" and isinstance(
                property_value, dict
            ):
                property_value = dict(
                    (_label(k), _label(v)) for k, v in property_value.items()
                )
            self._set_choice(property_name)
            self._properties[property_name] = property_value
            self._validate_types(property_name, property_value)
            self._validate_unique_and_name(
                property_name, property_value, True
            )
        self._validate_required()
        return self

    def _get_child_class(self, property_name):
        list_class = None
        class_name = self._TYPES[property_name]["type"]
        module = importlib.import_module(self.__module__)
        object_class = getattr(module, class_name)
        if class_name.endswith("Iter"):
            list_class = object_class
            object_class = getattr(module, class_name[0:-4])
        return (list_class, object_class)

    def __str__(self):
        return self.serialize(encoding=self.YAML)

    def __eq__(self, other):
        return self.__str__() == other.__str__()

    def __hash__(self):
        return id(self)

    def _validate_required(self):
        """Validates the required properties are set"""
        for name in self._REQUIRED:
            if self._properties.get(name) is None:
                msg = (
                    "{} is a mandatory property of {}"
                    " and should not be set to None".format(
                        name, self.__class__.__name__
                    )
                )
                raise ValueError(msg)

    def _validate_types(self, property_name, property_value):
        common_data_types = [list, str, int, float, bool, dict, "number"]
        if property_name not in self._TYPES:
            return
        details = self._TYPES[property_name]
        if property_value is None and property_name not in self._REQUIRED:
            return
        if "enum" in details and property_value not in details["enum"]:
            msg = (
                "property {} shall be one of these"
                " {} enum, but got {} at {}"
            )
            raise TypeError(
                msg.format(
                    property_name,
                    details["enum"],
                    property_value,
                    self.__class__,
                )
            )
        if details["type"] in common_data_types:
            msg = "property {} shall be of type {} at {}".format(
                property_name, details["type"], self.__class__
            )
            self.types_validation(
                property_value,
                details["type"],
                msg,
                details.get("itemtype"),
                details.get("minimum"),
                details.get("maximum"),
                details.get("minLength"),
                details.get("maxLength"),
            )
        else:
            class_name = details["type"]
            module = importlib.import_module(self.__module__)
            object_class = getattr(module, class_name)
            if not isinstance(property_value, object_class):
                msg = "property {} shall be of type {}," " but got {} at {}"
                raise TypeError(
                    msg.format(
                        property_name,
                        class_name,
                        type(property_value),
                        self.__class__,
                    )
                )

    def get(self, name):
        """The property when it is set, otherwise None"""
        return self._properties.get(name)

    def warnings(self):
        warns = list(self.__warnings__)
        del self.__warnings__[:]
        return warns


def _label(value):
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, float, str)):
        return str(value)
    return value


class DocumentIter(DocumentBase):
    """Container class for DocumentObject

    Inheriting classes contain 0..n instances of a document object.
    - memory.features.feature(id="f1").feature(id="f2")

    The __getitem__ method allows getting an instance by ordinal or id.
    - memory.features[0]
    - memory.features["f1"]
    """

    __slots__ = ("_items", "_parent")

    def __init__(self, parent=None):
        super(DocumentIter, self).__init__()
        self._parent = parent
        self._items = []

    def __len__(self):
        return len(self._items)

    def _getitem(self, key):
        found = None
        if isinstance(key, int):
            found = self._items[key]
        elif isinstance(key, str):
            for item in self._items:
                if item.get("id") == key:
                    found = item
        if found is None:
            raise IndexError(key)
        return found

    def __getitem__(self, key):
        return self._getitem(key)

    def __iter__(self):
        return iter(list(self._items))

    def _add(self, item):
        self._items.append(item)

    def clear(self):
        del self._items[:]

    def _encode(self):
        return [item._encode() for item in self._items]

    def _decode(self, encoded_list):
        item_class_name = self.__class__.__name__.replace("Iter", "")
        module = importlib.import_module(self.__module__)
        object_class = getattr(module, item_class_name)
        self.clear()
        for item in encoded_list:
            self._add(object_class(parent=self._parent)._decode(item))
        return self

    def __str__(self):
        return yaml.safe_dump(self._encode(), sort_keys=False)

    def __eq__(self, other):
        return self.__str__() == other.__str__()

    def __hash__(self):
        return id(self)
