import logging

import pytest

import cbdt
from cbdt.featurespace import Feature, FeatureSpace
from .utils import common as utl


@pytest.fixture(scope="session")
def api():
    """Return an instance of the top level Api class"""
    return cbdt.api(loglevel=logging.DEBUG)


@pytest.fixture
def utils():
    return utl


@pytest.fixture
def p():
    return utl.problem


@pytest.fixture
def phones(api):
    """Price and storage of four phones, each bought or passed on"""
    return api.load_memory(utl.read_fixture("phones_memory.yaml"))


@pytest.fixture
def early_phones(api):
    """The phones memory before price 7 was ever seen"""
    return api.load_memory(utl.read_fixture("early_phones_memory.yaml"))


@pytest.fixture
def camera_phones(api):
    """The phones memory with the camera feature f3 = {none, 9}"""
    return api.load_memory(utl.read_fixture("camera_phones_memory.yaml"))


@pytest.fixture
def space():
    return FeatureSpace(
        [
            Feature("f1", ["5", "5.5", "7"], name="price"),
            Feature("f2", ["16", "32"], name="storage"),
        ]
    )
