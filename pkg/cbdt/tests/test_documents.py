import json

import pytest
import yaml

from cbdt.common import DocumentError
from cbdt.documents import (
    CaseDocument,
    MemoryDocument,
    QueryDocument,
    RateSnapshotDocument,
    UtilityDocument,
)


def test_memory_document_builder(api):
    document = api.memory()
    document.features.feature(id="f1", name="price", values=["5", "5.5"])
    document.actions = ["buy"]
    document.cases.case(problem={"f1": "5"}, action="buy", result="3/2")
    encoded = document.serialize(MemoryDocument.DICT)
    assert list(encoded.keys()) == ["features", "actions", "cases"]
    assert encoded["cases"][0]["result"] == 1.5
    assert encoded["features"][0]["default_rank"] == 0


def test_labels_are_strings(utils):
    document = MemoryDocument().deserialize(
        utils.read_fixture("phones_memory.yaml")
    )
    assert document.features[0].values == ["5", "5.5", "7"]
    assert document.cases[1].problem == {"f1": "5.5", "f2": "16"}


def test_json_and_yaml_agree(utils):
    document = MemoryDocument().deserialize(
        utils.read_fixture("camera_phones_memory.yaml")
    )
    from_json = json.loads(document.serialize(MemoryDocument.JSON))
    from_yaml = yaml.safe_load(document.serialize(MemoryDocument.YAML))
    assert from_json == from_yaml


def test_required_properties():
    try:
        CaseDocument(problem={"f1": "5"}, action="buy").serialize()
        pytest.fail("case without a result was serialized")
    except ValueError as e:
        assert "result" in str(e)


@pytest.mark.parametrize(
    "document",
    [
        {"problem": {"f1": "7"}, "delta": 2},
        {"problem": {"f1": "7"}, "delta": "x"},
        {"problem": {"f1": "7"}, "subspace": "f1"},
        {"problem": "f1=7"},
    ],
)
def test_query_validation(document):
    with pytest.raises((TypeError, DocumentError)):
        QueryDocument().deserialize(document)


def test_duplicate_feature_ids_rejected(utils):
    document = utils.read_fixture("phones_memory.yaml").replace(
        "- id: f2", "- id: f1"
    )
    try:
        MemoryDocument().deserialize(document)
        pytest.fail("duplicate feature id was accepted")
    except DocumentError as e:
        assert "f1" in str(e)


def test_utility_choice():
    utility = UtilityDocument()
    assert utility.choice == "identity"
    utility.table.entry(result=5, utility=1)
    assert utility.choice == "table"
    utility.affine.scale = 2
    encoded = utility.serialize(UtilityDocument.DICT)
    assert encoded["choice"] == "affine"
    assert "table" not in encoded


def test_rate_snapshot_defaults(api):
    snapshot = api.rate_snapshot()
    snapshot.values.rate("f1", "1/3")
    encoded = snapshot.serialize(RateSnapshotDocument.DICT)
    assert encoded["values"] == [{"feature": "f1", "rate": "1/3"}]
    assert encoded["batch_size"] == 1
    assert snapshot.get("default") is None
