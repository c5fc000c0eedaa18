import json

import pytest

from commands.check import check_structure
from commands.common import kind_of
from functions.core.algtheory import free_module
from functions.core.errors import CapacityError, DocumentError
from functions.core.operads import Operad
from functions.core.symseq import tensor
from functions.data_sources.corpus import build, pointed_monad
from functions.infrastructure import documents
from functions.infrastructure.documents import (Document, carrier_report, decode, document_schema, dumps, encode,
                                                load_document, load_structure, loads, report_schema, write_document)

ROUND_TRIP = [
    ("qo/com-pos", 3),
    ("qo/ass", 3),
    ("qo/tensor-unit", 2),
    ("qo/com-pos-terminal", 3),
    ("qc/pointed", 2),
    ("qc/powerset", 2),
    ("qc/h2", 2),
    ("qc/pointed-free-2", 3),
    ("qa/h2", 2),
    ("qa/monoid-functions", 2),
    ("qa/terminal", 2),
    ("monoid/xor", 2),
]


@pytest.mark.parametrize("entry_id,N", ROUND_TRIP)
def test_documents_survive_a_round_trip(entry_id, N):
    text = dumps(encode(build(entry_id, N)))
    again = dumps(encode(decode(loads(text))))
    assert again == text


@pytest.mark.parametrize("entry_id,kind", [
    ("qo/ass", "operad"),
    ("qo/com-pos-terminal", "algebra"),
    ("qc/pointed", "monad"),
    ("qc/pointed-free-2", "module"),
    ("qa/monoid-functions-xor", "algebrad"),
])
def test_decoded_structures_still_satisfy_their_laws(entry_id, kind):
    structure = decode(loads(dumps(encode(build(entry_id, 3 if kind == "module" else 2)))))
    assert kind_of(structure) == kind
    report = check_structure(kind, structure)
    assert report.passed, report.violations


def test_indices_are_one_based_in_documents():
    doc = encode(build("qo/ass", 2))
    # the identity is the first element of S_2 and fixes every point
    assert doc.actions[2] == [[1, 2], [2, 1]]
    assert doc.structure.unit == 1
    assert doc.format_version == 1


def test_derived_sequences_export(tmp_path):
    seq = tensor(build("qo/com-pos", 2).carrier, build("qo/com-pos", 2).carrier)
    path = tmp_path / "tensor.json"
    write_document(encode(seq), str(path))
    back = load_structure(str(path))
    assert back.sizes() == seq.sizes()


def test_corpus_reference_loads_at_requested_arity():
    ass = load_structure("corpus:qo/ass", 2)
    assert isinstance(ass, Operad)
    assert ass.max_arity == 2
    assert load_document("corpus:qo/ass", 2).kind == "operad"


def test_bad_json_is_a_document_error():
    with pytest.raises(DocumentError) as e:
        loads("{not json", "broken.json")
    assert e.value.details["source"] == "broken.json"
    assert e.value.exit_code == 2


def test_wrong_format_version_is_refused():
    data = json.loads(dumps(encode(build("qo/ass", 2))))
    data["format_version"] = 2
    with pytest.raises(DocumentError, match="format_version"):
        loads(json.dumps(data))


def test_kind_must_belong_to_calculus():
    data = json.loads(dumps(encode(build("qo/ass", 2))))
    data["calculus"] = "qa"
    with pytest.raises(DocumentError):
        loads(json.dumps(data))


def test_unknown_fields_are_refused():
    data = json.loads(dumps(encode(build("qc/h2", 2))))
    data["colour"] = "blue"
    with pytest.raises(DocumentError):
        loads(json.dumps(data))


def test_missing_sections_are_refused():
    data = json.loads(dumps(encode(build("qo/ass", 2))))
    del data["structure"]
    with pytest.raises(DocumentError, match="structure"):
        loads(json.dumps(data))


def test_out_of_range_action_entry_is_a_document_error():
    data = json.loads(dumps(encode(build("qo/ass", 2))))
    data["actions"][2][0][1] = 3
    doc = loads(json.dumps(data))
    with pytest.raises(DocumentError) as e:
        decode(doc)
    assert e.value.details["index"] == 3


def test_wrong_column_count_is_a_document_error():
    data = json.loads(dumps(encode(build("qo/ass", 2))))
    data["actions"][2][0] = [1]
    with pytest.raises(DocumentError) as e:
        decode(loads(json.dumps(data)))
    assert e.value.details["order"] == 2


def non_action_document():
    data = json.loads(dumps(encode(build("qo/ass", 2))))
    # in range, but the transposition no longer acts bijectively
    data["actions"][2][0] = [1, 1]
    return loads(json.dumps(data))


def test_in_range_non_action_is_refused_on_load(tmp_path):
    doc = non_action_document()
    with pytest.raises(DocumentError) as e:
        decode(doc)
    assert e.value.details["law"] == "action"
    assert e.value.details["witness"]["arity"] == 2
    path = tmp_path / "non-action.json"
    write_document(doc, str(path))
    with pytest.raises(DocumentError) as e:
        load_structure(str(path))
    assert e.value.details["source"] == str(path)


def test_broken_carrier_can_still_be_loaded_for_reporting():
    operad = decode(non_action_document(), validate=False)
    report = carrier_report(operad)
    assert report.failed_laws == {"action"}


def test_monoid_tables_are_validated_on_load():
    data = json.loads(dumps(encode(build("monoid/xor", 2))))
    data["structure"]["table"][0][1] = 1
    with pytest.raises(DocumentError) as e:
        decode(loads(json.dumps(data)))
    assert e.value.details["law"] in {"unit", "commutativity", "associativity"}


def test_missing_file_is_a_document_error(tmp_path):
    with pytest.raises(DocumentError, match="cannot read"):
        load_structure(str(tmp_path / "absent.json"))


def test_unsupported_objects_cannot_be_encoded():
    with pytest.raises(DocumentError) as e:
        encode(object())
    assert e.value.details["type"] == "object"


def test_export_limit_is_enforced(monkeypatch):
    monkeypatch.setattr(documents, "EXPORT_LIMIT", 3)
    with pytest.raises(CapacityError) as e:
        encode(build("qo/ass", 3))
    assert e.value.details["limit"] == 3


def test_partial_modules_are_not_exported():
    module = free_module(pointed_monad(2), 2)
    with pytest.raises(CapacityError) as e:
        encode(module)
    assert e.value.details == {"elements": 3, "max_arity": 2}


def test_schemas_are_published():
    assert "kind" in document_schema()["properties"]
    assert "exit_code" in report_schema()["properties"]


def test_document_model_fills_defaults():
    doc = Document(calculus="qa", kind="monoid", structure={"table": [[1]], "unit": 1, "elements": [0]})
    assert doc.max_arity == 0
    assert doc.format_version == 1
