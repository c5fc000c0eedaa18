import json

import pytest

import main
from functions.data_sources.corpus import CORPUS, associative
from functions.infrastructure.documents import decode, dumps, encode, loads, write_document


def run(capsys, *argv):
    code = main.main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, "--json", *argv)
    return code, json.loads(out)


@pytest.fixture
def broken_ass(tmp_path):
    path = tmp_path / "broken-ass.json"
    write_document(encode(associative(2).with_entry((1, 1), (0, 0, 0), 1)), str(path))
    return str(path)


@pytest.fixture
def non_action_ass(tmp_path):
    data = json.loads(dumps(encode(associative(2))))
    data["actions"][2][0] = [1, 1]
    path = tmp_path / "non-action.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_validate_passes_on_corpus_entries(capsys):
    code, report = run_json(capsys, "validate", "corpus:qo/ass", "--max-arity", "3")
    assert code == 0
    assert report["ok"]
    assert report["summary"]["sizes"] == [1, 1, 2, 6]


def test_validate_monoid(capsys):
    code, report = run_json(capsys, "validate", "corpus:monoid/and")
    assert code == 0
    assert set(report["laws"]) == {"unit", "closure", "commutativity", "associativity"}


def test_broken_carrier_is_refused_by_computing_commands(capsys, non_action_ass):
    code, report = run_json(capsys, "tensor", non_action_ass, "corpus:qo/com-pos", "--max-arity", "2")
    assert code == 2
    assert report["error"] == "document-error"
    assert report["details"]["law"] == "action"


def test_validate_reports_a_broken_carrier(capsys, non_action_ass):
    code, report = run_json(capsys, "validate", non_action_ass)
    assert code == 1
    assert not report["ok"]
    assert report["violations"][0]["law"] == "action"


def test_check_passing_operad_prints_text(capsys):
    code, out = run(capsys, "check", "operad", "corpus:qo/ass", "--max-arity", "2")
    assert code == 0
    assert out.startswith("check operad: ok")


def test_check_reports_witnesses_with_exit_one(capsys, broken_ass):
    code, report = run_json(capsys, "check", "operad", broken_ass)
    assert code == 1
    assert not report["ok"]
    assert report["violations"]
    assert all(v["witness"] for v in report["violations"])


def test_check_kind_mismatch_is_a_domain_error(capsys):
    code, report = run_json(capsys, "check", "monad", "corpus:qo/ass", "--max-arity", "2")
    assert code == 2
    assert report["error"] == "domain-error"
    assert report["details"] == {"expected": "monad", "got": "operad"}


def test_check_algebrad_and_module(capsys):
    assert run(capsys, "check", "algebrad", "corpus:qa/monoid-functions", "--max-arity", "2")[0] == 0
    assert run(capsys, "check", "module", "corpus:qc/pointed-free-2", "--max-arity", "3")[0] == 0


def test_tensor_writes_a_document(capsys, tmp_path):
    out = tmp_path / "com2.json"
    code, report = run_json(capsys, "tensor", "corpus:qo/com-pos", "corpus:qo/com-pos", "-o", str(out),
                            "--max-arity", "3")
    assert code == 0
    assert report["summary"]["sizes"] == [0, 0, 2, 6]
    assert loads(out.read_text(encoding="utf-8")).kind == "symseq"


def test_compose_prints_the_document_to_stdout(capsys):
    code, out = run(capsys, "compose", "corpus:qo/com-pos", "corpus:qo/com-pos", "--max-arity", "3")
    assert code == 0
    assert decode(loads(out)).sizes() == [0, 1, 2, 5]


def test_compose_across_calculi_is_refused(capsys):
    code, report = run_json(capsys, "compose", "corpus:qo/com-pos", "corpus:qc/h2", "--max-arity", "2")
    assert code == 2
    assert report["error"] == "domain-error"


def test_unbounded_composition_exit_code(capsys):
    code, report = run_json(capsys, "compose", "corpus:qo/ass", "corpus:qo/tensor-unit", "--max-arity", "2")
    assert code == 2
    assert report["error"] == "unbounded-composition-error"


@pytest.mark.parametrize("argv,size", [
    (["eval", "corpus:qo/ass", "--set", "2", "--max-arity", "2"], 7),
    (["eval", "corpus:qc/h2", "--set", "2", "--max-arity", "2"], 4),
    (["eval", "corpus:qa/h2", "--monoid", "corpus:monoid/xor", "--max-arity", "2"], 4),
    (["eval", "corpus:qa/h2", "--monoid", "corpus:monoid/trivial", "--max-arity", "2"], 1),
])
def test_eval(capsys, argv, size):
    code, report = run_json(capsys, *argv)
    assert code == 0
    assert report["summary"]["size"] == size


def test_eval_qa_without_monoid(capsys):
    code, report = run_json(capsys, "eval", "corpus:qa/h2", "--max-arity", "2")
    assert code == 2
    assert report["error"] == "precondition-error"


def test_eval_with_non_monoid(capsys):
    code, report = run_json(capsys, "eval", "corpus:qa/h2", "--monoid", "corpus:qa/h1", "--max-arity", "2")
    assert code == 2
    assert report["error"] == "domain-error"


def test_iso(capsys):
    assert run(capsys, "iso", "corpus:qo/com-pos", "corpus:qo/com-pos", "--max-arity", "3")[0] == 0
    code, report = run_json(capsys, "iso", "corpus:qo/ass", "corpus:qo/com-pos", "--max-arity", "2")
    assert code == 1
    assert report["summary"]["arities"] == {"0": False, "1": True, "2": False}


def test_iso_needs_symmetric_sequences(capsys):
    code, report = run_json(capsys, "iso", "corpus:qc/h1", "corpus:qc/h1", "--max-arity", "2")
    assert code == 2
    assert report["error"] == "domain-error"


def test_corpus_list(capsys):
    code, report = run_json(capsys, "corpus", "list")
    assert code == 0
    assert [e["id"] for e in report["summary"]["entries"]] == list(CORPUS)


def test_corpus_export_to_stdout(capsys):
    code, out = run(capsys, "corpus", "export", "qo/ass", "--max-arity", "2")
    assert code == 0
    assert out == dumps(encode(associative(2)))


def test_unknown_corpus_id(capsys):
    code, report = run_json(capsys, "corpus", "export", "qo/nope")
    assert code == 2
    assert report["error"] == "unknown-id"
    assert "qo/ass" in report["details"]["known"]


def test_max_arity_past_the_cap(capsys):
    code, report = run_json(capsys, "validate", "corpus:qo/ass", "--max-arity", "9")
    assert code == 2
    assert report["error"] == "capacity-error"


def test_oracle_eval_qc(capsys):
    code, report = run_json(capsys, "oracle", "eval-qc", "corpus:qc/h2", "--set", "2", "--max-arity", "2")
    assert code == 0
    assert report["summary"]["size"] == report["summary"]["fast_size"] == 4
    assert report["summary"]["stabilized"]


def test_oracle_laws(capsys, broken_ass):
    assert run(capsys, "oracle", "laws", "corpus:qo/ass", "--max-arity", "2")[0] == 0
    code, report = run_json(capsys, "oracle", "laws", broken_ass)
    assert code == 1
    assert report["violations"]


def test_oracle_bijection(capsys):
    code, report = run_json(capsys, "oracle", "bijection", "corpus:qo/ass", "corpus:qo/ass", "--arity", "2",
                            "--max-arity", "2")
    assert code == 0
    assert sorted(report["summary"]["bijection"]) == [1, 2]
    code, report = run_json(capsys, "oracle", "bijection", "corpus:qo/ass", "corpus:qo/com-pos", "--arity", "2",
                            "--max-arity", "2")
    assert code == 1
    assert report["summary"]["bijection"] is None


@pytest.mark.parametrize("which,field", [("document", "actions"), ("report", "violations")])
def test_schema(capsys, which, field):
    code, out = run(capsys, "schema", which)
    assert code == 0
    assert field in json.loads(out)["properties"]


def test_max_arity_flag_overrides_the_environment(capsys, monkeypatch):
    monkeypatch.setenv("VECTOID_MAX_ARITY", "2")
    monkeypatch.setenv("VECTOID_CHECK_PROFILE", "quick")
    code, report = run_json(capsys, "validate", "corpus:qo/ass", "--max-arity", "3")
    assert code == 0
    assert report["summary"]["sizes"] == [1, 1, 2, 6]
    code, report = run_json(capsys, "validate", "corpus:qo/ass")
    assert report["summary"]["sizes"] == [1, 1, 2]
