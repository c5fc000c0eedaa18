import pytest

from commands.check import CHECKERS, check_structure
from commands.common import kind_of, sizes_of
from functions.core.errors import CapacityError, UnknownEntryError
from functions.data_sources.corpus import CORPUS, build, entries, get_entry
from functions.infrastructure.documents import carrier_report


def small_arity(entry):
    return max(entry.min_arity, 2)


@pytest.mark.parametrize("entry", entries(), ids=lambda e: e.id)
def test_entry_builds_with_expected_sizes(entry):
    N = small_arity(entry)
    structure = build(entry.id, N)
    assert kind_of(structure) == entry.kind
    if entry.expected_size is not None:
        assert sizes_of(structure) == [entry.expected_size(n) for n in range(N + 1)]


@pytest.mark.parametrize("entry", entries(), ids=lambda e: e.id)
def test_entry_passes_its_checker(entry):
    structure = build(entry.id, small_arity(entry))
    if entry.kind in CHECKERS:
        report = check_structure(entry.kind, structure)
    else:
        report = carrier_report(structure)
    assert report.passed == entry.expected_pass, report.violations


def test_build_uses_active_max_arity(exhaustive):
    assert build("qo/ass").carrier.max_arity == exhaustive.max_arity


def test_unknown_id_lists_known_entries():
    with pytest.raises(UnknownEntryError) as e:
        get_entry("qo/nope")
    assert e.value.details["id"] == "qo/nope"
    assert e.value.details["known"] == sorted(CORPUS)
    assert e.value.kind == "unknown-id"


def test_entry_below_its_minimum_arity_is_refused():
    with pytest.raises(CapacityError) as e:
        build("qc/pointed-free-2", 2)
    assert e.value.details["min_arity"] == 3


def test_ids_are_prefixed_by_calculus_or_monoid():
    for entry in entries():
        prefix = entry.id.split("/")[0]
        assert prefix in ("qo", "qc", "qa", "monoid")
        if prefix != "monoid":
            assert prefix == entry.calculus
