"""The bundled catalog: loading, validation and search."""

import pytest

from groupcensus import (EXPECTED_GROUP_COUNTS, Signature, catalog_search,
                         catalog_validate, census, load_catalog)


def test_load_shape():
    entries = load_catalog()
    assert len(entries) == 74
    labels = [e.label for e in entries]
    assert len(set(labels)) == 74
    keys = [(e.order, e.index) for e in entries]
    assert keys == sorted(keys)
    assert all(1 <= e.order <= 24 for e in entries)


def test_expected_counts_table():
    assert [EXPECTED_GROUP_COUNTS[n] for n in range(1, 25)] == [
        1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5,
        1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15]
    assert sum(EXPECTED_GROUP_COUNTS.values()) == 74


def test_entries_close_to_stated_order():
    for entry in load_catalog():
        assert entry.build().order == entry.order


def test_catalog_validate_passes():
    report = catalog_validate()
    assert report.passed, report.failures()
    names = {c.name for c in report.sweep}
    assert {"catalog_load", "per_order_counts", "pairwise_distinct"} <= names


def test_search_elementary_abelian():
    hits = catalog_search(24, delta=0)
    assert [e.label for e, _ in hits] == [
        "C1", "C2", "C2xC2", "C2xC2xC2", "C2xC2xC2xC2"]


def test_search_delta_two():
    labels = {e.label for e, _ in catalog_search(24, delta=2)}
    assert labels == {"C4xC2", "D8xC2", "C6", "D12"}


def test_search_sigma_4444():
    hits = catalog_search(16, sigma=Signature.of(4, 4, 4, 4))
    assert {e.label for e, _ in hits} == {"C4xC2xC2", "(C2xC2):C4", "Q8:C2"}


def test_search_bounds():
    with pytest.raises(ValueError):
        catalog_search(25)
    assert catalog_search(1)[0][0].label == "C1"


def test_search_reports_are_censuses(catalog):
    for entry, report in catalog_search(24):
        rebuilt = census(entry.build())
        assert rebuilt == report
