"""Exclusion rules against the hand-tabulated exclusion and revised tables."""

import pytest

from groupcensus import (RECORDED_JUSTIFICATIONS, Signature, apply_rules,
                         enumerate_candidates, revised_table, rule_registry)

RULE_IDS = [
    "missing_divisor", "sylow_count", "coprime_product", "unique_3_with_4",
    "two_4s_with_3", "unique_3_two_6s", "unique_4_with_3", "odd_4s",
    "unique_6_repeated_3", "pattern_36666", "pattern_445", "pattern_448",
    "pattern_34466",
]

REVISED = {
    1: {(3,), (4,)},
    2: {(4, 4), (3, 6)},
    3: {(4, 4, 4), (5,)},
    4: {(3, 3, 3, 3), (4, 4, 4, 4), (3, 6, 6, 6), (4, 8)},
    5: {(7,), (3, 4, 4, 4, 6)},
}

EXCLUSION_COUNTS = {1: 1, 2: 4, 3: 12, 4: 23, 5: 47}


def recorded_by_delta(delta):
    return {entries: rule for entries, rule in RECORDED_JUSTIFICATIONS.items()
            if Signature(entries).delta == delta}


def test_registry_ids_and_order():
    assert [rule.id for rule in rule_registry()] == RULE_IDS
    for rule in rule_registry():
        assert rule.description


def test_spot_verdicts():
    v = apply_rules(Signature.of(6))
    assert v.excluded and "missing_divisor" in v.fired_rules
    v = apply_rules(Signature.of(3, 3))
    assert "sylow_count" in v.fired_rules
    v = apply_rules(Signature.of(3, 4))
    assert "coprime_product" in v.fired_rules
    assert not apply_rules(Signature.of(7)).excluded
    assert not apply_rules(Signature.of(4, 4, 4, 4)).excluded
    assert not apply_rules(Signature.of(3, 4, 4, 4, 6)).excluded


def test_verdict_shape():
    v = apply_rules(Signature.of(3, 4, 4, 6, 6))
    assert v.excluded == bool(v.fired_rules)
    assert v.recorded_rule == "pattern_34466"
    survivor = apply_rules(Signature.of(4, 4))
    assert survivor.fired_rules == () and not survivor.excluded
    assert survivor.recorded_rule is None


def test_general_rules_subsume_bespoke_patterns():
    # the two-4s rule also covers (3,4,4,6,6); the unique-4 rule also
    # covers (3,4); both verdicts must still carry the recorded rule
    v = apply_rules(Signature.of(3, 4, 4, 6, 6))
    assert "two_4s_with_3" in v.fired_rules
    assert "pattern_34466" in v.fired_rules
    v = apply_rules(Signature.of(3, 4))
    assert "unique_4_with_3" in v.fired_rules
    assert "coprime_product" in v.fired_rules


@pytest.mark.parametrize("delta", [1, 2, 3, 4, 5])
def test_exclusion_tables_exact(delta):
    recorded = recorded_by_delta(delta)
    assert len(recorded) == EXCLUSION_COUNTS[delta]
    excluded = {}
    for cand in enumerate_candidates(delta):
        verdict = apply_rules(cand.signature)
        if verdict.excluded:
            excluded[cand.signature.entries] = verdict
    assert set(excluded) == set(recorded)
    for entries, verdict in excluded.items():
        assert recorded[entries] in verdict.fired_rules, entries
        assert verdict.recorded_rule == recorded[entries]


@pytest.mark.parametrize("delta", [1, 2, 3, 4, 5])
def test_revised_tables_exact(delta):
    assert {s.entries for s in revised_table(delta)} == REVISED[delta]


def test_revised_table_sorted_and_deterministic():
    first = revised_table(6)
    assert first == revised_table(6)
    assert first == sorted(first)


def test_no_rule_fires_on_real_groups(catalog):
    # every rule encodes a nonexistence proof, so firing on the signature
    # of an actual group would falsify the rule or the census
    for entry, _table, report in catalog:
        verdict = apply_rules(report.signature)
        assert not verdict.excluded, (entry.label, verdict.fired_rules)
