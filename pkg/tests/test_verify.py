"""The classification claims, the exhaustive sweeps and the property suite."""

import pytest

from groupcensus import (Signature, census, explore, is_isomorphic,
                         known_groups_for, property_suite, theorem_claims,
                         verify_all, verify_theorem)
from groupcensus.groups import generated_subgroup, make_dihedral
from groupcensus.verify import _least_generators_by_subgroup


def test_claim_lists():
    claims = theorem_claims()
    assert [c.delta for c in claims] == [1, 2, 3, 4, 5]
    assert [len(c.groups) for c in claims] == [4, 4, 3, 11, 3]
    assert sum(len(c.groups) for c in claims) == 25
    assert {r.label for r in claims[2].groups} == {"Q8", "C5", "D10"}
    c3c4 = next(r for r in claims[4].groups if r.label == "C3:C4")
    assert c3c4.expected_sigma == Signature.of(3, 4, 4, 4, 6)


def test_claims_census_and_construction():
    for claim in theorem_claims():
        for recipe in claim.groups:
            table = recipe.build()
            report = census(table)
            assert report.delta == claim.delta, recipe.label
            assert report.signature == recipe.expected_sigma, recipe.label


def test_all_25_groups_pairwise_distinct():
    built = [(claim.delta, recipe.label, recipe.build())
             for claim in theorem_claims() for recipe in claim.groups]
    for i in range(len(built)):
        for j in range(i + 1, len(built)):
            a, b = built[i][2], built[j][2]
            if a.order != b.order:
                continue
            assert not is_isomorphic(a, b), (built[i][1], built[j][1])


@pytest.mark.parametrize("delta", [1, 2, 3, 4, 5])
def test_verify_theorem_passes(delta):
    report = verify_theorem(delta)
    assert report.passed, report.failures()
    assert len(report.claims) == [4, 4, 3, 11, 3][delta - 1]


def test_verify_theorem_rejects_bad_delta():
    with pytest.raises(ValueError):
        verify_theorem(6)


def test_verify_all():
    report = verify_all()
    assert report.passed, report.failures()
    assert len(report.claims) == 25
    payload = report.to_json_dict()
    assert set(payload) == {"claims", "sweep", "properties", "pass"}
    assert payload["pass"] is True


def test_property_suite():
    report = property_suite()
    assert report.passed, report.failures()
    assert [c.name for c in report.properties] == [
        "doubling", "odd_4_count_2groups", "sigma_generators_index",
        "frobenius_divisibility", "order4_conjugation_squares"]


def test_sigma_generator_subgroup_of_d12():
    # sigma(D12) = (3, 6); its representatives generate the rotation C6
    d12 = make_dihedral(12)
    gens = _least_generators_by_subgroup(d12)
    sub = generated_subgroup(d12, gens)
    assert sub.order == 6
    assert d12.order // sub.order == 2


# ---------------------------------------------------------------------------
# known groups per signature


def test_known_groups_families():
    labels = lambda sig: [r.label for r in known_groups_for(sig)]
    assert labels(Signature.of(4, 8)) == ["C8", "D16"]
    assert labels(Signature.of(5)) == ["C5", "D10"]
    assert labels(Signature.of(3, 6)) == ["C6", "D12"]
    assert labels(Signature.of(11, 22)) == ["C22", "D44"]
    assert labels(Signature.of(4, 4, 4)) == ["Q8"]
    assert len(known_groups_for(Signature.of(4, 4, 4, 4))) == 4
    assert len(known_groups_for(Signature.of(3, 3, 3, 3))) == 3
    assert known_groups_for(Signature.of(3, 9)) is None
    assert known_groups_for(Signature.of(6)) is None


def test_known_groups_realize_their_signature():
    for sig in (Signature.of(11, 22), Signature.of(4, 4), Signature.of(7)):
        for recipe in known_groups_for(sig):
            report = census(recipe.build())
            assert report.signature == sig, recipe.label


# ---------------------------------------------------------------------------
# exploration mode


def test_explore_delta_6(catalog):
    survivors = explore(6)
    by_sig = {s.signature.entries: s for s in survivors}
    assert (4, 4, 4, 4, 4, 4) in by_sig
    assert (5, 10) in by_sig
    q8c2 = by_sig[(4, 4, 4, 4, 4, 4)]
    assert any(e.label == "Q8xC2" and r.delta == 6 for e, r in q8c2.witnesses)
    a_2a = by_sig[(5, 10)]
    assert {e.label for e, _ in a_2a.witnesses} == {"C10", "D20"}
    assert a_2a.known == ("C10", "D20")
    # survivors without a completeness proof stay undecided
    assert by_sig[(4, 4, 4, 4, 4, 4)].known is None
    # every catalog group with delta 6 carries a surviving signature
    for entry, _table, report in catalog:
        if report.delta == 6:
            assert report.signature.entries in by_sig, entry.label


def test_explore_classified_range():
    survivors = explore(3)
    by_sig = {s.signature.entries: s for s in survivors}
    assert set(by_sig) == {(4, 4, 4), (5,)}
    assert by_sig[(4, 4, 4)].known == ("Q8",)
    assert by_sig[(5,)].known == ("C5", "D10")
