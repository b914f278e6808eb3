"""Isomorphism testing: invariants, backtracking, and the supported bound."""

import pytest

from groupcensus import (Permutation, UnsupportedOrderError,
                         action_from_generator_images, center,
                         conjugacy_classes, derived_subgroup, direct_product,
                         extend_generator_map, generated_subgroup,
                         generating_set, is_isomorphic, make_cyclic,
                         make_dicyclic, make_dihedral, make_symmetric,
                         semidirect_product)


def test_known_isomorphic_pairs():
    assert is_isomorphic(make_dihedral(6), make_symmetric(3))
    c4xc2 = direct_product(make_cyclic(4), make_cyclic(2))
    from groupcensus import inversion_action
    twisted = semidirect_product(c4xc2, make_cyclic(2), inversion_action(c4xc2))
    assert is_isomorphic(twisted, direct_product(make_dihedral(8), make_cyclic(2)))


def test_known_non_isomorphic_pairs():
    assert not is_isomorphic(make_dicyclic(8), make_dihedral(8))
    assert not is_isomorphic(make_cyclic(4),
                             direct_product(make_cyclic(2), make_cyclic(2)))
    assert not is_isomorphic(make_cyclic(6), make_cyclic(8))


def test_backtracking_separates_invariant_twins():
    # C4:C4 and Q8xC2 agree on order, order histogram, centre size, derived
    # size and class sizes; only the search can tell them apart
    c4 = make_cyclic(4)
    inv = Permutation(tuple(c4.inverse))
    action = action_from_generator_images(make_cyclic(4), c4, {1: inv})
    c4_by_c4 = semidirect_product(c4, make_cyclic(4), action)
    q8xc2 = direct_product(make_dicyclic(8), make_cyclic(2))
    assert len(center(c4_by_c4)) == len(center(q8xc2)) == 4
    assert sorted(c4_by_c4.element_orders()) == sorted(q8xc2.element_orders())
    assert not is_isomorphic(c4_by_c4, q8xc2)


def test_reflexive_and_symmetric_on_catalog(catalog):
    for _entry, table, _report in catalog:
        assert is_isomorphic(table, table)
    same_order = [(a, b) for _, a, _ in catalog for _, b, _ in catalog
                  if a.order == b.order]
    for a, b in same_order:
        assert is_isomorphic(a, b) == is_isomorphic(b, a)


def test_unsupported_order_raises():
    big = direct_product(make_cyclic(8), make_cyclic(8))  # order 64
    with pytest.raises(UnsupportedOrderError):
        is_isomorphic(big, big)
    # order 32 is within the guaranteed bound
    d8c2c2 = direct_product(direct_product(make_cyclic(2), make_cyclic(2)),
                            make_dihedral(8))
    assert is_isomorphic(d8c2c2, d8c2c2)


def test_center_derived_classes():
    s3 = make_symmetric(3)
    assert center(s3) == (0,)
    assert len(derived_subgroup(s3)) == 3
    assert sorted(len(c) for c in conjugacy_classes(s3)) == [1, 2, 3]
    q8 = make_dicyclic(8)
    assert len(center(q8)) == 2
    assert sorted(len(c) for c in conjugacy_classes(make_symmetric(4))) == \
        [1, 3, 6, 6, 8]
    c6 = make_cyclic(6)
    assert center(c6) == tuple(range(6))
    assert derived_subgroup(c6) == (0,)


def test_generating_set_generates():
    for g in (make_cyclic(12), make_dicyclic(16), make_symmetric(4)):
        gens = generating_set(g)
        assert generated_subgroup(g, gens).order == g.order
    klein4 = make_cyclic(2)
    for _ in range(3):
        klein4 = direct_product(klein4, make_cyclic(2))
    assert len(generating_set(klein4)) == 4


def test_extend_generator_map():
    g = make_symmetric(3)
    gens = generating_set(g)
    identity_images = {x: x for x in gens}
    assert extend_generator_map(g, g, identity_images) == list(range(g.order))
    # sending an order-3 element onto an order-2 element cannot extend
    three = next(x for x in range(6) if g.element_orders()[x] == 3)
    two = next(x for x in range(6) if g.element_orders()[x] == 2)
    assert extend_generator_map(g, g, {three: two}) is None
