import itertools
import random

import pytest

from framecxn.errors import FrozenNetworkError, UnknownCategoryError
from framecxn.grammar import (ConstructionNetwork, LINK_FE_ARGST,
                              PathStep, PrecedenceConstraint, RoleSlot,
                              canonical_signature)

from .generators import random_network

DITRANS_SLOTS = (
    RoleSlot("arg0", "np", (PathStep("up", "sentence"), PathStep("down", "vp"))),
    RoleSlot("arg1", "np", (PathStep("up", "vp"),)),
    RoleSlot("arg2", "np", (PathStep("up", "vp"),)),
)
DITRANS_CONSTRAINTS = (PrecedenceConstraint("arg2", "arg1"),)
DITRANS_SURFACE = "arg0(np)-v(v)-arg2(np)-arg1(np)"


def test_signature_is_permutation_invariant():
    signatures = {canonical_signature(perm, DITRANS_CONSTRAINTS)
                  for perm in itertools.permutations(DITRANS_SLOTS)}
    assert len(signatures) == 1


def test_signature_ignores_naming():
    # signatures are computed from structure alone; categories, node ids
    # and mnemonics never enter them, so a "renamed" copy is identical
    copy = tuple(RoleSlot(s.role, s.pos, s.path) for s in DITRANS_SLOTS)
    assert canonical_signature(copy, DITRANS_CONSTRAINTS) == \
        canonical_signature(DITRANS_SLOTS, DITRANS_CONSTRAINTS)


def test_signature_changes_with_structure():
    # oracle: the structures differ field by field, so signatures must too
    changed = (DITRANS_SLOTS[0],
               RoleSlot("arg1", "sbar", (PathStep("up", "vp"),)),
               DITRANS_SLOTS[2])
    assert canonical_signature(changed, DITRANS_CONSTRAINTS) != \
        canonical_signature(DITRANS_SLOTS, DITRANS_CONSTRAINTS)
    fewer = canonical_signature(DITRANS_SLOTS, ())
    assert fewer != canonical_signature(DITRANS_SLOTS, DITRANS_CONSTRAINTS)


def test_slot_path_shape_is_validated():
    with pytest.raises(ValueError):
        RoleSlot("arg0", "np", (PathStep("down", "vp"),))
    with pytest.raises(ValueError):
        RoleSlot("arg0", "np", (PathStep("up", "s"), PathStep("down", "vp"),
                                PathStep("up", "s")))


def test_find_or_add_frame_evoking_dedups():
    net = ConstructionNetwork()
    first, created = net.find_or_add_frame_evoking("tell", "verb")
    assert created and first.freq == 1
    assert first.mnemonic == "tell(verb)"
    again, created = net.find_or_add_frame_evoking("tell", "verb")
    assert again is first and not created and first.freq == 2


def test_first_ditransitive_mnemonic():
    net = ConstructionNetwork()
    cxn, created = net.find_or_add_argstruct(
        DITRANS_SLOTS, DITRANS_CONSTRAINTS, DITRANS_SURFACE)
    assert created
    assert cxn.mnemonic == "arg0(np)-v(v)-arg2(np)-arg1(np)-1"


def test_colliding_surface_gets_next_suffix():
    # same role/pos linear order, different paths: different signature
    net = ConstructionNetwork()
    first, _ = net.find_or_add_argstruct(
        DITRANS_SLOTS, DITRANS_CONSTRAINTS, DITRANS_SURFACE)
    other_slots = (
        RoleSlot("arg0", "np", (PathStep("up", "sentence"),)),
        RoleSlot("arg1", "np", (PathStep("up", "vp"),)),
        RoleSlot("arg2", "np", (PathStep("up", "vp"),)),
    )
    assert canonical_signature(other_slots, DITRANS_CONSTRAINTS) != \
        first.signature
    second, created = net.find_or_add_argstruct(
        other_slots, DITRANS_CONSTRAINTS, DITRANS_SURFACE)
    assert created
    assert second.mnemonic == "arg0(np)-v(v)-arg2(np)-arg1(np)-2"


def test_argstruct_dedups_across_slot_order():
    net = ConstructionNetwork()
    first, _ = net.find_or_add_argstruct(
        DITRANS_SLOTS, DITRANS_CONSTRAINTS, DITRANS_SURFACE)
    shuffled = (DITRANS_SLOTS[2], DITRANS_SLOTS[0], DITRANS_SLOTS[1])
    again, created = net.find_or_add_argstruct(
        shuffled, DITRANS_CONSTRAINTS, DITRANS_SURFACE)
    assert again is first and not created and first.freq == 2


def test_links_bump_and_validate():
    net = ConstructionNetwork()
    fe, _ = net.find_or_add_frame_evoking("tell", "verb")
    argst, _ = net.find_or_add_argstruct(DITRANS_SLOTS, DITRANS_CONSTRAINTS,
                                         DITRANS_SURFACE)
    rs, _ = net.find_or_add_roleset("tell.01")
    link = net.add_or_bump_link(fe.cat.id, argst.cat.id, LINK_FE_ARGST)
    assert link.weight == 1
    for _ in range(127):
        net.add_or_bump_link(fe.cat.id, argst.cat.id, LINK_FE_ARGST)
    assert link.weight == 128
    assert len(net.links) == 1
    with pytest.raises(UnknownCategoryError):
        net.add_or_bump_link(fe.cat.id, 999, LINK_FE_ARGST)
    with pytest.raises(ValueError):
        net.add_or_bump_link(fe.cat.id, rs.cat.id, LINK_FE_ARGST)


def test_adjacency_is_symmetric():
    net = random_network(random.Random(7))
    for link in net.links:
        assert net.link_between(link.a, link.b) is link
        assert net.link_between(link.b, link.a) is link


def test_signatures_unique_in_grown_network():
    net = random_network(random.Random(11))
    sigs = [c.signature for c in net.argst_cxns]
    for a, b in itertools.combinations(range(len(sigs)), 2):
        assert sigs[a] != sigs[b]


def test_group_frequency_sums_agree():
    net = random_network(random.Random(3), n_observations=90)
    fe = sum(c.freq for c in net.fe_cxns)
    argst = sum(c.freq for c in net.argst_cxns)
    roleset = sum(c.freq for c in net.roleset_cxns)
    assert fe == argst == roleset == 90


def test_frozen_network_rejects_mutation():
    net = ConstructionNetwork()
    net.find_or_add_frame_evoking("tell", "verb")
    net.freeze()
    with pytest.raises(FrozenNetworkError):
        net.find_or_add_frame_evoking("tell", "verb")
    with pytest.raises(FrozenNetworkError):
        net.find_or_add_roleset("tell.01")
