"""Single-pass grammar learning from annotated utterances.

For each roleset instance the learner resolves the frame-evoking element
and every core role to a constituent node, derives the up-then-down
label path from each role node to the frame-evoking node, adds
precedence constraints between slots whose paths would otherwise be
indistinguishable, and then builds or reuses the three constructions,
bumping the triangle of categorial links between them.

Instances are skipped (leaving the network untouched) when a role or
frame-evoking span has no exact constituent, when the instance carries
no core role at all, or when a role node dominates the frame-evoking
node so that no up-then-down path exists.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .corpus import ConstNode, FrameInstance, Utterance
from .errors import DegenerateNestingError
from .grammar import (DOWN, UP, ConstructionNetwork, LINK_ARGST_ROLESET,
                      LINK_FE_ARGST, LINK_FE_ROLESET, PathStep,
                      PrecedenceConstraint, RoleSlot)


class SkipReason(enum.Enum):
    NON_CONSTITUENT_ROLE = "non-constituent-role"
    NO_CORE_ROLES = "no-core-roles"
    DEGENERATE_NESTING = "degenerate-nesting"


@dataclass
class LearnStats:
    instances_seen: int = 0
    instances_learnt: int = 0
    instances_skipped: int = 0
    skip_reasons: dict[str, int] = field(default_factory=dict)
    utterances: int = 0

    def note(self, reason: SkipReason | None):
        self.instances_seen += 1
        if reason is None:
            self.instances_learnt += 1
        else:
            self.instances_skipped += 1
            key = reason.value
            self.skip_reasons[key] = self.skip_reasons.get(key, 0) + 1

    def to_json(self) -> dict:
        return {
            "utterances": self.utterances,
            "instances_seen": self.instances_seen,
            "instances_learnt": self.instances_learnt,
            "instances_skipped": self.instances_skipped,
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
        }


def extract_path(role_node: ConstNode, v_node: ConstNode) -> tuple[PathStep, ...]:
    """Label path from a role node to the frame-evoking node.

    Ascends from the role node recording each ancestor up to and
    including the lowest common ancestor, then records every node
    strictly between the LCA and the frame-evoking node on the way
    down.  Both endpoints are excluded.

    Raises DegenerateNestingError when one node dominates the other
    (including equality): the up-then-down schema cannot represent
    dominance.
    """
    if role_node is v_node:
        raise DegenerateNestingError("role node equals the frame-evoking node")
    # in a tree, overlapping spans imply dominance
    if not (role_node.end <= v_node.start or v_node.end <= role_node.start):
        raise DegenerateNestingError(
            f"role node [{role_node.start},{role_node.end}) and frame-evoking "
            f"node [{v_node.start},{v_node.end}) are nested")

    v_ancestors = {}
    node = v_node.parent
    while node is not None:
        v_ancestors[id(node)] = node
        node = node.parent

    up: list[PathStep] = []
    lca = None
    node = role_node.parent
    while node is not None:
        up.append(PathStep(UP, node.label))
        if id(node) in v_ancestors:
            lca = node
            break
        node = node.parent
    if lca is None:
        raise DegenerateNestingError("nodes share no ancestor")

    down: list[PathStep] = []
    node = v_node.parent
    while node is not lca:
        down.append(PathStep(DOWN, node.label))
        node = node.parent
    down.reverse()
    return tuple(up) + tuple(down)


def linear_key(node: ConstNode) -> tuple[int, int]:
    """Linear order of constituents: span start, then span end."""
    return (node.start, node.end)


def detect_precedence(slot_nodes) -> tuple[PrecedenceConstraint, ...]:
    """Precedence constraints between indistinguishable slots.

    ``slot_nodes`` pairs each RoleSlot with its source node.  For every
    two slots with identical (pos, path) one constraint is emitted,
    ordered by the source nodes' linear position; distinguishable pairs
    get none.
    """
    groups: dict[tuple, list] = {}
    for slot, node in slot_nodes:
        groups.setdefault((slot.pos, slot.path), []).append((slot, node))
    constraints = []
    for members in groups.values():
        if len(members) < 2:
            continue
        members.sort(key=lambda sn: (linear_key(sn[1]), sn[0].role))
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                constraints.append(PrecedenceConstraint(
                    members[i][0].role, members[j][0].role))
    constraints.sort(key=lambda c: (c.before, c.after))
    return tuple(constraints)


def _resolve_v(utt: Utterance, frame: FrameInstance) -> ConstNode | None:
    start, end = frame.v_span
    if end - start == 1:
        return utt.tree.leaf_covering(start)
    return utt.tree.node_for_span(frame.v_span)


def _fe_features(utt: Utterance, frame: FrameInstance,
                 v_node: ConstNode) -> tuple[str, str]:
    start, end = frame.v_span
    if end - start == 1:
        tok = utt.tokens[start]
        return tok.lemma, tok.pos
    # multi-token frame-evoking element: join the lemmas, use the node tag
    lemma = " ".join(utt.tokens[i].lemma for i in range(start, end))
    return lemma, v_node.label


def learn_instance(net: ConstructionNetwork, utt: Utterance,
                   frame: FrameInstance) -> SkipReason | None:
    """Learn one roleset instance; returns a SkipReason or None on success.

    On success three constructions exist afterwards (found or added) and
    the three links between their categories are one observation
    heavier.  On a skip the network is untouched.
    """
    if not frame.roles:
        return SkipReason.NO_CORE_ROLES
    v_node = _resolve_v(utt, frame)
    if v_node is None:
        return SkipReason.NON_CONSTITUENT_ROLE

    role_nodes: list[tuple[str, ConstNode]] = []
    for role in sorted(frame.roles):
        node = utt.tree.node_for_span(frame.roles[role])
        if node is None:
            return SkipReason.NON_CONSTITUENT_ROLE
        role_nodes.append((role, node))

    slot_nodes = []
    try:
        for role, node in role_nodes:
            path = extract_path(node, v_node)
            slot_nodes.append((RoleSlot(role, node.label, path), node))
    except DegenerateNestingError:
        return SkipReason.DEGENERATE_NESTING

    constraints = detect_precedence(slot_nodes)
    surface = _surface(slot_nodes, v_node)
    lemma, pos = _fe_features(utt, frame, v_node)

    fe, _ = net.find_or_add_frame_evoking(lemma, pos)
    argst, _ = net.find_or_add_argstruct(
        [s for s, _ in slot_nodes], constraints, surface)
    roleset, _ = net.find_or_add_roleset(frame.roleset)
    net.add_or_bump_link(fe.cat.id, argst.cat.id, LINK_FE_ARGST)
    net.add_or_bump_link(fe.cat.id, roleset.cat.id, LINK_FE_ROLESET)
    net.add_or_bump_link(argst.cat.id, roleset.cat.id, LINK_ARGST_ROLESET)
    return None


def _surface(slot_nodes, v_node: ConstNode) -> str:
    """Mnemonic prefix: slots in linear utterance order, v marked ``v(v)``."""
    entries = [(linear_key(node), f"{slot.role}({slot.pos})")
               for slot, node in slot_nodes]
    entries.append((linear_key(v_node), "v(v)"))
    entries.sort()
    return "-".join(text for _, text in entries)


def learn_corpus(net: ConstructionNetwork,
                 utterances: Iterable[Utterance]) -> LearnStats:
    """One pass over the corpus, utterance by utterance and instance by
    instance, in input order."""
    stats = LearnStats()
    for utt in utterances:
        stats.utterances += 1
        for frame in utt.frames:
            stats.note(learn_instance(net, utt, frame))
    return stats
