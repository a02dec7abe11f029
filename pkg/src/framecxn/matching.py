"""Applying a learnt network to unseen parsed utterances.

The pipeline per utterance: find every token whose (lemma, pos) matches
a frame-evoking construction; for each such node, match every argument
structure construction whose category is linked to the frame-evoking
category against the tree; keep only candidates for which a roleset
construction is linked to BOTH categories (the triangle); pick the best
candidate per frame-evoking node and emit it as a frame instance.

Candidate ranking: most role slots first, then the highest sum of the
three link weights of the triangle, then the lexicographically smallest
argument structure signature, then the smallest roleset label, then the
kernel's binding order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import ConstNode, ConstituencyTree, FrameInstance, Utterance
from .grammar import (ArgStructCxn, ConstructionNetwork, FrameEvokingCxn,
                      LINK_ARGST_ROLESET, LINK_FE_ARGST, other_end)
from .kernel import CompiledCxn, LabelTable, PreparedTree, enumerate_bindings


@dataclass
class Binding:
    """A match of an argument structure construction onto tree nodes."""

    v_node: ConstNode
    role_nodes: dict[str, ConstNode]
    argst: ArgStructCxn
    fe: FrameEvokingCxn | None = None


def match_frame_evoking(net: ConstructionNetwork,
                        utt: Utterance) -> list[tuple[ConstNode, FrameEvokingCxn]]:
    """One entry per token indexed by a frame-evoking construction; the
    node is the token's preterminal leaf."""
    out = []
    for tok in utt.tokens:
        cxn = net.frame_evoking_for(tok.lemma, tok.pos)
        if cxn is not None:
            out.append((utt.tree.leaf_covering(tok.index), cxn))
    return out


def match_argstruct(tree: ConstituencyTree, v_node: ConstNode,
                    cxn: ArgStructCxn) -> list[Binding]:
    """All bindings of one construction at one frame-evoking node.

    One-shot convenience around the kernel; the Extractor below caches
    the prepared tree and compiled constructions across calls.
    """
    table = LabelTable()
    compiled = CompiledCxn(cxn, table)
    ptree = PreparedTree(tree, table)
    return _bindings(ptree, v_node, compiled)


def _bindings(ptree: PreparedTree, v_node: ConstNode,
              compiled: CompiledCxn) -> list[Binding]:
    tuples = enumerate_bindings(ptree, v_node.index, compiled)
    nodes = ptree.tree.nodes
    roles = [slot.role for slot in compiled.slots]
    return [Binding(v_node, {role: nodes[i] for role, i in zip(roles, tup)},
                    compiled.cxn)
            for tup in tuples]


class Extractor:
    """Frame extraction over a frozen network.

    Compiles argument structure constructions once and prepares each
    tree once, so repeated extraction over a corpus stays cheap.
    """

    def __init__(self, net: ConstructionNetwork):
        self.net = net
        self._table = LabelTable()
        # compile everything up front: trees are prepared with lookup
        # only, so the label table must be complete first
        self._compiled: dict[int, CompiledCxn] = {
            cxn.cat.id: CompiledCxn(cxn, self._table)
            for cxn in net.argst_cxns}
        self._linked_argst: dict[int, list] = {}

    def _argst_for_fe(self, fe: FrameEvokingCxn) -> list:
        """(argst cxn, fe-argst weight) pairs linked to the fe category."""
        got = self._linked_argst.get(fe.cat.id)
        if got is None:
            got = []
            for link in self.net.links_of(fe.cat.id, LINK_FE_ARGST):
                argst = self.net.construction_for_category(
                    other_end(link, fe.cat.id))
                got.append((argst, link.weight))
            self._linked_argst[fe.cat.id] = got
        return got

    def extract(self, utt: Utterance) -> list[FrameInstance]:
        """At most one frame instance per frame-evoking node; nodes with
        no triangular completion emit nothing."""
        fe_matches = match_frame_evoking(self.net, utt)
        if not fe_matches:
            return []
        ptree = PreparedTree(utt.tree, self._table)
        nodes = utt.tree.nodes
        results = []
        for v_node, fe in fe_matches:
            best_key = None
            best = None
            for argst, fe_argst_weight in self._argst_for_fe(fe):
                compiled = self._compiled[argst.cat.id]
                # only the first binding of a construction can win: the
                # ranking ends at the kernel's binding order
                tuples = enumerate_bindings(ptree, v_node.index, compiled)
                if not tuples:
                    continue
                for rs_link in self.net.links_of(argst.cat.id,
                                                 LINK_ARGST_ROLESET):
                    rs_cat = other_end(rs_link, argst.cat.id)
                    fe_rs_link = self.net.link_between(fe.cat.id, rs_cat)
                    if fe_rs_link is None:
                        continue  # triangle not closed
                    rs = self.net.construction_for_category(rs_cat)
                    weight = (fe_argst_weight + rs_link.weight
                              + fe_rs_link.weight)
                    key = (-len(argst.slots), -weight, argst.signature,
                           rs.roleset)
                    if best_key is None or key < best_key:
                        best_key = key
                        best = (compiled, tuples[0], rs)
            if best is not None:
                compiled, indices, rs = best
                results.append(FrameInstance(
                    rs.roleset, v_node.span,
                    {slot.role: nodes[i].span
                     for slot, i in zip(compiled.slots, indices)}))
        return results


def extract(net: ConstructionNetwork, utt: Utterance) -> list[FrameInstance]:
    """One-shot extraction; see Extractor for corpus-scale use."""
    return Extractor(net).extract(utt)
