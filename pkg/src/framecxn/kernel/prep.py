"""Flat array representations consumed by the matching kernels.

Both the compiled and the pure-Python kernel operate on the same
structures: a PreparedTree (parent/label/span arrays plus a CSR child
table, nodes in preorder) and a CompiledCxn (per slot: the label ids to
match while ascending from the frame-evoking node, the label ids to
match while descending toward the role node, and the role constituent's
tag id; plus precedence constraints as slot index pairs).

Labels are interned through a LabelTable.  A label absent from the
table maps to -1, which never equals an interned id, so trees may
contain labels the grammar has never seen.
"""

from __future__ import annotations

import numpy as np

from ..corpus import ConstituencyTree
from ..grammar import ArgStructCxn


class LabelTable:
    """String interning for constituent labels."""

    def __init__(self):
        self._ids: dict[str, int] = {}

    def intern(self, label: str) -> int:
        idx = self._ids.get(label)
        if idx is None:
            idx = len(self._ids)
            self._ids[label] = idx
        return idx

    def lookup(self, label: str) -> int:
        return self._ids.get(label, -1)


class PreparedTree:
    """int arrays over a tree's preorder node list."""

    __slots__ = ("tree", "parent", "label", "start", "end",
                 "child_off", "child_idx")

    def __init__(self, tree: ConstituencyTree, table: LabelTable):
        self.tree = tree
        n = len(tree.nodes)
        parent = np.empty(n, dtype=np.intc)
        label = np.empty(n, dtype=np.intc)
        start = np.empty(n, dtype=np.intc)
        end = np.empty(n, dtype=np.intc)
        child_off = np.zeros(n + 1, dtype=np.intc)
        total = 0
        for node in tree.nodes:
            i = node.index
            parent[i] = node.parent.index if node.parent is not None else -1
            label[i] = table.lookup(node.label)
            start[i] = node.start
            end[i] = node.end
            total += len(node.children)
            child_off[i + 1] = total
        child_idx = np.empty(total, dtype=np.intc)
        k = 0
        for node in tree.nodes:
            for child in node.children:
                child_idx[k] = child.index
                k += 1
        self.parent = parent
        self.label = label
        self.start = start
        self.end = end
        self.child_off = child_off
        self.child_idx = child_idx


class CompiledSlot:
    __slots__ = ("role", "pos_id", "ascend", "descend", "matchable")

    def __init__(self, role: str, pos_id: int,
                 ascend: np.ndarray, descend: np.ndarray, matchable: bool):
        self.role = role
        self.pos_id = pos_id
        self.ascend = ascend
        self.descend = descend
        self.matchable = matchable


class CompiledCxn:
    """An argument structure construction lowered to interned ids.

    Slots are kept in role-label order; ``constraints`` holds
    (before_slot_index, after_slot_index) pairs.
    """

    __slots__ = ("cxn", "slots", "constraints", "matchable")

    def __init__(self, cxn: ArgStructCxn, table: LabelTable):
        self.cxn = cxn
        self.slots: list[CompiledSlot] = []
        slot_index = {}
        for i, slot in enumerate(sorted(cxn.slots, key=lambda s: s.role)):
            slot_index[slot.role] = i
            up = slot.up_labels
            down = slot.down_labels
            matchable = bool(up)
            # climb from the frame-evoking node: reversed down steps,
            # then the last up step (the lowest common ancestor)
            ascend = [table.intern(lbl) for lbl in reversed(down)]
            descend = []
            if matchable:
                ascend.append(table.intern(up[-1]))
                descend = [table.intern(lbl) for lbl in reversed(up[:-1])]
            self.slots.append(CompiledSlot(
                slot.role,
                table.intern(slot.pos),
                np.asarray(ascend, dtype=np.intc),
                np.asarray(descend, dtype=np.intc),
                matchable,
            ))
        self.constraints = np.asarray(
            [(slot_index[c.before], slot_index[c.after])
             for c in cxn.constraints],
            dtype=np.intc).reshape(-1, 2)
        self.matchable = all(s.matchable for s in self.slots)
