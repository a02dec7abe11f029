"""Pure-Python binding enumeration.

Reference implementation of the matching kernel; the compiled module in
``_native.pyx`` mirrors it exactly and both must return identical
binding lists for identical inputs.
"""

from __future__ import annotations

from .prep import CompiledCxn, PreparedTree


def _slot_candidates(ptree: PreparedTree, v_index: int, slot) -> list[int]:
    """Nodes reachable by inverting the slot's path from the
    frame-evoking node, in (start, end, preorder) order."""
    parent = ptree.parent
    label = ptree.label
    child_off = ptree.child_off
    child_idx = ptree.child_idx

    cur = v_index
    for want in slot.ascend:
        cur = int(parent[cur])
        if cur < 0 or label[cur] != want:
            return []
    frontier = [cur]
    for want in slot.descend:
        nxt = []
        for node in frontier:
            for k in range(child_off[node], child_off[node + 1]):
                child = int(child_idx[k])
                if label[child] == want:
                    nxt.append(child)
        if not nxt:
            return []
        frontier = nxt
    out = []
    for node in frontier:
        for k in range(child_off[node], child_off[node + 1]):
            child = int(child_idx[k])
            if label[child] == slot.pos_id and child != v_index:
                out.append(child)
    out.sort(key=lambda n: (int(ptree.start[n]), int(ptree.end[n]), n))
    return out


def enumerate_bindings(ptree: PreparedTree, v_index: int,
                       ccxn: CompiledCxn) -> list[tuple[int, ...]]:
    """All injective, order-respecting assignments of the construction's
    slots to tree nodes, as tuples of preorder node indices (slot order:
    role labels ascending).  Deterministic: bindings come out
    lexicographically by each slot's (start, end, preorder) key."""
    if not ccxn.matchable or not ccxn.slots:
        return []
    candidates = []
    for slot in ccxn.slots:
        cands = _slot_candidates(ptree, v_index, slot)
        if not cands:
            return []
        candidates.append(cands)

    n_slots = len(ccxn.slots)
    # constraints checked as soon as both endpoints are assigned
    checks = [[] for _ in range(n_slots)]
    for before, after in ccxn.constraints:
        before, after = int(before), int(after)
        later = max(before, after)
        checks[later].append((before, after))

    start = ptree.start
    end = ptree.end
    results: list[tuple[int, ...]] = []
    assign = [0] * n_slots
    used: set[int] = set()

    def place(i: int):
        if i == n_slots:
            results.append(tuple(assign))
            return
        for node in candidates[i]:
            if node in used:
                continue
            assign[i] = node
            ok = True
            for before, after in checks[i]:
                b, a = assign[before], assign[after]
                if (int(start[b]), int(end[b])) >= (int(start[a]), int(end[a])):
                    ok = False
                    break
            if not ok:
                continue
            used.add(node)
            place(i + 1)
            used.discard(node)

    place(0)
    return results
