# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled binding enumeration.

Mirror of framecxn.kernel.pure; identical inputs must yield identical
binding lists.  Only the inner loops differ: label comparisons, the
frontier walk and the backtracking product run on C ints here.
"""

import numpy as np


cdef _slot_candidates(int[::1] parent, int[::1] label, int[::1] start,
                      int[::1] end, int[::1] child_off, int[::1] child_idx,
                      int v_index, slot):
    cdef int[::1] ascend = slot.ascend
    cdef int[::1] descend = slot.descend
    cdef int cur = v_index
    cdef int i, k, node, child, want
    cdef int pos_id = slot.pos_id
    cdef list frontier, nxt, out

    for i in range(ascend.shape[0]):
        want = ascend[i]
        cur = parent[cur]
        if cur < 0 or label[cur] != want:
            return np.empty(0, dtype=np.intc)
    frontier = [cur]
    for i in range(descend.shape[0]):
        want = descend[i]
        nxt = []
        for node in frontier:
            for k in range(child_off[node], child_off[node + 1]):
                child = child_idx[k]
                if label[child] == want:
                    nxt.append(child)
        if not nxt:
            return np.empty(0, dtype=np.intc)
        frontier = nxt
    out = []
    for node in frontier:
        for k in range(child_off[node], child_off[node + 1]):
            child = child_idx[k]
            if label[child] == pos_id and child != v_index:
                out.append(child)
    decorated = sorted((start[c], end[c], c) for c in out)
    return np.asarray([t[2] for t in decorated], dtype=np.intc)


cdef void _place(int i, int n_slots, list cand_arrays, unsigned char[::1] used,
                 int[::1] assign, list checks, int[::1] start, int[::1] end,
                 list results):
    cdef int[::1] cands
    cdef int j, k, node, b, a, bi, ai
    cdef bint ok
    if i == n_slots:
        results.append(tuple([int(assign[k]) for k in range(n_slots)]))
        return
    cands = cand_arrays[i]
    checks_i = checks[i]
    for j in range(cands.shape[0]):
        node = cands[j]
        if used[node]:
            continue
        assign[i] = node
        ok = True
        for bi, ai in checks_i:
            b = assign[bi]
            a = assign[ai]
            if start[b] > start[a] or (start[b] == start[a] and end[b] >= end[a]):
                ok = False
                break
        if not ok:
            continue
        used[node] = 1
        _place(i + 1, n_slots, cand_arrays, used, assign, checks, start, end,
               results)
        used[node] = 0


def enumerate_bindings(ptree, int v_index, ccxn):
    """See framecxn.kernel.pure.enumerate_bindings."""
    if not ccxn.matchable or not ccxn.slots:
        return []
    cdef int[::1] parent = ptree.parent
    cdef int[::1] label = ptree.label
    cdef int[::1] start = ptree.start
    cdef int[::1] end = ptree.end
    cdef int[::1] child_off = ptree.child_off
    cdef int[::1] child_idx = ptree.child_idx
    cdef int n_slots = len(ccxn.slots)
    cdef list cand_arrays = []
    cdef int i

    for slot in ccxn.slots:
        arr = _slot_candidates(parent, label, start, end, child_off, child_idx,
                               v_index, slot)
        if arr.shape[0] == 0:
            return []
        cand_arrays.append(arr)

    cdef list checks = [[] for _ in range(n_slots)]
    cdef int before, after
    for before, after in ccxn.constraints:
        checks[max(before, after)].append((before, after))

    cdef unsigned char[::1] used = np.zeros(parent.shape[0], dtype=np.uint8)
    cdef int[::1] assign = np.zeros(n_slots, dtype=np.intc)
    cdef list results = []
    _place(0, n_slots, cand_arrays, used, assign, checks, start, end, results)
    return results
