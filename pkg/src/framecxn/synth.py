"""Synthetic annotated corpora for tests and benchmarks.

Generates interchange records over a template family: N verbs crossed
with up to five argument structure patterns (intransitive, transitive,
ditransitive, prepositional goal, fronted prepositional phrase).  Noun
phrases are one- or two-token chunks drawn from a noun pool, so role
spans exercise multi-token expansion.  Every record carries one roleset
instance (verb.01) whose spans are constituents by construction.
"""

from __future__ import annotations

import random

_VERBS = ["tell", "give", "show", "send", "bring", "teach", "offer", "hand",
          "mail", "promise", "read", "sing", "throw", "write", "lend",
          "pass", "serve", "feed", "award", "grant", "ask", "remind",
          "owe", "sell", "pay"]
_NOUNS = ["farmer", "visitor", "teacher", "student", "story", "letter",
          "book", "song", "prize", "horse", "river", "garden", "neighbor",
          "child", "poet", "market", "ticket", "secret"]
_PATTERNS = ("intrans", "trans", "ditrans", "pp-goal", "pp-front")


def _np(rng: random.Random, tokens: list) -> dict:
    """Append a one- or two-token np; return its tree node."""
    noun = rng.choice(_NOUNS)
    if rng.random() < 0.5:
        tokens.append(("the", "the", "det"))
        tokens.append((noun, noun, "noun"))
        return {"label": "np", "children": [{"label": "det"},
                                            {"label": "noun"}]}
    tokens.append((noun, noun, "noun"))
    return {"label": "np"}


def make_record(rng: random.Random, index: int, verb: str,
                pattern: str) -> dict:
    """One interchange record for a verb/pattern combination."""
    tokens: list[tuple[str, str, str]] = []
    sent_children = []
    roles: dict[str, list[int]] = {}

    def span_of(build) -> tuple[dict, list[int]]:
        start = len(tokens)
        node = build()
        return node, [start, len(tokens)]

    if pattern == "pp-front":
        tokens.append(("in", "in", "adp"))
        np_node, np_span = span_of(lambda: _np(rng, tokens))
        sent_children.append({"label": "pp",
                              "children": [{"label": "adp"}, np_node]})
        roles["arg2"] = np_span

    subj_node, subj_span = span_of(lambda: _np(rng, tokens))
    sent_children.append(subj_node)
    roles["arg0"] = subj_span

    v_start = len(tokens)
    tokens.append((verb + "s", verb, "verb"))
    vp_children = [{"label": "verb"}]

    if pattern == "ditrans":
        obj2_node, obj2_span = span_of(lambda: _np(rng, tokens))
        vp_children.append(obj2_node)
        roles["arg2"] = obj2_span
    if pattern in ("trans", "ditrans", "pp-goal", "pp-front"):
        obj_node, obj_span = span_of(lambda: _np(rng, tokens))
        vp_children.append(obj_node)
        roles["arg1"] = obj_span
    if pattern == "pp-goal":
        tokens.append(("to", "to", "adp"))
        goal_node, goal_span = span_of(lambda: _np(rng, tokens))
        vp_children.append({"label": "pp",
                            "children": [{"label": "adp"}, goal_node]})
        roles["arg2"] = goal_span

    sent_children.append({"label": "vp", "children": vp_children})
    tokens.append((".", ".", "punct"))
    sent_children.append({"label": "punct"})

    return {
        "id": f"synth/{index}",
        "tokens": [{"form": f, "lemma": l, "pos": p} for f, l, p in tokens],
        "tree": {"label": "sentence", "children": sent_children},
        "frames": [{"roleset": f"{verb}.01", "v": [v_start, v_start + 1],
                    "roles": roles}],
    }


def make_corpus(n_utterances: int, n_verbs: int = 20, n_patterns: int = 5,
                seed: int = 0) -> list[dict]:
    """A corpus cycling through verb/pattern combinations."""
    if not 1 <= n_verbs <= len(_VERBS):
        raise ValueError(f"n_verbs must be in [1, {len(_VERBS)}]")
    if not 1 <= n_patterns <= len(_PATTERNS):
        raise ValueError(f"n_patterns must be in [1, {len(_PATTERNS)}]")
    rng = random.Random(seed)
    records = []
    for i in range(n_utterances):
        verb = _VERBS[i % n_verbs]
        pattern = _PATTERNS[(i // n_verbs) % n_patterns]
        records.append(make_record(rng, i, verb, pattern))
    return records
