"""Tokens, constituency trees and frame annotations.

An utterance enters the engine through the JSON Lines interchange format,
one object per line:

    {"id": str,
     "tokens": [{"form": str, "lemma": str, "pos": str}, ...],
     "tree": {"label": str, "children": [...]} | {"ptb": str},
     "frames": [{"roleset": str, "v": [start, end],
                 "roles": {"arg0": [start, end], ...}}, ...]}

Trees may be given either as nested label/children objects, where each
node without children is a leaf consuming exactly one token (left to
right), or as a Penn-style bracketed string whose leaf words must match
the token forms in order.  All spans are half-open token intervals
[start, end).  Lemmas and node labels are normalised to lowercase.

Only core roles (arg0..arg5 and arga) are kept on ingestion; modifier
and continuation annotations (argm-*, c-*, r-*) are dropped, anything
else is rejected.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import IngestError, SchemaError, TreeError

Span = tuple[int, int]

CORE_ROLE_RE = re.compile(r"^arg([0-5]|a)$")
ROLESET_RE = re.compile(r"^\S+\.\d{2,}$")
# Annotation layers outside the engine's scope, silently dropped.
_IGNORED_ROLE_RE = re.compile(r"^(argm($|-)|c-|r-)")

_PTB_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")


@dataclass(frozen=True)
class Token:
    """One token of an utterance; lemma and pos are lowercased."""

    index: int
    form: str
    lemma: str
    pos: str


class ConstNode:
    """A node of a constituency tree over a half-open token span.

    Nodes compare by identity.  ``children`` partition the node's span;
    a node without children is a leaf.
    """

    __slots__ = ("id", "label", "start", "end", "children", "parent",
                 "index", "depth")

    def __init__(self, label: str, start: int, end: int,
                 children: Iterable["ConstNode"] = (), node_id: str | None = None):
        self.id = node_id
        self.label = label
        self.start = start
        self.end = end
        self.children: list[ConstNode] = list(children)
        self.parent: ConstNode | None = None
        self.index = -1      # preorder position, assigned by ConstituencyTree
        self.depth = -1

    @property
    def span(self) -> Span:
        return (self.start, self.end)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __repr__(self):
        return f"ConstNode({self.label!r}, [{self.start},{self.end}))"


class ConstituencyTree:
    """A validated constituency tree covering ``n_tokens`` tokens.

    Validation enforces: a single root spanning [0, n_tokens); every
    internal node's children are ordered, contiguous and partition the
    parent span; every leaf spans at least one token.
    """

    def __init__(self, root: ConstNode, n_tokens: int):
        if n_tokens <= 0:
            raise TreeError("tree must cover at least one token")
        if root.span != (0, n_tokens):
            raise TreeError(
                f"root spans [{root.start},{root.end}) but the utterance "
                f"has {n_tokens} tokens")
        self.root = root
        self.n_tokens = n_tokens
        self.nodes: list[ConstNode] = []
        self.leaves: list[ConstNode] = []
        self._by_span: dict[Span, ConstNode] = {}
        self._leaf_by_token: list[ConstNode | None] = [None] * n_tokens

        stack = [(root, None, 0)]
        while stack:
            node, parent, depth = stack.pop()
            if node.index != -1:
                raise TreeError(f"node {node.label!r} appears twice in the tree")
            node.parent = parent
            node.depth = depth
            node.index = len(self.nodes)
            if node.id is None:
                node.id = f"n{node.index}"
            self.nodes.append(node)
            # preorder: for equal spans the deeper node is visited later,
            # so the final entry per span is the lowest node of a unary chain
            self._by_span[node.span] = node
            if node.is_leaf:
                if node.end - node.start < 1:
                    raise TreeError(f"leaf {node.label!r} has an empty span")
                self.leaves.append(node)
                for t in range(node.start, node.end):
                    self._leaf_by_token[t] = node
            else:
                pos = node.start
                for child in node.children:
                    if child.start != pos:
                        raise TreeError(
                            f"children of {node.label!r} are not contiguous "
                            f"at token {pos}")
                    if child.end > node.end:
                        raise TreeError(
                            f"child {child.label!r} exceeds the span of "
                            f"{node.label!r}")
                    pos = child.end
                if pos != node.end:
                    raise TreeError(
                        f"children of {node.label!r} do not cover its span")
                for child in reversed(node.children):
                    stack.append((child, node, depth + 1))

    def node_for_span(self, span: Span) -> ConstNode | None:
        """Return the node whose span equals ``span`` exactly, or None.

        When a unary chain yields several exact-span nodes the lowest
        one (closest to the leaves) is returned.
        """
        return self._by_span.get((span[0], span[1]))

    def leaf_covering(self, token_index: int) -> ConstNode:
        leaf = self._leaf_by_token[token_index]
        assert leaf is not None
        return leaf

    def to_nested(self) -> dict:
        """Serialize back to the nested label/children form."""

        def conv(node: ConstNode) -> dict:
            if node.is_leaf:
                return {"label": node.label}
            return {"label": node.label,
                    "children": [conv(c) for c in node.children]}

        return conv(self.root)


@dataclass
class FrameInstance:
    """One roleset annotation or prediction."""

    roleset: str
    v_span: Span
    roles: dict[str, Span]

    def to_record(self) -> dict:
        return {"roleset": self.roleset,
                "v": list(self.v_span),
                "roles": {r: list(s) for r, s in sorted(self.roles.items())}}


@dataclass
class Utterance:
    id: str
    tokens: tuple[Token, ...]
    tree: ConstituencyTree
    frames: list[FrameInstance] = field(default_factory=list)

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "tokens": [{"form": t.form, "lemma": t.lemma, "pos": t.pos}
                       for t in self.tokens],
            "tree": self.tree.to_nested(),
            "frames": [f.to_record() for f in self.frames],
        }


# ---------------------------------------------------------------------------
# tree construction


def tree_from_nested(obj, n_tokens: int) -> ConstituencyTree:
    """Build a tree from nested label/children objects.

    Each node without children is a leaf consuming one token, assigned
    left to right.
    """
    cursor = 0

    def build(spec) -> ConstNode:
        nonlocal cursor
        if not isinstance(spec, dict) or "label" not in spec:
            raise TreeError(f"tree node must be an object with a label: {spec!r}")
        label = _norm_label(spec["label"])
        children_spec = spec.get("children") or []
        if not children_spec:
            start = cursor
            cursor += 1
            return ConstNode(label, start, cursor)
        children = [build(c) for c in children_spec]
        return ConstNode(label, children[0].start, children[-1].end,
                         children)

    root = build(obj)
    if cursor != n_tokens:
        raise TreeError(
            f"tree has {cursor} leaves but the utterance has {n_tokens} tokens")
    return ConstituencyTree(root, n_tokens)


def tree_from_ptb(text: str, tokens: list[Token]) -> ConstituencyTree:
    """Parse a Penn-style bracketed string against the token list.

    Leaves are ``(tag word)`` pairs; words must equal the token forms in
    order.  An outer unlabeled wrapper ``( ... )`` is unwrapped.
    """
    parts = _PTB_TOKEN_RE.findall(text)
    if not parts:
        raise TreeError("empty bracketed string")
    pos = 0

    def parse() -> tuple:
        nonlocal pos
        if parts[pos] != "(":
            raise TreeError(f"expected '(' at item {pos} of bracketed string")
        pos += 1
        label = ""
        if pos < len(parts) and parts[pos] not in ("(", ")"):
            label = parts[pos]
            pos += 1
        children = []
        words = []
        while pos < len(parts) and parts[pos] != ")":
            if parts[pos] == "(":
                children.append(parse())
            else:
                words.append(parts[pos])
                pos += 1
        if pos >= len(parts):
            raise TreeError("unbalanced brackets")
        pos += 1  # consume ')'
        if children and words:
            raise TreeError(
                f"node {label!r} mixes phrase children and words")
        return (label, children, words)

    top = parse()
    if pos != len(parts):
        raise TreeError("trailing material after bracketed tree")
    # unwrap "( (S ...) )"
    while top[0] == "" and not top[2]:
        if len(top[1]) != 1:
            raise TreeError("bracketed tree must have exactly one root")
        top = top[1][0]

    cursor = 0

    def build(item) -> ConstNode:
        nonlocal cursor
        label, children, words = item
        if not label:
            raise TreeError("unlabeled interior node in bracketed tree")
        if words:
            if len(words) != 1:
                raise TreeError(
                    f"leaf {label!r} holds {len(words)} words; expected one")
            if cursor >= len(tokens):
                raise TreeError("bracketed tree has more leaves than tokens")
            if words[0] != tokens[cursor].form:
                raise TreeError(
                    f"leaf word {words[0]!r} does not match token "
                    f"{tokens[cursor].form!r} at position {cursor}")
            start = cursor
            cursor += 1
            return ConstNode(_norm_label(label), start, cursor)
        if not children:
            # a bare "(tag)" behaves like a leaf with no word check
            start = cursor
            cursor += 1
            return ConstNode(_norm_label(label), start, cursor)
        built = [build(c) for c in children]
        return ConstNode(_norm_label(label), built[0].start, built[-1].end,
                         built)

    root = build(top)
    if cursor != len(tokens):
        raise TreeError(
            f"bracketed tree has {cursor} leaves but the utterance has "
            f"{len(tokens)} tokens")
    return ConstituencyTree(root, len(tokens))


def _norm_label(label) -> str:
    if not isinstance(label, str) or not label:
        raise TreeError(f"node label must be a non-empty string: {label!r}")
    return label.lower()


# ---------------------------------------------------------------------------
# ingestion


def ingest_utterance(record: dict) -> Utterance:
    """Validate one interchange record and build an Utterance.

    Raises SchemaError for missing fields, bad spans or bad labels, and
    TreeError for malformed trees.
    """
    if not isinstance(record, dict):
        raise SchemaError("record must be a JSON object")
    try:
        utt_id = record["id"]
        raw_tokens = record["tokens"]
        raw_tree = record["tree"]
    except KeyError as exc:
        raise SchemaError(f"record is missing field {exc.args[0]!r}") from None
    if not isinstance(utt_id, str) or not utt_id:
        raise SchemaError("id must be a non-empty string")
    if not isinstance(raw_tokens, list) or not raw_tokens:
        raise SchemaError("tokens must be a non-empty list")

    tokens = []
    for i, tok in enumerate(raw_tokens):
        if not isinstance(tok, dict):
            raise SchemaError(f"token {i} must be an object")
        try:
            form, lemma, pos = tok["form"], tok["lemma"], tok["pos"]
        except KeyError as exc:
            raise SchemaError(
                f"token {i} is missing field {exc.args[0]!r}") from None
        if not isinstance(lemma, str) or not lemma:
            raise SchemaError(f"token {i} has an empty lemma")
        if not isinstance(form, str) or not isinstance(pos, str) or not pos:
            raise SchemaError(f"token {i} has a malformed form or pos")
        tokens.append(Token(i, form, lemma.lower(), pos.lower()))
    tokens = tuple(tokens)

    if isinstance(raw_tree, dict) and "ptb" in raw_tree:
        tree = tree_from_ptb(raw_tree["ptb"], list(tokens))
    else:
        tree = tree_from_nested(raw_tree, len(tokens))

    frames = []
    for j, raw in enumerate(record.get("frames") or []):
        frames.append(_ingest_frame(raw, j, len(tokens)))
    return Utterance(utt_id, tokens, tree, frames)


def _ingest_frame(raw: dict, j: int, n_tokens: int) -> FrameInstance:
    if not isinstance(raw, dict):
        raise SchemaError(f"frame {j} must be an object")
    roleset = raw.get("roleset")
    if not isinstance(roleset, str) or not ROLESET_RE.match(roleset):
        raise SchemaError(
            f"frame {j} roleset {roleset!r} does not match lemma.NN")
    v_span = _check_span(raw.get("v"), f"frame {j} v", n_tokens)
    roles: dict[str, Span] = {}
    for role, raw_span in (raw.get("roles") or {}).items():
        role = role.lower()
        if _IGNORED_ROLE_RE.match(role):
            continue
        if not CORE_ROLE_RE.match(role):
            raise SchemaError(f"frame {j} has unknown role label {role!r}")
        if role in roles:
            raise SchemaError(f"frame {j} repeats role {role!r}")
        roles[role] = _check_span(raw_span, f"frame {j} role {role}", n_tokens)
    return FrameInstance(roleset, v_span, roles)


def _check_span(raw, what: str, n_tokens: int) -> Span:
    if (not isinstance(raw, (list, tuple)) or len(raw) != 2
            or not all(isinstance(x, int) for x in raw)):
        raise SchemaError(f"{what} span must be a [start, end] pair")
    start, end = raw
    if not (0 <= start < end <= n_tokens):
        raise SchemaError(
            f"{what} span [{start},{end}) is outside the {n_tokens}-token "
            "utterance")
    return (start, end)


def read_corpus(path) -> Iterator[Utterance]:
    """Read utterances from a JSONL file, wrapping errors with context."""
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                yield ingest_utterance(record)
            except (SchemaError, TreeError, ValueError) as exc:
                raise IngestError(path, line_no, exc) from exc


def write_corpus(utterances: Iterable[Utterance], fh) -> None:
    for utt in utterances:
        fh.write(json.dumps(utt.to_record(), ensure_ascii=False) + "\n")
