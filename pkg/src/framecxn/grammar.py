"""Constructions, categories, categorial links and the construction network.

Three construction types live in the network:

  * frame-evoking constructions recognise (lemma, pos) combinations and
    flag their frame-evoking potential;
  * argument structure constructions describe a constellation of
    constituents around the frame-evoking node: one slot per core role,
    each with the role constituent's tag and the up-then-down label path
    that connects it to the frame-evoking node, plus precedence
    constraints between otherwise indistinguishable slots;
  * roleset constructions attribute a roleset label to a node carrying
    compatible frame-evoking and argument structure categories.

Each construction owns a category; weighted, undirected categorial links
between categories record how often two constructions were observed
together.  Structural duplicates are never stored twice: argument
structure constructions are deduplicated by a canonical signature that
ignores slot order and all node/category naming.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FrozenNetworkError, UnknownCategoryError

UP = "up"
DOWN = "down"

LINK_FE_ARGST = "fe-argst"
LINK_FE_ROLESET = "fe-roleset"
LINK_ARGST_ROLESET = "argst-roleset"
LINK_KINDS = (LINK_FE_ARGST, LINK_FE_ROLESET, LINK_ARGST_ROLESET)

GROUP_FE = "fe"
GROUP_ARGST = "argst"
GROUP_ROLESET = "roleset"
GROUP_ALL = "all"
GROUPS = (GROUP_ALL, GROUP_FE, GROUP_ARGST, GROUP_ROLESET)


@dataclass(frozen=True)
class Category:
    """A symbol proper to one construction; id is unique network-wide."""

    id: int
    mnemonic: str


@dataclass(frozen=True)
class PathStep:
    direction: str  # UP or DOWN
    label: str

    def __post_init__(self):
        if self.direction not in (UP, DOWN):
            raise ValueError(f"bad path direction {self.direction!r}")


@dataclass(frozen=True)
class RoleSlot:
    """One core-role slot of an argument structure construction.

    ``path`` runs from the role constituent toward the frame-evoking
    node, endpoints excluded; the last up step is the lowest common
    ancestor of the two.
    """

    role: str
    pos: str
    path: tuple[PathStep, ...]

    def __post_init__(self):
        seen_down = False
        for step in self.path:
            if step.direction == DOWN:
                seen_down = True
            elif seen_down:
                raise ValueError(
                    f"slot {self.role}: up step after a down step")
        if self.path and self.path[0].direction != UP:
            raise ValueError(f"slot {self.role}: path must begin with an up step")

    @property
    def up_labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.path if s.direction == UP)

    @property
    def down_labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.path if s.direction == DOWN)


@dataclass(frozen=True)
class PrecedenceConstraint:
    """The ``before`` slot's constituent must linearly precede the
    ``after`` slot's constituent."""

    before: str
    after: str

    def __post_init__(self):
        if self.before == self.after:
            raise ValueError("precedence constraint between a slot and itself")


@dataclass
class FrameEvokingCxn:
    lemma: str
    pos: str
    cat: Category
    freq: int = 1

    @property
    def mnemonic(self) -> str:
        return self.cat.mnemonic


@dataclass
class ArgStructCxn:
    slots: tuple[RoleSlot, ...]
    constraints: tuple[PrecedenceConstraint, ...]
    cat: Category
    signature: str
    freq: int = 1

    @property
    def mnemonic(self) -> str:
        return self.cat.mnemonic

    @property
    def role_labels(self) -> tuple[str, ...]:
        return tuple(s.role for s in self.slots)

    def slot(self, role: str) -> RoleSlot:
        for s in self.slots:
            if s.role == role:
                return s
        raise KeyError(role)


@dataclass
class RolesetCxn:
    roleset: str
    cat: Category
    freq: int = 1

    @property
    def mnemonic(self) -> str:
        return self.cat.mnemonic


@dataclass
class CategorialLink:
    """Undirected compatibility edge; endpoints stored with a < b."""

    a: int
    b: int
    kind: str
    weight: int = 1


def _netstr(s: str) -> str:
    return f"{len(s)}:{s}"


def canonical_signature(slots, constraints) -> str:
    """Canonical string for an argument structure, invariant under slot
    order and any node or category naming.

    Length-prefixed field serialisation; the leading tag versions the
    format.
    """
    parts = ["asig1", _netstr(str(len(slots)))]
    for slot in sorted(slots, key=lambda s: s.role):
        parts.append(_netstr(slot.role))
        parts.append(_netstr(slot.pos))
        parts.append(_netstr(str(len(slot.path))))
        for step in slot.path:
            parts.append(_netstr(step.direction[0]))
            parts.append(_netstr(step.label))
    parts.append(_netstr(str(len(constraints))))
    for c in sorted(constraints, key=lambda c: (c.before, c.after)):
        parts.append(_netstr(c.before))
        parts.append(_netstr(c.after))
    return "".join(parts)


def _validate_constraints(slots, constraints):
    roles = {s.role for s in slots}
    if len(roles) != len(slots):
        raise ValueError("duplicate role labels across slots")
    for c in constraints:
        if c.before not in roles or c.after not in roles:
            raise ValueError(
                f"constraint {c.before}<{c.after} names a role without a slot")


class ConstructionNetwork:
    """All learnt constructions plus weighted categorial links.

    Learning mutates the network through the find-or-add operations;
    once frozen it is read-only and safe to share across threads.
    """

    def __init__(self):
        self.fe_cxns: list[FrameEvokingCxn] = []
        self.argst_cxns: list[ArgStructCxn] = []
        self.roleset_cxns: list[RolesetCxn] = []
        self.links: list[CategorialLink] = []
        self._by_lemma_pos: dict[tuple[str, str], FrameEvokingCxn] = {}
        self._by_signature: dict[str, ArgStructCxn] = {}
        self._by_roleset: dict[str, RolesetCxn] = {}
        self._by_cat: dict[int, object] = {}
        self._by_mnemonic: dict[str, object] = {}
        self._adjacency: dict[int, dict[int, CategorialLink]] = {}
        self._mnemonic_suffix: dict[str, int] = {}
        self._next_cat_id = 0
        self._frozen = False

    # -- bookkeeping -------------------------------------------------------

    @property
    def frozen(self) -> bool:
        return self._frozen

    def freeze(self):
        self._frozen = True

    def _check_mutable(self):
        if self._frozen:
            raise FrozenNetworkError("the network is frozen")

    def _new_category(self, mnemonic: str) -> Category:
        cat = Category(self._next_cat_id, mnemonic)
        self._next_cat_id += 1
        return cat

    def _register(self, cxn):
        self._by_cat[cxn.cat.id] = cxn
        self._by_mnemonic[cxn.cat.mnemonic] = cxn
        self._adjacency.setdefault(cxn.cat.id, {})

    # -- find-or-add -------------------------------------------------------

    def find_or_add_frame_evoking(self, lemma: str, pos: str):
        """Return (cxn, created); bumps the frequency of an existing one."""
        self._check_mutable()
        existing = self._by_lemma_pos.get((lemma, pos))
        if existing is not None:
            existing.freq += 1
            return existing, False
        cxn = FrameEvokingCxn(lemma, pos, self._new_category(f"{lemma}({pos})"))
        self.fe_cxns.append(cxn)
        self._by_lemma_pos[(lemma, pos)] = cxn
        self._register(cxn)
        return cxn, True

    def find_or_add_argstruct(self, slots, constraints, surface: str):
        """Return (cxn, created) for the given structure.

        ``surface`` is the mnemonic prefix built from the slots in their
        linear order in the source utterance, e.g.
        ``arg0(np)-v(v)-arg1(np)``; the next free integer suffix per
        surface disambiguates structurally different constructions that
        share it.  Structural identity is decided by the canonical
        signature alone.
        """
        self._check_mutable()
        slots = tuple(sorted(slots, key=lambda s: s.role))
        constraints = tuple(sorted(constraints,
                                   key=lambda c: (c.before, c.after)))
        _validate_constraints(slots, constraints)
        sig = canonical_signature(slots, constraints)
        existing = self._by_signature.get(sig)
        if existing is not None:
            existing.freq += 1
            return existing, False
        n = self._mnemonic_suffix.get(surface, 0) + 1
        self._mnemonic_suffix[surface] = n
        cxn = ArgStructCxn(slots, constraints,
                           self._new_category(f"{surface}-{n}"), sig)
        self.argst_cxns.append(cxn)
        self._by_signature[sig] = cxn
        self._register(cxn)
        return cxn, True

    def find_or_add_roleset(self, roleset: str):
        self._check_mutable()
        existing = self._by_roleset.get(roleset)
        if existing is not None:
            existing.freq += 1
            return existing, False
        cxn = RolesetCxn(roleset, self._new_category(roleset))
        self.roleset_cxns.append(cxn)
        self._by_roleset[roleset] = cxn
        self._register(cxn)
        return cxn, True

    def add_or_bump_link(self, cat_a: int, cat_b: int, kind: str) -> CategorialLink:
        """Increment the weight of the link between two categories,
        creating it with weight 1 if absent."""
        self._check_mutable()
        if kind not in LINK_KINDS:
            raise ValueError(f"unknown link kind {kind!r}")
        for cat_id in (cat_a, cat_b):
            if cat_id not in self._by_cat:
                raise UnknownCategoryError(f"category {cat_id} is not in the network")
        expected = _endpoint_groups(kind)
        actual = frozenset((self.group_of(cat_a), self.group_of(cat_b)))
        if actual != expected:
            raise ValueError(
                f"link kind {kind!r} does not match endpoint groups {sorted(actual)}")
        a, b = min(cat_a, cat_b), max(cat_a, cat_b)
        link = self._adjacency[a].get(b)
        if link is not None:
            link.weight += 1
            return link
        link = CategorialLink(a, b, kind)
        self.links.append(link)
        self._adjacency[a][b] = link
        self._adjacency[b][a] = link
        return link

    # -- lookups -----------------------------------------------------------

    def construction_for_category(self, cat_id: int):
        try:
            return self._by_cat[cat_id]
        except KeyError:
            raise UnknownCategoryError(
                f"category {cat_id} is not in the network") from None

    def construction_for_mnemonic(self, mnemonic: str):
        try:
            return self._by_mnemonic[mnemonic]
        except KeyError:
            raise UnknownCategoryError(
                f"no construction named {mnemonic!r}") from None

    def frame_evoking_for(self, lemma: str, pos: str) -> FrameEvokingCxn | None:
        return self._by_lemma_pos.get((lemma, pos))

    def argstruct_for_signature(self, sig: str) -> ArgStructCxn | None:
        return self._by_signature.get(sig)

    def roleset_for(self, roleset: str) -> RolesetCxn | None:
        return self._by_roleset.get(roleset)

    def group_of(self, cat_id: int) -> str:
        cxn = self.construction_for_category(cat_id)
        if isinstance(cxn, FrameEvokingCxn):
            return GROUP_FE
        if isinstance(cxn, ArgStructCxn):
            return GROUP_ARGST
        return GROUP_ROLESET

    def links_of(self, cat_id: int, kind: str | None = None) -> list[CategorialLink]:
        """Links incident to a category, sorted by the other endpoint id."""
        if cat_id not in self._by_cat:
            raise UnknownCategoryError(f"category {cat_id} is not in the network")
        out = []
        for other in sorted(self._adjacency.get(cat_id, ())):
            link = self._adjacency[cat_id][other]
            if kind is None or link.kind == kind:
                out.append(link)
        return out

    def link_between(self, cat_a: int, cat_b: int) -> CategorialLink | None:
        return self._adjacency.get(cat_a, {}).get(cat_b)

    def constructions(self, group: str = GROUP_ALL) -> list:
        if group == GROUP_ALL:
            return self.fe_cxns + self.argst_cxns + self.roleset_cxns
        if group == GROUP_FE:
            return list(self.fe_cxns)
        if group == GROUP_ARGST:
            return list(self.argst_cxns)
        if group == GROUP_ROLESET:
            return list(self.roleset_cxns)
        raise ValueError(f"unknown group {group!r}")

    def __len__(self):
        return len(self.fe_cxns) + len(self.argst_cxns) + len(self.roleset_cxns)


def _endpoint_groups(kind: str) -> frozenset:
    return {
        LINK_FE_ARGST: frozenset((GROUP_FE, GROUP_ARGST)),
        LINK_FE_ROLESET: frozenset((GROUP_FE, GROUP_ROLESET)),
        LINK_ARGST_ROLESET: frozenset((GROUP_ARGST, GROUP_ROLESET)),
    }[kind]


def other_end(link: CategorialLink, cat_id: int) -> int:
    return link.b if link.a == cat_id else link.a
