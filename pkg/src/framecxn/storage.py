"""Grammar file round-tripping.

A grammar is a versioned JSON document with stable integer ids standing
in for categories:

    {"version": 1,
     "fe":      [{"id", "mnemonic", "lemma", "pos", "freq"}, ...],
     "argst":   [{"id", "mnemonic", "freq",
                  "slots": [{"role", "pos", "path": [["up", "s"], ...]}],
                  "constraints": [["arg2", "arg1"], ...]}, ...],
     "roleset": [{"id", "roleset", "freq"}, ...],
     "links":   [{"a", "b", "kind", "weight"}, ...]}

Serialisation is canonical (stores sorted by id, links by endpoint
pair), so serialize(load(serialize(net))) is byte-identical to
serialize(net).  Loading rebuilds every index and verifies the network
invariants; violations raise CorruptFileError.
"""

from __future__ import annotations

import json
import os
import tempfile

from .errors import CorruptFileError, VersionMismatchError
from .grammar import (ArgStructCxn, Category, CategorialLink,
                      ConstructionNetwork, FrameEvokingCxn, LINK_KINDS,
                      PathStep, PrecedenceConstraint, RoleSlot, RolesetCxn,
                      canonical_signature, _endpoint_groups)

FORMAT_VERSION = 1


def network_to_doc(net: ConstructionNetwork) -> dict:
    fe = [{"id": c.cat.id, "mnemonic": c.cat.mnemonic, "lemma": c.lemma,
           "pos": c.pos, "freq": c.freq}
          for c in sorted(net.fe_cxns, key=lambda c: c.cat.id)]
    argst = [{"id": c.cat.id, "mnemonic": c.cat.mnemonic, "freq": c.freq,
              "slots": [{"role": s.role, "pos": s.pos,
                         "path": [[p.direction, p.label] for p in s.path]}
                        for s in c.slots],
              "constraints": [[k.before, k.after] for k in c.constraints]}
             for c in sorted(net.argst_cxns, key=lambda c: c.cat.id)]
    roleset = [{"id": c.cat.id, "roleset": c.roleset, "freq": c.freq}
               for c in sorted(net.roleset_cxns, key=lambda c: c.cat.id)]
    links = [{"a": l.a, "b": l.b, "kind": l.kind, "weight": l.weight}
             for l in sorted(net.links, key=lambda l: (l.a, l.b))]
    return {"version": FORMAT_VERSION, "fe": fe, "argst": argst,
            "roleset": roleset, "links": links}


def dumps_grammar(net: ConstructionNetwork) -> str:
    return json.dumps(network_to_doc(net), ensure_ascii=False, indent=1) + "\n"


def network_from_doc(doc: dict) -> ConstructionNetwork:
    if not isinstance(doc, dict):
        raise CorruptFileError("grammar document must be a JSON object")
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise VersionMismatchError(
            f"grammar format version {version!r}; this build reads "
            f"{FORMAT_VERSION}")
    net = ConstructionNetwork()
    try:
        _load_constructions(net, doc)
        _load_links(net, doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptFileError(f"malformed grammar document: {exc}") from exc
    _verify(net)
    net.freeze()
    return net


def _load_constructions(net: ConstructionNetwork, doc: dict):
    for entry in doc["fe"]:
        cat = Category(int(entry["id"]), entry["mnemonic"])
        cxn = FrameEvokingCxn(entry["lemma"], entry["pos"], cat,
                              int(entry["freq"]))
        key = (cxn.lemma, cxn.pos)
        if key in net._by_lemma_pos:
            raise CorruptFileError(
                f"duplicate frame-evoking construction for {key}")
        net.fe_cxns.append(cxn)
        net._by_lemma_pos[key] = cxn
        _index(net, cxn)
    for entry in doc["argst"]:
        slots = tuple(sorted(
            (RoleSlot(s["role"], s["pos"],
                      tuple(PathStep(d, lbl) for d, lbl in s["path"]))
             for s in entry["slots"]),
            key=lambda s: s.role))
        constraints = tuple(sorted(
            (PrecedenceConstraint(b, a) for b, a in entry["constraints"]),
            key=lambda c: (c.before, c.after)))
        sig = canonical_signature(slots, constraints)
        if sig in net._by_signature:
            raise CorruptFileError(
                f"two argument structure constructions share signature {sig!r}")
        cat = Category(int(entry["id"]), entry["mnemonic"])
        cxn = ArgStructCxn(slots, constraints, cat, sig, int(entry["freq"]))
        net.argst_cxns.append(cxn)
        net._by_signature[sig] = cxn
        _index(net, cxn)
        _restore_suffix_counter(net, entry["mnemonic"])
    for entry in doc["roleset"]:
        cat = Category(int(entry["id"]), entry["roleset"])
        cxn = RolesetCxn(entry["roleset"], cat, int(entry["freq"]))
        if cxn.roleset in net._by_roleset:
            raise CorruptFileError(f"duplicate roleset construction "
                                   f"{cxn.roleset!r}")
        net.roleset_cxns.append(cxn)
        net._by_roleset[cxn.roleset] = cxn
        _index(net, cxn)


def _index(net: ConstructionNetwork, cxn):
    if cxn.cat.id in net._by_cat:
        raise CorruptFileError(f"category id {cxn.cat.id} used twice")
    if cxn.cat.mnemonic in net._by_mnemonic:
        raise CorruptFileError(f"mnemonic {cxn.cat.mnemonic!r} used twice")
    net._by_cat[cxn.cat.id] = cxn
    net._by_mnemonic[cxn.cat.mnemonic] = cxn
    net._adjacency.setdefault(cxn.cat.id, {})
    net._next_cat_id = max(net._next_cat_id, cxn.cat.id + 1)


def _restore_suffix_counter(net: ConstructionNetwork, mnemonic: str):
    prefix, _, suffix = mnemonic.rpartition("-")
    if prefix and suffix.isdigit():
        n = int(suffix)
        if n > net._mnemonic_suffix.get(prefix, 0):
            net._mnemonic_suffix[prefix] = n


def _load_links(net: ConstructionNetwork, doc: dict):
    for entry in doc["links"]:
        a, b = int(entry["a"]), int(entry["b"])
        kind = entry["kind"]
        weight = int(entry["weight"])
        if a not in net._by_cat or b not in net._by_cat:
            raise CorruptFileError(
                f"link ({a},{b}) references a category without a construction")
        if a >= b:
            raise CorruptFileError(f"link endpoints not normalised: ({a},{b})")
        if kind not in LINK_KINDS:
            raise CorruptFileError(f"unknown link kind {kind!r}")
        if weight < 1:
            raise CorruptFileError(f"link ({a},{b}) has weight {weight}")
        if b in net._adjacency[a]:
            raise CorruptFileError(f"duplicate link between {a} and {b}")
        groups = frozenset((net.group_of(a), net.group_of(b)))
        if groups != _endpoint_groups(kind):
            raise CorruptFileError(
                f"link ({a},{b}) of kind {kind!r} joins groups {sorted(groups)}")
        link = CategorialLink(a, b, kind, weight)
        net.links.append(link)
        net._adjacency[a][b] = link
        net._adjacency[b][a] = link


def _verify(net: ConstructionNetwork):
    for cxn in net.constructions():
        if cxn.freq < 1:
            raise CorruptFileError(
                f"construction {cxn.cat.mnemonic!r} has frequency {cxn.freq}")


def save_grammar(net: ConstructionNetwork, path) -> None:
    write_text_atomic(path, dumps_grammar(net))


def load_grammar(path) -> ConstructionNetwork:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except ValueError as exc:
            raise CorruptFileError(f"{path}: not valid JSON: {exc}") from exc
    return network_from_doc(doc)


class atomic_writer:
    """Context manager yielding a text handle onto a temp file in the
    target directory; the file is renamed into place only on success."""

    def __init__(self, path):
        self.path = os.fspath(path)

    def __enter__(self):
        directory = os.path.dirname(self.path) or "."
        fd, self._tmp = tempfile.mkstemp(
            dir=directory, prefix=".tmp-",
            suffix=os.path.basename(self.path))
        self._fh = os.fdopen(fd, "w", encoding="utf-8")
        return self._fh

    def __exit__(self, exc_type, exc, tb):
        self._fh.close()
        if exc_type is None:
            os.replace(self._tmp, self.path)
        else:
            try:
                os.unlink(self._tmp)
            except OSError:
                pass
        return False


def write_text_atomic(path, text: str) -> None:
    """Write via a temp file in the target directory plus rename."""
    with atomic_writer(path) as fh:
        fh.write(text)
