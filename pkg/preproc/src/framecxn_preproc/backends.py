"""Parser backends.

A backend turns a raw sentence into tokens (form, lemma, pos) and a
nested constituency tree whose leaves line up one-to-one with the
tokens.  Constituent labels are lowercased and preterminals carry the
token-level pos tag, matching the downstream corpus model.

Two backends ship here:

  * ``chunk`` -- a deterministic, dependency-free tagger/lemmatizer and
    shallow chunk parser.  Good enough for fixtures, demos and tests;
    not a linguistic claim.
  * ``spacy-benepar`` -- the neural pipeline (spaCy tokenizer/lemmatizer
    plus the Berkeley neural constituency parser).  Optional extra;
    raises ParserUnavailable when the libraries or models are missing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParserUnavailable

Token = tuple[str, str, str]  # form, lemma, pos


@dataclass
class ParsedSentence:
    tokens: list[Token]
    tree: dict


_TOKEN_RE = re.compile(r"[A-Za-z0-9]+(?:'[a-z]+)?|[^\sA-Za-z0-9]")

_DETS = {"the", "a", "an", "every", "some", "this", "that", "these",
         "those", "each", "any", "no", "all"}
_ADPS = {"in", "on", "to", "of", "for", "with", "at", "from", "by",
         "into", "about", "over", "under", "through"}
_PRONOUNS = {"i", "you", "he", "she", "it", "we", "they", "him", "her",
             "them", "me", "us"}
_AUX = {"is", "are", "was", "were", "be", "been", "being", "will",
        "would", "can", "could", "may", "might", "shall", "should",
        "must", "do", "does", "did", "has", "have", "had"}
_ADVS = {"first", "then", "still", "often", "never", "always", "daily",
         "yesterday", "today", "tomorrow", "now", "not"}

# irregular verb forms -> lemma; regular forms are handled by suffix rules
_IRREGULAR_VERBS = {
    "told": "tell", "tells": "tell", "telling": "tell",
    "gave": "give", "gives": "give", "given": "give", "giving": "give",
    "showed": "show", "shown": "show", "shows": "show",
    "sent": "send", "sends": "send", "sending": "send",
    "brought": "bring", "brings": "bring",
    "taught": "teach", "teaches": "teach",
    "read": "read", "reads": "read",
    "sang": "sing", "sings": "sing", "sung": "sing",
    "threw": "throw", "throws": "throw", "thrown": "throw",
    "wrote": "write", "writes": "write", "written": "write",
    "lent": "lend", "lends": "lend",
    "passed": "pass", "passes": "pass",
    "fed": "feed", "feeds": "feed",
    "sold": "sell", "sells": "sell",
    "paid": "pay", "pays": "pay",
    "asked": "ask", "asks": "ask",
    "said": "say", "says": "say",
}
_VERB_STEMS = {"tell", "give", "show", "send", "bring", "teach", "offer",
               "hand", "mail", "promise", "read", "sing", "throw", "write",
               "lend", "pass", "serve", "feed", "award", "grant", "ask",
               "remind", "owe", "sell", "pay", "say", "walk", "talk",
               "visit", "help", "call", "thank", "answer", "watch", "open",
               "close", "play", "work", "live", "love", "like", "want"}


def _verb_lemma(word: str) -> str | None:
    if word in _IRREGULAR_VERBS:
        return _IRREGULAR_VERBS[word]
    if word in _VERB_STEMS:
        return word
    for suffix, glue in (("ies", "y"), ("es", ""), ("s", ""),
                         ("ed", ""), ("ing", "")):
        if word.endswith(suffix):
            stem = word[: -len(suffix)] + glue
            if stem in _VERB_STEMS:
                return stem
            if suffix in ("ed", "ing") and stem + "e" in _VERB_STEMS:
                return stem + "e"
    return None


def _noun_lemma(word: str) -> str:
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("s") and not word.endswith("ss") and len(word) > 3:
        return word[:-1]
    return word


class ChunkBackend:
    """Deterministic regex tokenizer, lexicon tagger and chunk parser."""

    name = "chunk"

    def parse(self, text: str) -> ParsedSentence:
        forms = _TOKEN_RE.findall(text)
        tokens = [self._tag(form, i) for i, form in enumerate(forms)]
        return ParsedSentence(tokens, self._chunk(tokens))

    def _tag(self, form: str, index: int) -> Token:
        word = form.lower()
        if not word[0].isalnum():
            return (form, word, "punct")
        if word.isdigit():
            return (form, word, "num")
        if word in _DETS:
            return (form, word, "det")
        if word in _ADPS:
            return (form, word, "adp")
        if word in _PRONOUNS:
            return (form, word, "pron")
        if word in _AUX:
            return (form, word, "aux")
        if word in _ADVS or (word.endswith("ly") and len(word) > 3):
            return (form, word, "adv")
        verb = _verb_lemma(word)
        if verb is not None:
            return (form, verb, "verb")
        if form[0].isupper() and index > 0:
            return (form, word, "propn")
        return (form, _noun_lemma(word), "noun")

    def _chunk(self, tokens: list[Token]) -> dict:
        """Shallow chunks: nominal runs become nps, adp+np becomes a pp,
        a verb opens a vp that collects following nps and pps."""
        nominal = {"det", "adj", "noun", "propn", "num", "pron"}
        leaves = [{"label": pos} for _, _, pos in tokens]
        chunks: list[dict] = []
        i = 0
        n = len(tokens)

        def take_np():
            # a determiner or pronoun starts a fresh np; bare nominal
            # runs ("old war stories") stay together
            nonlocal i
            start = i
            if tokens[i][2] == "pron":
                i += 1
            else:
                if tokens[i][2] == "det":
                    i += 1
                while i < n and tokens[i][2] in nominal - {"det", "pron"}:
                    i += 1
            return {"label": "np", "children": leaves[start:i]}

        def take_chunk():
            nonlocal i
            pos = tokens[i][2]
            if pos in nominal:
                return take_np()
            if pos == "adp" and i + 1 < n and tokens[i + 1][2] in nominal:
                adp = leaves[i]
                i += 1
                return {"label": "pp", "children": [adp, take_np()]}
            node = leaves[i]
            i += 1
            return node

        while i < n:
            pos = tokens[i][2]
            if pos in ("verb", "aux"):
                members = [leaves[i]]
                i += 1
                while i < n and tokens[i][2] in nominal | {"adp", "adv"}:
                    members.append(take_chunk())
                chunks.append({"label": "vp", "children": members})
            else:
                chunks.append(take_chunk())
        return {"label": "sentence", "children": chunks}


class SpacyBeneparBackend:
    """spaCy tokenization and lemmas, Berkeley neural parser constituents.

    Requires the optional [spacy] extra plus downloaded models
    (en_core_web_md and benepar_en3).
    """

    name = "spacy-benepar"

    def __init__(self, model: str = "en_core_web_md",
                 benepar_model: str = "benepar_en3"):
        try:
            import benepar
            import spacy
        except ImportError as exc:
            raise ParserUnavailable(
                "spacy/benepar are not installed; pip install "
                "'framecxn-preproc[spacy]' and download the models") from exc
        try:
            self._nlp = spacy.load(model)
            self._nlp.add_pipe("benepar", config={"model": benepar_model})
        except Exception as exc:  # missing models, incompatible versions
            raise ParserUnavailable(f"cannot initialise {model}: {exc}") from exc

    def parse(self, text: str) -> ParsedSentence:
        doc = self._nlp(text)
        sents = list(doc.sents)
        tokens = [(t.text, (t.lemma_ or t.text).lower(), t.pos_.lower())
                  for t in doc]
        trees = [self._convert(s) for s in sents]
        tree = trees[0] if len(trees) == 1 else \
            {"label": "sentence", "children": trees}
        return ParsedSentence(tokens, tree)

    def _convert(self, span) -> dict:
        children = list(span._.children)
        if not children:
            if len(span) == 1:
                return {"label": span[0].pos_.lower()}
            return {"label": (span._.labels[0].lower()
                              if span._.labels else "x"),
                    "children": [{"label": t.pos_.lower()} for t in span]}
        label = span._.labels[0].lower() if span._.labels else "x"
        return {"label": label,
                "children": [self._convert(c) for c in children]}


_BACKENDS = {
    ChunkBackend.name: ChunkBackend,
    SpacyBeneparBackend.name: SpacyBeneparBackend,
}


def get_backend(name: str):
    try:
        factory = _BACKENDS[name]
    except KeyError:
        raise ParserUnavailable(
            f"unknown backend {name!r}; available: "
            f"{', '.join(sorted(_BACKENDS))}") from None
    return factory()
