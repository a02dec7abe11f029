import copy
import json

import pytest

from framecxn import ConstructionNetwork, ingest_utterance, learn_corpus

# The running example: one annotated utterance to learn from and one
# parsed-but-unannotated utterance to extract from.

FIG1_RECORD = {
    "id": "cctv/0",
    "tokens": [
        {"form": "Old", "lemma": "old", "pos": "propn"},
        {"form": "Li", "lemma": "li", "pos": "propn"},
        {"form": "Jingtang", "lemma": "jingtang", "pos": "propn"},
        {"form": "still", "lemma": "still", "pos": "adv"},
        {"form": "tells", "lemma": "tell", "pos": "verb"},
        {"form": "visitors", "lemma": "visitor", "pos": "noun"},
        {"form": "old", "lemma": "old", "pos": "adj"},
        {"form": "war", "lemma": "war", "pos": "noun"},
        {"form": "stories", "lemma": "story", "pos": "noun"},
        {"form": ".", "lemma": ".", "pos": "punct"},
    ],
    "tree": {"label": "sentence", "children": [
        {"label": "np", "children": [
            {"label": "propn"}, {"label": "propn"}, {"label": "propn"}]},
        {"label": "adv"},
        {"label": "vp", "children": [
            {"label": "verb"},
            {"label": "np"},
            {"label": "np", "children": [
                {"label": "adj"}, {"label": "noun"}, {"label": "noun"}]},
        ]},
        {"label": "punct"},
    ]},
    "frames": [{"roleset": "tell.01", "v": [4, 5],
                "roles": {"arg0": [0, 3], "arg1": [6, 9], "arg2": [5, 6],
                          "argm-tmp": [3, 4]}}],
}

FIG5_RECORD = {
    "id": "nt/0",
    "tokens": [
        {"form": "First", "lemma": "first", "pos": "adv"},
        {"form": ",", "lemma": ",", "pos": "punct"},
        {"form": "Moses", "lemma": "moses", "pos": "propn"},
        {"form": "told", "lemma": "tell", "pos": "verb"},
        {"form": "the", "lemma": "the", "pos": "det"},
        {"form": "people", "lemma": "people", "pos": "noun"},
        {"form": "every", "lemma": "every", "pos": "det"},
        {"form": "command", "lemma": "command", "pos": "noun"},
        {"form": "in", "lemma": "in", "pos": "adp"},
        {"form": "the", "lemma": "the", "pos": "det"},
        {"form": "law", "lemma": "law", "pos": "noun"},
        {"form": ".", "lemma": ".", "pos": "punct"},
    ],
    "tree": {"label": "sentence", "children": [
        {"label": "advp"},
        {"label": "punct"},
        {"label": "np"},
        {"label": "vp", "children": [
            {"label": "verb"},
            {"label": "np", "children": [{"label": "det"}, {"label": "noun"}]},
            {"label": "np", "children": [
                {"label": "det"}, {"label": "noun"},
                {"label": "pp", "children": [
                    {"label": "adp"},
                    {"label": "np", "children": [
                        {"label": "det"}, {"label": "noun"}]}]},
            ]},
        ]},
        {"label": "punct"},
    ]},
    "frames": [],
}


@pytest.fixture
def fig1_record():
    return copy.deepcopy(FIG1_RECORD)


@pytest.fixture
def fig5_record():
    return copy.deepcopy(FIG5_RECORD)


@pytest.fixture
def fig1_utterance(fig1_record):
    return ingest_utterance(fig1_record)


@pytest.fixture
def fig5_utterance(fig5_record):
    return ingest_utterance(fig5_record)


@pytest.fixture
def fig1_net(fig1_utterance):
    """Network learnt from the single annotated example utterance."""
    net = ConstructionNetwork()
    learn_corpus(net, [fig1_utterance])
    return net


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    return path
