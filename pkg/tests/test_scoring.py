import copy
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from framecxn import ingest_utterance
from framecxn.corpus import FrameInstance, Utterance
from framecxn.errors import MisalignedCorporaError
from framecxn.scoring import (LEVEL_FRAME, LEVEL_ROLESET, label_tokens,
                              score)
from framecxn.synth import make_corpus


def test_label_tokens_fig1(fig1_utterance):
    tuples = label_tokens(fig1_utterance.frames)
    assert len(tuples) == 8  # arg0 x3 + v x1 + arg2 x1 + arg1 x3
    assert all(key == "tell.01" for _, _, key in tuples)
    assert {(4, "v", "tell.01"), (0, "arg0", "tell.01"),
            (5, "arg2", "tell.01"), (8, "arg1", "tell.01")} <= tuples


def test_label_tokens_empty():
    assert label_tokens([]) == set()


def test_label_tokens_strips_sense_at_frame_level():
    inst = FrameInstance("have.03", (0, 1), {"arg0": (1, 2)})
    assert {key for _, _, key in label_tokens([inst], LEVEL_FRAME)} == {"have"}


def test_self_score_is_perfect(fig1_utterance):
    for level in (LEVEL_ROLESET, LEVEL_FRAME):
        report = score([fig1_utterance], [fig1_utterance], level)
        assert (report.precision, report.recall, report.f1) == (100, 100, 100)


def test_frame_level_forgives_sense(fig1_utterance):
    pred = copy.deepcopy(fig1_utterance)
    pred.frames[0].roleset = "tell.02"
    roleset = score([pred], [fig1_utterance], LEVEL_ROLESET)
    frame = score([pred], [fig1_utterance], LEVEL_FRAME)
    assert roleset.f1 == 0.0
    assert (frame.precision, frame.recall, frame.f1) == (100, 100, 100)


def test_missing_role_costs_recall_only(fig1_utterance):
    pred = copy.deepcopy(fig1_utterance)
    del pred.frames[0].roles["arg2"]
    report = score([pred], [fig1_utterance], LEVEL_ROLESET)
    # hand count: gold expands to 8 tuples, the prediction to 7, all correct
    assert report.gold_total == 8
    assert report.predicted_total == 7
    assert report.true_positives == 7
    assert report.precision == 100.0
    assert report.recall == 87.5


def test_score_rejects_misaligned_ids(fig1_utterance):
    other = copy.deepcopy(fig1_utterance)
    other.id = "other/0"
    with pytest.raises(MisalignedCorporaError):
        score([fig1_utterance], [other], LEVEL_ROLESET)
    with pytest.raises(MisalignedCorporaError):
        score([fig1_utterance], [], LEVEL_ROLESET)


def _corpus(n=30, seed=0):
    return [ingest_utterance(r) for r in make_corpus(n, seed=seed)]


def _corrupt(utts, rng):
    pred = []
    for utt in utts:
        utt = Utterance(utt.id, utt.tokens, utt.tree,
                        copy.deepcopy(utt.frames))
        frames = []
        for inst in utt.frames:
            roll = rng.random()
            if roll < 0.15:
                continue  # dropped instance
            if roll < 0.4:
                inst.roleset = inst.roleset.rsplit(".", 1)[0] + \
                    f".0{rng.randint(1, 4)}"
            if 0.4 <= roll < 0.6 and inst.roles:
                inst.roles.pop(rng.choice(sorted(inst.roles)))
            if 0.6 <= roll < 0.8 and inst.roles:
                role = rng.choice(sorted(inst.roles))
                start, end = inst.roles[role]
                end = min(len(utt.tokens), end + 1)
                inst.roles[role] = (start, end)
            frames.append(inst)
        utt.frames = frames
        pred.append(utt)
    return pred


def test_frame_level_never_scores_below_roleset_level():
    gold = _corpus()
    rng = random.Random(123)
    for _ in range(30):
        pred = _corrupt(gold, rng)
        roleset = score(pred, gold, LEVEL_ROLESET)
        frame = score(pred, gold, LEVEL_FRAME)
        assert frame.f1 >= roleset.f1 - 1e-9
        assert frame.precision >= roleset.precision - 1e-9
        assert frame.recall >= roleset.recall - 1e-9


def test_scores_are_permutation_invariant():
    gold = _corpus(12, seed=4)
    pred = _corrupt(gold, random.Random(9))
    direct = score(pred, gold, LEVEL_ROLESET)
    order = random.Random(2).sample(range(len(gold)), len(gold))
    shuffled = score([pred[i] for i in order], [gold[i] for i in order],
                     LEVEL_ROLESET)
    assert (direct.precision, direct.recall, direct.f1) == \
        (shuffled.precision, shuffled.recall, shuffled.f1)


@settings(max_examples=30)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 12))
def test_self_score_identity_on_random_corpora(seed, n):
    gold = [ingest_utterance(r) for r in make_corpus(n, seed=seed)]
    for level in (LEVEL_ROLESET, LEVEL_FRAME):
        report = score(gold, gold, level)
        assert (report.precision, report.recall, report.f1) == (100, 100, 100)


def test_empty_against_empty_scores_perfect(fig5_utterance):
    report = score([fig5_utterance], [fig5_utterance], LEVEL_ROLESET)
    assert (report.precision, report.recall, report.f1) == (100, 100, 100)


def test_empty_prediction_against_gold_scores_zero(fig1_utterance):
    empty = Utterance(fig1_utterance.id, fig1_utterance.tokens,
                      fig1_utterance.tree, [])
    report = score([empty], [fig1_utterance], LEVEL_ROLESET)
    assert (report.precision, report.recall, report.f1) == (0, 0, 0)
