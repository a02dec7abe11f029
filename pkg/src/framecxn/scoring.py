"""Word-level precision/recall/F1 at roleset and frame granularity.

Every role span of an instance expands to one (token index, role,
roleset key) tuple per covered token; the frame-evoking span expands
under the pseudo-role "v".  At frame level the sense suffix of the
roleset label is stripped, so tell.02 counts as correct where the gold
says tell.01.  Tuples are sets: duplicate labels collapse, which makes
score(gold, gold) exactly 100/100/100.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import FrameInstance, Utterance
from .errors import MisalignedCorporaError

LEVEL_ROLESET = "roleset"
LEVEL_FRAME = "frame"
LEVELS = (LEVEL_ROLESET, LEVEL_FRAME)


@dataclass
class ScoreReport:
    level: str
    precision: float
    recall: float
    f1: float
    true_positives: int
    predicted_total: int
    gold_total: int

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "precision": round(self.precision, 2),
            "recall": round(self.recall, 2),
            "f1": round(self.f1, 2),
            "true_positives": self.true_positives,
            "predicted_total": self.predicted_total,
            "gold_total": self.gold_total,
        }


def roleset_key(roleset: str, level: str) -> str:
    if level == LEVEL_ROLESET:
        return roleset
    if level == LEVEL_FRAME:
        return roleset.rsplit(".", 1)[0]
    raise ValueError(f"unknown level {level!r}")


def label_tokens(instances: Iterable[FrameInstance],
                 level: str = LEVEL_ROLESET) -> set[tuple[int, str, str]]:
    """Expand instances to (token index, role, roleset key) tuples."""
    out = set()
    for inst in instances:
        key = roleset_key(inst.roleset, level)
        for t in range(inst.v_span[0], inst.v_span[1]):
            out.add((t, "v", key))
        for role, (start, end) in inst.roles.items():
            for t in range(start, end):
                out.add((t, role, key))
    return out


def score(pred: Sequence[Utterance], gold: Sequence[Utterance],
          level: str) -> ScoreReport:
    """Score utterance-aligned predictions against gold annotations.

    Both corpora must list the same utterances in the same order.  With
    an empty prediction (or gold) side, the respective rate is 100 when
    the other side is empty too, else 0.
    """
    if len(pred) != len(gold):
        raise MisalignedCorporaError(
            f"{len(pred)} predicted utterances vs {len(gold)} gold")
    pred_tuples = set()
    gold_tuples = set()
    for p, g in zip(pred, gold):
        if p.id != g.id:
            raise MisalignedCorporaError(
                f"utterance id mismatch: {p.id!r} vs {g.id!r}")
        pred_tuples |= {(p.id,) + t for t in label_tokens(p.frames, level)}
        gold_tuples |= {(g.id,) + t for t in label_tokens(g.frames, level)}
    tp = len(pred_tuples & gold_tuples)
    precision = _rate(tp, len(pred_tuples), len(gold_tuples))
    recall = _rate(tp, len(gold_tuples), len(pred_tuples))
    if precision + recall > 0:
        f1 = 2 * precision * recall / (precision + recall)
    else:
        f1 = 0.0
    return ScoreReport(level, precision, recall, f1,
                       tp, len(pred_tuples), len(gold_tuples))


def _rate(tp: int, denom: int, other_denom: int) -> float:
    if denom == 0:
        return 100.0 if other_denom == 0 else 0.0
    return 100.0 * tp / denom
