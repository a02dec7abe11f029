"""Raw records to interchange records.

A raw record is ``{"id": str, "text": str, "frames": [...]}`` where the
frame spans are token indices under the adapter's own tokenization.
Records whose annotations are incompatible with the tokenization the
backend actually produced (span out of bounds, empty span, malformed
labels, or an untokenizable text) are dropped with a logged reason; the
survivors are emitted as schema-valid interchange records.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import TokenizationMismatch

logger = logging.getLogger(__name__)

CORE_ROLE_RE = re.compile(r"^arg([0-5]|a)$")
PASS_THROUGH_ROLE_RE = re.compile(r"^(argm($|-)|c-|r-)")
ROLESET_RE = re.compile(r"^\S+\.\d{2,}$")


@dataclass
class PreprocessStats:
    emitted: int = 0
    dropped: int = 0
    drop_reasons: dict[str, int] = field(default_factory=dict)

    def drop(self, record_id, reason: str):
        self.dropped += 1
        self.drop_reasons[reason] = self.drop_reasons.get(reason, 0) + 1
        logger.warning("dropped record %s: %s", record_id, reason)

    def to_json(self) -> dict:
        return {"emitted": self.emitted, "dropped": self.dropped,
                "drop_reasons": dict(sorted(self.drop_reasons.items()))}


def _check_span(raw, what: str, n_tokens: int):
    if (not isinstance(raw, (list, tuple)) or len(raw) != 2
            or not all(isinstance(x, int) for x in raw)):
        raise TokenizationMismatch(f"{what} span must be [start, end]")
    start, end = raw
    if not (0 <= start < end <= n_tokens):
        raise TokenizationMismatch(
            f"{what} span [{start},{end}) is outside the {n_tokens} tokens "
            "produced by the parser")
    return [start, end]


def _convert_frames(raw_frames, n_tokens: int) -> list[dict]:
    frames = []
    for j, raw in enumerate(raw_frames or []):
        if not isinstance(raw, dict):
            raise TokenizationMismatch(f"frame {j} is not an object")
        roleset = raw.get("roleset")
        if not isinstance(roleset, str) or not ROLESET_RE.match(roleset):
            raise TokenizationMismatch(
                f"frame {j} roleset {roleset!r} does not match lemma.NN")
        frame = {"roleset": roleset,
                 "v": _check_span(raw.get("v"), f"frame {j} v", n_tokens),
                 "roles": {}}
        for role, span in (raw.get("roles") or {}).items():
            role = role.lower()
            if not (CORE_ROLE_RE.match(role)
                    or PASS_THROUGH_ROLE_RE.match(role)):
                raise TokenizationMismatch(
                    f"frame {j} has unknown role label {role!r}")
            frame["roles"][role] = _check_span(
                span, f"frame {j} role {role}", n_tokens)
        frames.append(frame)
    return frames


def preprocess(raw_records: Iterable[dict], backend,
               stats: PreprocessStats | None = None) -> Iterator[dict]:
    """Yield interchange records; incompatible inputs are dropped and
    logged, so dropped + emitted equals the input count."""
    stats = stats if stats is not None else PreprocessStats()
    for record in raw_records:
        record_id = record.get("id") if isinstance(record, dict) else None
        try:
            if not isinstance(record, dict) or not isinstance(
                    record.get("id"), str) or not record["id"]:
                raise TokenizationMismatch("record must carry a string id")
            text = record.get("text")
            if not isinstance(text, str):
                raise TokenizationMismatch("record must carry a text field")
            parsed = backend.parse(text)
            if not parsed.tokens:
                raise TokenizationMismatch("text yields no tokens")
            frames = _convert_frames(record.get("frames"),
                                     len(parsed.tokens))
        except TokenizationMismatch as exc:
            stats.drop(record_id, str(exc))
            continue
        stats.emitted += 1
        yield {
            "id": record["id"],
            "tokens": [{"form": f, "lemma": l, "pos": p}
                       for f, l, p in parsed.tokens],
            "tree": parsed.tree,
            "frames": frames,
        }


def preprocess_file(in_path, out_path, backend) -> PreprocessStats:
    stats = PreprocessStats()
    with open(in_path, encoding="utf-8") as infh:
        raw = [json.loads(line) for line in infh if line.strip()]
    with open(out_path, "w", encoding="utf-8") as outfh:
        for record in preprocess(raw, backend, stats):
            outfh.write(json.dumps(record, ensure_ascii=False) + "\n")
    return stats
