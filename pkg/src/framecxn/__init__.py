"""framecxn: learn construction grammars from frame-annotated treebanks
and use the learnt network for semantic frame extraction.

The package is organised around a small pipeline:

  corpus    -- tokens, constituency trees, frame annotations, ingestion
  grammar   -- constructions, categories, categorial links, the network
  learning  -- single-pass grammar learning from annotated utterances
  matching  -- applying a learnt network to unseen parsed utterances
  kernel    -- binding enumeration (compiled core, pure-Python fallback)
  scoring   -- word-level precision/recall/F1
  analytics -- frequency statistics and network queries
  storage   -- grammar file round-tripping
  cli       -- the `framecxn` command
"""

from .analytics import (GrammarReport, RankFrequencyTable,
                        associated_rolesets, cosine_similarity,
                        grammar_report, hapax_ratio, nearest_frame_evoking,
                        rank_frequency)
from .corpus import (ConstituencyTree, ConstNode, FrameInstance, Token,
                     Utterance, ingest_utterance, read_corpus, write_corpus)
from .errors import FramecxnError
from .grammar import (ArgStructCxn, CategorialLink, Category,
                      ConstructionNetwork, FrameEvokingCxn, PathStep,
                      PrecedenceConstraint, RoleSlot, RolesetCxn,
                      canonical_signature)
from .kernel import BACKEND as KERNEL_BACKEND
from .learning import (LearnStats, SkipReason, detect_precedence,
                       extract_path, learn_corpus, learn_instance)
from .matching import (Binding, Extractor, extract, match_argstruct,
                       match_frame_evoking)
from .scoring import ScoreReport, label_tokens, score
from .storage import (dumps_grammar, load_grammar, network_from_doc,
                      network_to_doc, save_grammar)

__version__ = "0.1.0"

__all__ = [
    "ArgStructCxn", "Binding", "CategorialLink", "Category",
    "ConstituencyTree", "ConstNode", "ConstructionNetwork", "Extractor",
    "FrameEvokingCxn", "FrameInstance", "FramecxnError", "GrammarReport",
    "KERNEL_BACKEND", "LearnStats", "PathStep", "PrecedenceConstraint",
    "RankFrequencyTable", "RoleSlot", "RolesetCxn", "ScoreReport",
    "SkipReason", "Token", "Utterance", "associated_rolesets",
    "canonical_signature", "cosine_similarity", "detect_precedence",
    "dumps_grammar", "extract", "extract_path", "grammar_report",
    "hapax_ratio", "ingest_utterance", "label_tokens", "learn_corpus",
    "learn_instance", "load_grammar", "match_argstruct",
    "match_frame_evoking", "nearest_frame_evoking", "network_from_doc",
    "network_to_doc", "rank_frequency", "read_corpus", "save_grammar",
    "score", "write_corpus",
]
