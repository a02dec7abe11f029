"""Preprocessing frontend for framecxn: raw text plus PropBank-style
annotations in, corpus interchange JSONL out."""

from .backends import ChunkBackend, SpacyBeneparBackend, get_backend
from .errors import ParserUnavailable, PreprocError, TokenizationMismatch
from .preprocess import PreprocessStats, preprocess, preprocess_file

__version__ = "0.1.0"

__all__ = ["ChunkBackend", "ParserUnavailable", "PreprocError",
           "PreprocessStats", "SpacyBeneparBackend", "TokenizationMismatch",
           "get_backend", "preprocess", "preprocess_file"]
