"""Offline generator of per-sentence linguistic annotations.

Reads a debate corpus (JSON Lines) and a word-embedding table, and writes
the sidecar annotation file consumed by the ranking pipeline: coarse POS
counts, named-entity flags, a lexicon sentiment score, LDA topic
proportions, mean token embeddings, and heuristic discourse relations.
"""

from .annotate import AnnotatorConfig, annotate_corpus

__version__ = "0.1.0"

__all__ = ["AnnotatorConfig", "annotate_corpus", "__version__"]
