"""Lexicon-driven value annotation and embedding analysis for story corpora.

The pipeline: load plain-text corpora, match tokens against a stemmed
value lexicon, insert label markers around matches, train aligned word
embeddings on the marked texts, and compare label neighborhoods across
corpora via similarity graphs and overlapping clusters.
"""

__version__ = "0.1.0"
