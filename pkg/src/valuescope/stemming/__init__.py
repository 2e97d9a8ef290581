"""Stemming algorithms used to generalize lexicon entries and corpus tokens.

Three independent stemmers, each a faithful from-scratch implementation:

- :mod:`.porter`: the original 1980 suffix-stripping algorithm.
- :mod:`.porter2`: the revised English algorithm (regions R1/R2,
  special-word list, apostrophe handling).
- :mod:`.lancaster`: the iterative rule-table stemmer, the most
  aggressive of the three.
"""

from . import lancaster, porter, porter2

__all__ = ["lancaster", "porter", "porter2"]
