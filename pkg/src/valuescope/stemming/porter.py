"""Classic English suffix-stripping stemmer (the original 1980 algorithm).

Implements the rules as originally published, without the later revisions
that most modern ports fold in (so `abli` maps to `able`, there is no
`logi` rule, and two-letter words still pass through the steps). Outputs
are pinned against tests/data/porter_pairs.txt.
"""

from __future__ import annotations

STEP2_RULES = (
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"),
    ("anci", "ance"), ("izer", "ize"), ("abli", "able"), ("alli", "al"),
    ("entli", "ent"), ("eli", "e"), ("ousli", "ous"), ("ization", "ize"),
    ("ation", "ate"), ("ator", "ate"), ("alism", "al"),
    ("iveness", "ive"), ("fulness", "ful"), ("ousness", "ous"),
    ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
)
STEP3_RULES = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
)
STEP4_SUFFIXES = (
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
    "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
)


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in "aeiou":
        return False
    if ch == "y":
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Count vowel-run to consonant-run transitions (the m of the rules)."""
    m = 0
    prev_vowel = False
    for i in range(len(stem)):
        consonant = _is_consonant(stem, i)
        if consonant and prev_vowel:
            m += 1
        prev_vowel = not consonant
    return m


def _has_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_consonant(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    n = len(word)
    return (
        n >= 3
        and _is_consonant(word, n - 3)
        and not _is_consonant(word, n - 2)
        and _is_consonant(word, n - 1)
        and word[-1] not in "wxy"
    )


def _longest_match(word: str, suffixes) -> str | None:
    best = None
    for suffix in suffixes:
        if word.endswith(suffix) and (best is None or len(suffix) > len(best)):
            best = suffix
    return best


def _step1a(word: str) -> str:
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ies"):
        return word[:-2]
    if word.endswith("ss"):
        return word
    if word.endswith("s"):
        return word[:-1]
    return word


def _step1b(word: str) -> str:
    if word.endswith("eed"):
        if _measure(word[:-3]) > 0:
            return word[:-1]
        return word
    if word.endswith("ed") and _has_vowel(word[:-2]):
        return _restore(word[:-2])
    if word.endswith("ing") and _has_vowel(word[:-3]):
        return _restore(word[:-3])
    return word


def _restore(word: str) -> str:
    """Fix up a stem after ed/ing removal (hop-p-ing, conflat-ed cases)."""
    if word.endswith(("at", "bl", "iz")):
        return word + "e"
    if _ends_double_consonant(word) and word[-1] not in "lsz":
        return word[:-1]
    if _measure(word) == 1 and _ends_cvc(word):
        return word + "e"
    return word


def _step1c(word: str) -> str:
    if word.endswith("y") and _has_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


def _map_suffix(word: str, rules) -> str:
    """Longest matching suffix wins; its replacement applies only when the
    remaining stem has m > 0. No shorter rule is tried after a failed one."""
    matched = _longest_match(word, [suffix for suffix, _ in rules])
    if matched is None:
        return word
    replacement = dict(rules)[matched]
    stem = word[: -len(matched)]
    if _measure(stem) > 0:
        return stem + replacement
    return word


def _step4(word: str) -> str:
    matched = _longest_match(word, STEP4_SUFFIXES)
    if matched is None:
        return word
    stem = word[: -len(matched)]
    if _measure(stem) <= 1:
        return word
    if matched == "ion" and not stem.endswith(("s", "t")):
        return word
    return stem


def _step5a(word: str) -> str:
    if word.endswith("e"):
        m = _measure(word)  # a trailing vowel adds no transition
        if m > 1 or (m == 1 and not _ends_cvc(word[:-1])):
            return word[:-1]
    return word


def _step5b(word: str) -> str:
    if word.endswith("ll") and _measure(word) > 1:
        return word[:-1]
    return word


def stem(word: str) -> str:
    word = word.lower()
    if len(word) <= 1:
        return word
    word = _step1a(word)
    word = _step1b(word)
    word = _step1c(word)
    word = _map_suffix(word, STEP2_RULES)
    word = _map_suffix(word, STEP3_RULES)
    word = _step4(word)
    word = _step5a(word)
    word = _step5b(word)
    return word
