"""Stemmer conformance against frozen reference pairs, plus properties."""

from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from valuescope.generalize import Strategy, generalize
from valuescope.stemming import lancaster, porter, porter2

DATA = Path(__file__).parent / "data"


def load_pairs(name: str) -> list[tuple[str, str]]:
    pairs = []
    for line in (DATA / name).read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        word, stem = line.split("\t")[:2]
        pairs.append((word, stem))
    return pairs


def test_snowball_matches_reference_pairs():
    pairs = load_pairs("porter2_pairs.txt")
    assert len(pairs) > 2000
    bad = [(w, e, porter2.stem(w)) for w, e in pairs if porter2.stem(w) != e]
    assert not bad, f"{len(bad)} mismatches, first: {bad[:5]}"


def test_porter_matches_reference_pairs():
    pairs = load_pairs("porter_pairs.txt")
    assert len(pairs) > 2000
    bad = [(w, e, porter.stem(w)) for w, e in pairs if porter.stem(w) != e]
    assert not bad, f"{len(bad)} mismatches, first: {bad[:5]}"


def test_lancaster_matches_derived_pairs():
    pairs = load_pairs("lancaster_pairs.txt")
    bad = [(w, e, lancaster.stem(w)) for w, e in pairs if lancaster.stem(w) != e]
    assert not bad, f"{len(bad)} mismatches: {bad}"


@pytest.mark.parametrize(
    "word,stem",
    [
        ("piety", "pieti"),
        ("justice", "justic"),
        ("curiosity", "curios"),
        ("empathy", "empathi"),
        ("dialogue", "dialogu"),
        ("conversation", "convers"),
        ("knowledge", "knowledg"),
    ],
)
def test_snowball_anchor_words(word, stem):
    assert porter2.stem(word) == stem


def test_lancaster_intact_rule():
    # "mu" strips only from unmodified words
    assert lancaster.stem("maximum") == "maxim"
    assert lancaster.stem("museum") == "muse"


def test_double_snowball_differs_where_not_fixed_point():
    # single pass leaves a stem that stems again
    once = porter2.stem("realization")
    twice = porter2.stem(once)
    assert once == "realize" and twice == "realiz"
    assert generalize(Strategy.DOUBLE_SNOWBALL, "realization") == "realiz"


@pytest.mark.parametrize("name", ["exact", "porter", "snowball", "lancaster", "snowball2"])
def test_strategy_names_round_trip(name):
    assert str(Strategy.from_name(name)) == name


def test_unknown_strategy_name_lists_valid_ones():
    with pytest.raises(ValueError, match="snowball2"):
        Strategy.from_name("stemmer9000")


words = st.text(
    alphabet=st.sampled_from("abcdefghijklmnopqrstuvwxyzJKQZ'’y"),
    max_size=20,
)


@given(words)
def test_stemmers_total_and_deterministic(word):
    for fn in (porter.stem, porter2.stem, lancaster.stem):
        out = fn(word)
        assert isinstance(out, str)
        assert out == fn(word)


@given(words, st.sampled_from(list(Strategy)))
def test_generalize_total_and_lowercase(word, strategy):
    out = generalize(strategy, word)
    assert out == out.lower()
    assert generalize(strategy, word) == out


@given(st.text(alphabet=st.sampled_from("abcdefghijklmnopqrstuvwxyz"), max_size=20))
def test_exact_is_identity_on_lowercase(word):
    assert generalize(Strategy.EXACT, word) == word
