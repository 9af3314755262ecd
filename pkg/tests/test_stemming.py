"""Stemmer tests: frozen single-pass vectors, reference-oracle agreement,
and the fixed-point contract the rest of the pipeline relies on."""

import string

import pytest
from hypothesis import given, strategies as st

from scholar_atlas.stemming import stem, stem_once

from porter_reference import reference_stem, reference_stem_once

# Single-pass expected outputs, hand-traced through the canonical rules
# (including the three documented departures). Each entry was verified by
# walking the steps by hand before being frozen here; none were produced
# by running the implementation under test.
SINGLE_PASS = {
    # step 1a
    "caresses": "caress",
    "ponies": "poni",
    "ties": "ti",
    "caress": "caress",
    "cats": "cat",
    "gas": "ga",
    # step 1b
    "feed": "feed",
    "agreed": "agre",  # eed -> ee, then step 5 drops the final e
    "plastered": "plaster",
    "bled": "bled",
    "motoring": "motor",
    "sing": "sing",
    "conflated": "conflat",
    "troubled": "troubl",
    "sized": "size",
    "hopping": "hop",
    "tanned": "tan",
    "falling": "fall",
    "hissing": "hiss",
    "fizzed": "fizz",
    "failing": "fail",
    "filing": "file",
    # step 1c
    "happy": "happi",
    "sky": "sky",
    # step 2
    "relational": "relat",
    "conditional": "condit",
    "rational": "ration",
    "valenci": "valenc",
    "hesitanci": "hesit",
    "digitizer": "digit",
    "conformabli": "conform",  # bli -> ble departure, then step 4/5
    "radicalli": "radic",
    "differentli": "differ",
    "vileli": "vile",
    "analogousli": "analog",
    "vietnamization": "vietnam",
    "predication": "predic",
    "operator": "oper",
    "feudalism": "feudal",
    "decisiveness": "decis",
    "hopefulness": "hope",
    "callousness": "callous",
    "formaliti": "formal",
    "sensitiviti": "sensit",
    "sensibiliti": "sensibl",
    "archaeologi": "archaeolog",  # logi -> log departure
    "logi": "logi",  # empty stem, measure 0, rule does not fire
    # step 3
    "triplicate": "triplic",
    "formative": "form",
    "formalize": "formal",
    "electriciti": "electr",
    "electrical": "electr",
    "hopeful": "hope",
    "goodness": "good",
    # step 4
    "revival": "reviv",
    "allowance": "allow",
    "inference": "infer",
    "airliner": "airlin",
    "gyroscopic": "gyroscop",
    "adjustable": "adjust",
    "defensible": "defens",
    "irritant": "irrit",
    "replacement": "replac",
    "adjustment": "adjust",
    "dependent": "depend",
    "adoption": "adopt",
    "homologou": "homolog",
    "communism": "commun",
    "activate": "activ",
    "angulariti": "angular",
    "homologous": "homolog",
    "effective": "effect",
    "bowdlerize": "bowdler",
    # step 5
    "probate": "probat",
    "rate": "rate",
    "cease": "ceas",
    "controll": "control",
    "roll": "roll",
    # words the pipeline cares about
    "science": "scienc",
    "learning": "learn",
    "graphs": "graph",
    "algorithms": "algorithm",
    "clustering": "cluster",
}

FIXED_POINT = {
    "agreed": "agr",  # agre -> agr on the second pass
    "possibli": "possibl",  # possible -> possibl on the second pass
    "ties": "ti",
    "learning": "learn",
    "visualization": "visual",
}


@pytest.mark.parametrize("word,expected", sorted(SINGLE_PASS.items()))
def test_single_pass_frozen_vectors(word, expected):
    assert stem_once(word) == expected


@pytest.mark.parametrize("word,expected", sorted(SINGLE_PASS.items()))
def test_reference_oracle_agrees_on_frozen_vectors(word, expected):
    # anchors the transliterated oracle itself to the hand-traced values
    assert reference_stem_once(word) == expected


@pytest.mark.parametrize("word,expected", sorted(FIXED_POINT.items()))
def test_fixed_point_frozen_vectors(word, expected):
    assert stem(word) == expected
    assert reference_stem(word) == expected


@pytest.mark.parametrize("word", ["a", "is", "as", "ox", "be", "s", ""])
def test_short_words_unchanged(word):
    assert stem_once(word) == word
    assert stem(word) == word


words = st.text(alphabet=string.ascii_lowercase, min_size=1, max_size=24)


@given(words)
def test_single_pass_matches_reference(word):
    assert stem_once(word) == reference_stem_once(word)


@given(words)
def test_fixed_point_matches_reference(word):
    assert stem(word) == reference_stem(word)


@given(words)
def test_stem_is_idempotent(word):
    stemmed = stem(word)
    assert stem(stemmed) == stemmed


@given(words)
def test_stem_never_grows_nonempty_to_empty(word):
    assert stem(word) != "" or word == ""


def test_fixture_vocabulary_agrees_with_reference():
    """Every word the synthetic corpus generator can emit stems identically
    under the package and the reference oracle."""
    from scholar_atlas import synth

    pool = set()
    for area in synth.AREAS.values():
        pool.update(area["words"].split())
        for phrase in area["keywords"]:
            pool.update(phrase.replace("-", " ").split())
    pool.update(synth._FILLER)
    pool.update(synth._GLUE)
    assert len(pool) > 300
    for word in sorted(pool):
        assert stem(word) == reference_stem(word), word
