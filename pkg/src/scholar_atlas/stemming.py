"""Porter suffix stripper, run to a fixed point.

The single-pass rules follow the widely circulated ANSI C reference
implementation of the Porter algorithm, including its three deliberate
departures from the 1980 journal text:

* words of length <= 2 are returned unchanged,
* "bli" is rewritten to "ble" (not "bl"),
* "logi" is rewritten to "log".

A single pass is not idempotent ("agreed" -> "agre" -> "agr"), so the public
``stem`` iterates the pass until the output stops changing. All documented
behavior and all stored expected values refer to the fixed point.

Inputs are expected to be lowercase ASCII words. Anything else is treated
as a consonant by the vowel tests, which keeps the function total.
"""

from functools import lru_cache

_VOWELS = "aeiou"


def _cons(word: str, i: int) -> bool:
    """True when word[i] acts as a consonant.

    'y' is a consonant at position 0 and after a vowel; after a consonant it
    acts as a vowel ("syzygy").
    """
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _cons(word, i - 1)
    return True


def _measure(word: str, end: int) -> int:
    """Number of vowel-to-consonant transitions in word[:end]."""
    m = 0
    prev_vowel = False
    for i in range(end):
        if _cons(word, i):
            if prev_vowel:
                m += 1
            prev_vowel = False
        else:
            prev_vowel = True
    return m


def _has_vowel(word: str, end: int) -> bool:
    return any(not _cons(word, i) for i in range(end))


def _ends_double_cons(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _cons(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    """consonant-vowel-consonant ending where the final consonant is not
    w, x or y. Restores an 'e' after stripping ("hop" + "ing" -> "hope")."""
    n = len(word)
    return (
        n >= 3
        and _cons(word, n - 1)
        and not _cons(word, n - 2)
        and _cons(word, n - 3)
        and word[-1] not in "wxy"
    )


def _step1a(w: str) -> str:
    if w.endswith("sses"):
        return w[:-2]
    if w.endswith("ies"):
        return w[:-3] + "i"
    if w.endswith("ss"):
        return w
    if w.endswith("s"):
        return w[:-1]
    return w


def _step1b(w: str) -> str:
    if w.endswith("eed"):
        if _measure(w, len(w) - 3) > 0:
            return w[:-1]
        return w
    if w.endswith("ed") and _has_vowel(w, len(w) - 2):
        w = w[:-2]
    elif w.endswith("ing") and _has_vowel(w, len(w) - 3):
        w = w[:-3]
    else:
        return w
    if w.endswith(("at", "bl", "iz")):
        return w + "e"
    if _ends_double_cons(w) and w[-1] not in "lsz":
        return w[:-1]
    if _measure(w, len(w)) == 1 and _ends_cvc(w):
        return w + "e"
    return w


def _step1c(w: str) -> str:
    if w.endswith("y") and _has_vowel(w, len(w) - 1):
        return w[:-1] + "i"
    return w


# (suffix, replacement), condition m(stem) > 0. Ordered longest-first so the
# first matching suffix is the longest one; when its condition fails no
# shorter suffix is tried, matching the reference implementation's
# switch-on-penultimate-letter dispatch.
_STEP2_RULES = (
    ("ational", "ate"),
    ("ization", "ize"),
    ("iveness", "ive"),
    ("fulness", "ful"),
    ("ousness", "ous"),
    ("biliti", "ble"),
    ("tional", "tion"),
    ("entli", "ent"),
    ("ousli", "ous"),
    ("ation", "ate"),
    ("alism", "al"),
    ("aliti", "al"),
    ("iviti", "ive"),
    ("enci", "ence"),
    ("anci", "ance"),
    ("izer", "ize"),
    ("alli", "al"),
    ("ator", "ate"),
    ("logi", "log"),
    ("bli", "ble"),
    ("eli", "e"),
)

_STEP3_RULES = (
    ("icate", "ic"),
    ("ative", ""),
    ("alize", "al"),
    ("iciti", "ic"),
    ("ical", "ic"),
    ("ness", ""),
    ("ful", ""),
)

# step 4 strips the suffix outright, condition m(stem) > 1. "ion" carries an
# extra match requirement: the stem must end in s or t.
_STEP4_SUFFIXES = (
    "ement",
    "ance", "ence", "able", "ible", "ment",
    "ant", "ent", "ion", "ism", "ate", "iti", "ous", "ive", "ize",
    "al", "er", "ic", "ou",
)


def _apply_rules(w: str, rules) -> str:
    for suffix, repl in rules:
        if w.endswith(suffix):
            stem = w[: len(w) - len(suffix)]
            if _measure(w, len(stem)) > 0:
                return stem + repl
            return w
    return w


def _step4(w: str) -> str:
    for suffix in _STEP4_SUFFIXES:
        if not w.endswith(suffix):
            continue
        stem_len = len(w) - len(suffix)
        if suffix == "ion" and (stem_len == 0 or w[stem_len - 1] not in "st"):
            continue
        if _measure(w, stem_len) > 1:
            return w[:stem_len]
        return w
    return w


def _step5(w: str) -> str:
    if w.endswith("e"):
        m = _measure(w, len(w) - 1)
        if m > 1 or (m == 1 and not _ends_cvc(w[:-1])):
            w = w[:-1]
    if w.endswith("ll") and _measure(w, len(w)) > 1:
        w = w[:-1]
    return w


def stem_once(word: str) -> str:
    """One pass of the suffix-stripping rules. Not idempotent."""
    if len(word) <= 2:
        return word
    w = _step1a(word)
    w = _step1b(w)
    w = _step1c(w)
    w = _apply_rules(w, _STEP2_RULES)
    w = _apply_rules(w, _STEP3_RULES)
    w = _step4(w)
    w = _step5(w)
    return w


@lru_cache(maxsize=None)
def stem(word: str) -> str:
    """Suffix-strip ``word`` until the result stops changing.

    Idempotent by construction: stem(stem(w)) == stem(w).
    """
    w = word
    while True:
        nxt = stem_once(w)
        if nxt == w:
            return w
        w = nxt
