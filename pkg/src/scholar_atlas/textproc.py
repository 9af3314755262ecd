"""Text normalization: raw strings to stemmed token count bags.

The pipeline is fixed and order matters:

1. lowercase,
2. every character outside [a-z] becomes a separator,
3. split on separators,
4. drop tokens shorter than 2 characters,
5. drop stopwords (before stemming, so "having" is caught by the list
   rather than surviving as "have"),
6. stem each survivor,
7. drop any stem that came out shorter than 2 characters or landed on a
   stopword ("sameness" stems to "same"),
8. aggregate counts.

Step 7 is what makes the bag invariant checkable: every key matches
^[a-z]{2,}$ and is not a stopword, no matter what the input looked like.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .stemming import stem
from .stopwords import STOPWORDS

_WORD_RE = re.compile(r"[a-z]+")

_EMPHASIS_WEIGHTS = {"none": 0, "normal": 1, "high": 5}


class EmphasisLevel(enum.Enum):
    """How hard self-declared keywords count next to publication text."""

    NONE = "none"
    NORMAL = "normal"
    HIGH = "high"

    @property
    def weight(self) -> int:
        return _EMPHASIS_WEIGHTS[self.value]


@dataclass
class TokenBag:
    """Multiset of normalized tokens with their raw counts."""

    counts: dict[str, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def is_empty(self) -> bool:
        return not self.counts

    def merged(self, other: "TokenBag") -> "TokenBag":
        out = dict(self.counts)
        for token, count in other.counts.items():
            out[token] = out.get(token, 0) + count
        return TokenBag(out)

    def scaled(self, factor: int) -> "TokenBag":
        """Bag with every count multiplied by a non-negative integer."""
        if factor < 0:
            raise ValueError(f"scale factor must be >= 0, got {factor}")
        if factor == 0:
            return TokenBag()
        return TokenBag({t: c * factor for t, c in self.counts.items()})


def tokenize(text: str) -> list[str]:
    """Normalized token stream for ``text``, before aggregation.

    Order of first appearance is preserved; repeated tokens repeat.
    """
    out = []
    for raw in _WORD_RE.findall(text.lower()):
        if len(raw) < 2 or raw in STOPWORDS:
            continue
        token = stem(raw)
        if len(token) < 2 or token in STOPWORDS:
            continue
        out.append(token)
    return out


def normalize(text: str) -> TokenBag:
    """Normalize ``text`` into a TokenBag. Idempotent over bag round-trips:
    normalizing the space-joined keys of a bag reproduces those keys."""
    counts: dict[str, int] = {}
    for token in tokenize(text):
        counts[token] = counts.get(token, 0) + 1
    return TokenBag(counts)


def publication_bag(publications) -> TokenBag:
    """Normalized bag over the concatenated titles and abstracts."""
    parts = []
    for pub in publications:
        parts.append(pub.title)
        parts.append(pub.abstract)
    return normalize(" ".join(parts))


def keyword_bag(profile) -> TokenBag:
    return normalize(" ".join(profile.keywords))


def assemble_document(profile, publications, emphasis: EmphasisLevel) -> TokenBag:
    """One researcher's document: publication text plus keywords counted
    ``emphasis.weight`` times each. NONE drops keywords entirely; a
    researcher with no usable text anywhere yields an empty bag, which
    downstream stages treat as "insufficient data" rather than an error.
    """
    return publication_bag(publications).merged(keyword_bag(profile).scaled(emphasis.weight))
