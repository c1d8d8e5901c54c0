"""Per-tweet comparable attributes: text, entropy, sentiment, gender.

Everything here is a pure function over immutable inputs; lexicons are
read-only after load.
"""

from __future__ import annotations

import math
import unicodedata
from collections import Counter
from dataclasses import dataclass

from .gestalt import similarity
from .ingest import TweetRecord
from .lexicons import GenderLexicon, Lexicons, SentimentLexicon, default_lexicons

__all__ = [
    "AttributeVector",
    "similarity",
    "entropy_bits",
    "sentiment",
    "derive_gender",
    "derive_attributes",
]


@dataclass(frozen=True)
class AttributeVector:
    """The comparable attributes derived from one tweet.

    ``text`` is NFC-normalized but otherwise untouched (URLs and mentions are
    compared as-is).  Categorical fields are absent (None) when unknown;
    absent never matches anything downstream.
    """

    text: str
    timestamp_ms: int
    lang: str | None
    gender: str | None
    user_agent: str | None
    time_zone: str | None
    location: str | None
    profile_url: str | None
    profile_description: str | None
    entropy_bits: float
    sentiment: float


def entropy_bits(text: str) -> float:
    """Shannon entropy of the code-point distribution, in bits per character.

    Empty text and single-symbol text score 0.
    """
    if not text:
        return 0.0
    counts = Counter(text)
    total = len(text)
    h = 0.0
    for count in counts.values():
        p = count / total
        h -= p * math.log2(p)
    return max(h, 0.0)


def _strip_punctuation(token: str) -> str:
    start, end = 0, len(token)
    while start < end and unicodedata.category(token[start]).startswith("P"):
        start += 1
    while end > start and unicodedata.category(token[end - 1]).startswith("P"):
        end -= 1
    return token[start:end]


def sentiment(text: str, lexicon: SentimentLexicon) -> float:
    """Lexicon polarity in [-1, 1].

    Tokens split on whitespace, stripped of leading/trailing punctuation and
    lowercased; the score is the mean valence of matched tokens divided by
    the maximum valence magnitude (5).  No matches scores 0.
    """
    total = 0
    matched = 0
    for raw_token in text.split():
        token = _strip_punctuation(raw_token)
        if not token:
            continue
        valence = lexicon.get(token)
        if valence is not None:
            total += valence
            matched += 1
    if matched == 0:
        return 0.0
    return total / (5.0 * matched)


def derive_gender(user_name: str | None, lexicon: GenderLexicon) -> str | None:
    """Look up the first token of the display name; miss -> absent."""
    if not user_name:
        return None
    first = user_name.split()[0] if user_name.split() else ""
    if not first:
        return None
    return lexicon.get(first)


def derive_attributes(record: TweetRecord, lexicons: Lexicons | None = None) -> AttributeVector:
    lex = lexicons if lexicons is not None else default_lexicons()
    text = unicodedata.normalize("NFC", record.text)
    return AttributeVector(
        text=text,
        timestamp_ms=record.timestamp_ms,
        lang=record.lang,
        gender=derive_gender(record.user_name, lex.gender),
        user_agent=record.source,
        time_zone=record.time_zone,
        location=record.location,
        profile_url=record.profile_url,
        profile_description=record.profile_description,
        entropy_bits=entropy_bits(text),
        sentiment=sentiment(text, lex.sentiment),
    )
