"""Sentiment and gender lexicons with bundled defaults.

File formats (UTF-8, ``#`` comments and blank lines ignored):

* sentiment: one ``token<TAB>valence`` per line, integer valence in [-5, 5]
* gender:    one ``name<TAB>m|f`` per line
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping

VALENCE_MIN = -5
VALENCE_MAX = 5


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class SentimentLexicon:
    """Case-insensitive token -> integer valence map."""

    valences: Mapping[str, int]

    def __post_init__(self):
        if not self.valences:
            raise LexiconError("sentiment lexicon is empty")
        for token, valence in self.valences.items():
            if not (VALENCE_MIN <= valence <= VALENCE_MAX):
                raise LexiconError(
                    f"valence for {token!r} must be in "
                    f"[{VALENCE_MIN}, {VALENCE_MAX}], got {valence}"
                )

    def get(self, token: str) -> int | None:
        return self.valences.get(token.lower())


@dataclass(frozen=True)
class GenderLexicon:
    """Case-insensitive given-name -> "m"/"f" map."""

    names: Mapping[str, str]

    def __post_init__(self):
        if not self.names:
            raise LexiconError("gender lexicon is empty")
        for name, gender in self.names.items():
            if gender not in ("m", "f"):
                raise LexiconError(f"gender for {name!r} must be 'm' or 'f', got {gender!r}")

    def get(self, name: str) -> str | None:
        return self.names.get(name.lower())


def _data_lines(text: str) -> Iterable[tuple[str, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"line {lineno}: expected 'key<TAB>value', got {raw!r}")
        yield parts[0].strip(), parts[1].strip()


def parse_sentiment_lexicon(text: str) -> SentimentLexicon:
    valences = {}
    for token, raw_valence in _data_lines(text):
        try:
            valence = int(raw_valence)
        except ValueError:
            raise LexiconError(f"valence for {token!r} is not an integer: {raw_valence!r}")
        valences[token.lower()] = valence
    return SentimentLexicon(valences)


def parse_gender_lexicon(text: str) -> GenderLexicon:
    names = {}
    for name, gender in _data_lines(text):
        names[name.lower()] = gender.lower()
    return GenderLexicon(names)


def load_sentiment_lexicon(path: str) -> SentimentLexicon:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_sentiment_lexicon(handle.read())


def load_gender_lexicon(path: str) -> GenderLexicon:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_gender_lexicon(handle.read())


def _bundled(name: str) -> str:
    return resources.files("botsweep.data").joinpath(name).read_text(encoding="utf-8")


@dataclass(frozen=True)
class Lexicons:
    sentiment: SentimentLexicon
    gender: GenderLexicon

    @staticmethod
    def load(sentiment_path: str | None = None, gender_path: str | None = None) -> "Lexicons":
        """Bundled defaults, each overridable by a file path."""
        if sentiment_path is None and gender_path is None:
            return default_lexicons()
        sentiment = (
            load_sentiment_lexicon(sentiment_path)
            if sentiment_path
            else default_lexicons().sentiment
        )
        gender = (
            load_gender_lexicon(gender_path) if gender_path else default_lexicons().gender
        )
        return Lexicons(sentiment=sentiment, gender=gender)


@lru_cache(maxsize=1)
def default_lexicons() -> Lexicons:
    return Lexicons(
        sentiment=parse_sentiment_lexicon(_bundled("sentiment_lexicon.tsv")),
        gender=parse_gender_lexicon(_bundled("gender_names.tsv")),
    )
