"""Emotion lexicon and entity gazetteers.

The lexicon file uses the flat tab-separated layout common to word-emotion
association lists: ``word<TAB>emotion<TAB>flag`` with flag 1 meaning the
word carries that emotion.  Rows whose affect label is not one of the
eight canonical emotions (e.g. polarity rows) are ignored.

A gazetteer is one newline-delimited phrase file per entity type; phrases
match case-insensitively on whole-token boundaries.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .models import EMOTIONS, ENTITY_TYPES
from .text import _WORD_RE


class EmotionLexicon:
    """Case-insensitive map from word to its set of associated emotions."""

    def __init__(self, mapping: dict[str, frozenset[str]]):
        for word, emotions in mapping.items():
            bad = emotions - set(EMOTIONS)
            if bad:
                raise ValueError(f"unknown emotion {sorted(bad)[0]!r} for word {word!r}")
        self._mapping = {word.lower(): emotions for word, emotions in mapping.items()}

    @classmethod
    def from_file(cls, path: str | Path) -> "EmotionLexicon":
        mapping: dict[str, set[str]] = {}
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                continue
            word, emotion, flag = parts
            if emotion not in EMOTIONS:
                continue
            if flag.strip() == "1":
                mapping.setdefault(word.strip().lower(), set()).add(emotion)
        return cls({w: frozenset(e) for w, e in mapping.items()})

    def emotions_for(self, word: str) -> frozenset[str]:
        return self._mapping.get(word.lower(), frozenset())

    def words_for(self, emotion: str) -> frozenset[str]:
        return frozenset(w for w, e in self._mapping.items() if emotion in e)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._mapping

    def __len__(self) -> int:
        return len(self._mapping)


def _phrase_tokens(phrase: str) -> tuple[str, ...]:
    return tuple(m.group().lower() for m in _WORD_RE.finditer(phrase))


@dataclass(frozen=True)
class Gazetteer:
    """Phrase lists per entity type, stored as lowercased token tuples."""

    phrases: dict[str, frozenset[tuple[str, ...]]]

    @classmethod
    def from_files(
        cls,
        person: str | Path | None,
        location: str | Path | None,
        organization: str | Path | None,
    ) -> "Gazetteer":
        paths = {"person": person, "location": location, "organization": organization}
        phrases: dict[str, frozenset[tuple[str, ...]]] = {}
        for etype in ENTITY_TYPES:
            entries: set[tuple[str, ...]] = set()
            path = paths[etype]
            if path is not None:
                for line in Path(path).read_text(encoding="utf-8").splitlines():
                    line = line.strip()
                    if not line or line.startswith("#"):
                        continue
                    tokens = _phrase_tokens(line)
                    if tokens:
                        entries.add(tokens)
            phrases[etype] = frozenset(entries)
        return cls(phrases=phrases)

    @classmethod
    def empty(cls) -> "Gazetteer":
        return cls(phrases={etype: frozenset() for etype in ENTITY_TYPES})

    def max_phrase_length(self) -> int:
        lengths = [len(p) for entries in self.phrases.values() for p in entries]
        return max(lengths, default=0)
