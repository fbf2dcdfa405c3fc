"""Tokenization with character spans, plus stopword list handling.

Tokens are maximal runs of Unicode alphanumerics (underscore is a
boundary), lowercased.  Spans index into the original text so the UI can
highlight occurrences.  Stopword filtering keeps two views of the text:
``all_tokens`` (needed for phrase matching across stopwords) and
``tokens`` (the list every count is based on).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)


@dataclass(frozen=True)
class Token:
    text: str
    start: int
    end: int


@dataclass(frozen=True)
class TokenizedText:
    """``all_tokens`` includes stopwords; ``tokens`` excludes them."""

    all_tokens: tuple[Token, ...]
    tokens: tuple[Token, ...]

    @property
    def terms(self) -> tuple[str, ...]:
        """Post-stopword token texts, in body order."""
        return tuple(t.text for t in self.tokens)


def tokenize(body: str, stopwords: frozenset[str]) -> TokenizedText:
    all_tokens = tuple(
        Token(m.group().lower(), m.start(), m.end()) for m in _WORD_RE.finditer(body)
    )
    kept = tuple(t for t in all_tokens if t.text not in stopwords)
    return TokenizedText(all_tokens=all_tokens, tokens=kept)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a newline-delimited stopword file (lowercased, blank lines and
    ``#`` comments ignored)."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)


def default_stopwords() -> frozenset[str]:
    """The English stopword list shipped with the package."""
    text = resources.files("newslens.data").joinpath("stopwords_en.txt").read_text("utf-8")
    words = {line.strip().lower() for line in text.splitlines()}
    return frozenset(w for w in words if w and not w.startswith("#"))
