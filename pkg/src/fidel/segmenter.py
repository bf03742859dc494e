"""Sentence extraction and whitespace tokenization."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .ethiopic import FULL_STOP, QUESTION

DEFAULT_TERMINATORS = (FULL_STOP, QUESTION)

_NONSPACE = re.compile(r"\S+")


@dataclass(frozen=True)
class Token:
    surface: str
    offset: int

    def __post_init__(self):
        if not self.surface or any(ch.isspace() for ch in self.surface):
            raise ValueError(f"bad token surface {self.surface!r}")


@dataclass(frozen=True)
class Sentence:
    raw: str
    terminator: str
    tokens: tuple[Token, ...] = field(default=())

    @classmethod
    def from_raw(cls, raw: str, terminator: str) -> "Sentence":
        return cls(raw, terminator, tuple(tokenize(raw)))

    @property
    def words(self) -> list[str]:
        return [t.surface for t in self.tokens]


def tokenize(text: str) -> list[Token]:
    """Maximal runs of non-space characters, with their codepoint offsets."""
    return [Token(m.group(0), m.start()) for m in _NONSPACE.finditer(text)]


def split_sentences(text: str, terminators=DEFAULT_TERMINATORS,
                    stats: Counter | None = None) -> list[Sentence]:
    """Cut punctuation-normalized text at each terminator.

    Text after the last terminator is dropped; when ``stats`` is given the
    drop is tallied under ``"dropped"``.  Newlines inside a sentence are
    ordinary whitespace.
    """
    sentences = []
    start = 0
    for i, ch in enumerate(text):
        if ch in terminators:
            sentences.append(Sentence.from_raw(text[start:i].strip(), ch))
            start = i + 1
    if text[start:].strip() and stats is not None:
        stats["dropped"] += 1
    return sentences
