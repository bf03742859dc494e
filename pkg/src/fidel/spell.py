"""Lexicon-driven spelling repair for two error classes.

Only two things are fixed: a single visually confusable character, and
a missing space between up to four known words.  Anything else is left
alone, so an empty lexicon makes both operations the identity.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping

from .segmenter import Token

MAX_PARTS = 4


class Lexicon(Mapping[str, int]):
    def __init__(self, counts: Mapping[str, int] | None = None):
        self._counts = {}
        for form, n in (counts or {}).items():
            if n < 0:
                raise ValueError(f"negative count for {form!r}")
            if n > 0:
                self._counts[form] = int(n)
        self.total = sum(self._counts.values())

    def __getitem__(self, form):
        return self._counts[form]

    def __iter__(self):
        return iter(self._counts)

    def __len__(self):
        return len(self._counts)

    def logprob(self, form: str) -> float:
        return math.log(self._counts[form] / self.total)

    @classmethod
    def from_tokens(cls, words: Iterable[str], min_count: int = 1) -> "Lexicon":
        counts = Counter(words)
        return cls({w: n for w, n in counts.items() if n >= min_count})

    @classmethod
    def load(cls, path) -> "Lexicon":
        counts = {}
        for i, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            try:
                form, n = line.split("\t")
                counts[form] = int(n)
            except ValueError:
                raise ValueError(f"{path}:{i}: expected form<TAB>count") from None
        return cls(counts)

    def dump(self, path) -> None:
        lines = [f"{w}\t{n}\n" for w, n in sorted(self._counts.items())]
        Path(path).write_text("".join(lines), encoding="utf-8")


class ConfusionTable:
    """Symmetric set of visually similar codepoint pairs."""

    def __init__(self, pairs: Iterable[tuple[str, str]] = ()):
        self.pairs: set[frozenset[str]] = set()
        self._alts: dict[str, set[str]] = {}
        for a, b in pairs:
            if len(a) != 1 or len(b) != 1:
                raise ValueError(f"confusion pair must be single codepoints: {a!r}, {b!r}")
            if a == b:
                raise ValueError(f"codepoint {a!r} paired with itself")
            self.pairs.add(frozenset((a, b)))
            self._alts.setdefault(a, set()).add(b)
            self._alts.setdefault(b, set()).add(a)

    @classmethod
    def load(cls, path) -> "ConfusionTable":
        pairs = []
        for i, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 2:
                raise ValueError(f"{path}:{i}: expected a<TAB>b")
            pairs.append((cols[0], cols[1]))
        return cls(pairs)

    def alternatives(self, c: str) -> set[str]:
        return self._alts.get(c, set())

    def variants(self, word: str) -> set[str]:
        """All strings one confusable substitution away from ``word``."""
        out = set()
        for i, c in enumerate(word):
            for alt in self.alternatives(c):
                out.add(word[:i] + alt + word[i + 1:])
        return out


def _best(candidates, score):
    # highest score, ties to the codepoint-lexicographically smallest candidate;
    # rounding keeps float summation order from splitting genuine ties
    return min(candidates, key=lambda c: (-round(score(c), 9), c))


def correct_confusions(token: Token, lex: Lexicon, conf: ConfusionTable) -> Token:
    if token.surface in lex:
        return token
    known = [v for v in conf.variants(token.surface) if v in lex]
    if not known:
        return token
    return Token(_best(known, lex.__getitem__), token.offset)


def restore_spaces(token: Token, lex: Lexicon, max_parts: int = MAX_PARTS) -> list[Token]:
    word = token.surface
    if word in lex or not lex:
        return [token]
    candidates = []
    for n_cuts in range(1, min(max_parts, len(word))):
        for cuts in combinations(range(1, len(word)), n_cuts):
            bounds = (0, *cuts, len(word))
            parts = tuple(word[a:b] for a, b in zip(bounds, bounds[1:]))
            if all(p in lex for p in parts):
                candidates.append(parts)
    if not candidates:
        return [token]
    best = _best(candidates, lambda parts: sum(lex.logprob(p) for p in parts))
    out, offset = [], token.offset
    for p in best:
        out.append(Token(p, offset))
        offset += len(p)
    return out
