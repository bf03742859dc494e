"""N-gram counts, the corpus statistics report and an add-k trigram model.

Windows never cross a sentence boundary and no padding symbols are
added.  The report counts distinct n-gram types per order, next to the
sentence and token totals.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

MAX_ORDER = 3


class CorpusReport(NamedTuple):
    sentences: int
    tokens: int
    unigrams: int
    bigrams: int
    trigrams: int

    ROWS = ("Sentences", "Tokens", "Unigrams", "Bigrams", "Trigrams")

    def format(self) -> str:
        lines = ["Elements\tNumbers"]
        lines += [f"{name}\t{value}" for name, value in zip(self.ROWS, self)]
        return "\n".join(lines) + "\n"


@dataclass
class NgramTable:
    counts: dict[int, Counter] = field(default_factory=lambda: {k: Counter() for k in range(1, MAX_ORDER + 1)})
    tokens: int = 0
    sentences: int = 0
    _following: dict | None = field(default=None, repr=False, compare=False)

    def add_sentence(self, words: Sequence[str]) -> None:
        words = tuple(words)
        self._following = None
        self.sentences += 1
        self.tokens += len(words)
        for k, counter in self.counts.items():
            for i in range(len(words) - k + 1):
                counter[words[i:i + k]] += 1

    def __add__(self, other: "NgramTable") -> "NgramTable":
        out = NgramTable(tokens=self.tokens + other.tokens, sentences=self.sentences + other.sentences)
        for k in out.counts:
            out.counts[k] = self.counts[k] + other.counts[k]
        return out

    def __eq__(self, other):
        if not isinstance(other, NgramTable):
            return NotImplemented
        return (self.tokens, self.sentences, self.counts) == (other.tokens, other.sentences, other.counts)

    @property
    def unigrams(self) -> Counter:
        return self.counts[1]

    @property
    def bigrams(self) -> Counter:
        return self.counts[2]

    @property
    def trigrams(self) -> Counter:
        return self.counts[3]

    def following(self, history: tuple[str, ...]) -> int:
        """How many counted n-grams extend ``history`` by one word."""
        if self._following is None:
            self._following = Counter()
            for k in range(2, MAX_ORDER + 1):
                for gram, n in self.counts[k].items():
                    self._following[gram[:-1]] += n
        return self._following.get(history, 0)

    @property
    def vocabulary(self) -> set[str]:
        return {w for (w,) in self.unigrams}

    def report(self) -> CorpusReport:
        return report(self)

    def dump(self) -> str:
        """``order<TAB>ngram<TAB>count`` lines sorted by order, then n-gram."""
        lines = []
        for k in sorted(self.counts):
            for gram in sorted(self.counts[k]):
                lines.append(f"{k}\t{' '.join(gram)}\t{self.counts[k][gram]}\n")
        return "".join(lines)

    def write(self, path) -> None:
        Path(path).write_text(self.dump(), encoding="utf-8")

    @classmethod
    def parse(cls, text: str, sentences: int = 0) -> "NgramTable":
        # totals other than tokens are not in the dump; pass sentences if known
        t = cls(sentences=sentences)
        for line in text.splitlines():
            k, gram, n = line.split("\t")
            t.counts[int(k)][tuple(gram.split(" "))] = int(n)
        t.tokens = sum(t.unigrams.values())
        return t


def count_ngrams(sentences: Iterable[Sequence[str]]) -> NgramTable:
    table = NgramTable()
    for words in sentences:
        table.add_sentence(words)
    return table


def report(t: NgramTable) -> CorpusReport:
    return CorpusReport(t.sentences, t.tokens, len(t.unigrams), len(t.bigrams), len(t.trigrams))


def cond_prob(t: NgramTable, history: Sequence[str], word: str, k: float = 1.0) -> float:
    """P(word | history) with add-k smoothing over the vocabulary plus UNK.

    History longer than two words is truncated.  With k = 0 an unseen
    history or n-gram has probability 0.
    """
    history = tuple(history)[-(MAX_ORDER - 1):]
    v = len(t.unigrams) + 1
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > 0 and not t.unigrams:
        raise ValueError("add-k smoothing needs a non-empty vocabulary")
    if not history:
        num, den = t.unigrams.get((word,), 0), t.tokens
    else:
        num = t.counts[len(history) + 1].get(history + (word,), 0)
        den = t.following(history)
    num, den = num + k, den + k * v
    if den == 0:
        return 0.0
    return num / den


def lm_logprob(t: NgramTable, sentence: Sequence[str], k: float = 1.0) -> float:
    """Natural-log probability of a sentence under the trigram model.

    Positions with fewer than two words of history use the shorter
    history available.  Returns ``-inf`` when some factor is zero.
    """
    words = list(sentence)
    total = 0.0
    for i, w in enumerate(words):
        p = cond_prob(t, words[max(0, i - (MAX_ORDER - 1)):i], w, k)
        if p == 0.0:
            return -math.inf
        total += math.log(p)
    return total
