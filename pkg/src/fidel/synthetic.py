"""Seeded synthetic Ethiopic corpora for tests and demos.

Sentences mix words the seed grammar knows with random syllable strings,
so tagging exercises both analyses and the UNC fallback.
"""

from __future__ import annotations

import random

from .ethiopic import FULL_STOP, QUESTION, syllables
from .sera import from_sera

KNOWN = ("bezihu", "yedereja", "zrzr", "'andm", "'ityoPyawi", "'altekatetem", "bEtu", "lj",
         "sew", "wede", "bzu", "hulet", "gn", "yfelgal", "tfelgiyalex", "'adis", "'abebe",
         "sebere", "'rsu", "zihu")


def random_word(rng: random.Random, pool: list[str]) -> str:
    return "".join(rng.choice(pool) for _ in range(rng.randint(1, 4)))


def generate_corpus(n_sentences: int, seed: int = 0, per_line: int = 3) -> str:
    """``n_sentences`` terminated sentences, a few per line."""
    rng = random.Random(seed)
    pool = [ch for ch in syllables() if ch not in "ሐኀሠዐፀ"][:200]
    known = [from_sera(w) for w in KNOWN]
    lines, line = [], []
    for i in range(n_sentences):
        words = [rng.choice(known) if rng.random() < 0.6 else random_word(rng, pool)
                 for _ in range(rng.randint(1, 8))]
        if rng.random() < 0.1:
            words.insert(rng.randrange(len(words) + 1), "፣")
        line.append(" ".join(words) + (QUESTION if rng.random() < 0.15 else FULL_STOP))
        if len(line) == per_line or i == n_sentences - 1:
            lines.append(" ".join(line))
            line = []
    return "\n".join(lines) + "\n"
