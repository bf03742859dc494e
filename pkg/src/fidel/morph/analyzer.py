"""Morphological analysis with a composed, feature-weighted FST cascade.

The cascade has two layers:

* a gemination rule mapping surface SERA to lexical strings.  A lexical
  ``_`` after a consonant surfaces either as nothing (ordinary spelling)
  or as a copy of that consonant (``fel_ig`` reads ``felig`` or
  ``fellig``);
* the morphotactics: one branch per POS, walking its slots in order.
  Every morpheme is a chain of arcs whose first arc emits the morpheme's
  id and carries its feature structure.

Agreement falls out of unification: a subject prefix leaves an ambiguity
set behind, later suffixes narrow it, and a clash kills the path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .. import ethiopic
from ..ethiopic import CharClass
from ..fst import EPS, TOP, FeatStruct, Fst, compose, transduce
from ..sera import SeraError, default_table, to_sera
from .grammar import STEM, Grammar, seed_grammar
from .templates import GEMINATION, orthographic_surface


class Morpheme(NamedTuple):
    form: str
    label: str
    lexical: str
    is_stem: bool = False

    def formatted(self) -> str:
        text = "{" + self.form + "}" if self.is_stem else self.form
        return f"{text} ({self.label})" if self.label else text


@dataclass(frozen=True)
class MorphAnalysis:
    pos: str
    morphemes: tuple[Morpheme, ...]
    features: FeatStruct
    sera: str

    @property
    def stem(self) -> Morpheme | None:
        return next((m for m in self.morphemes if m.is_stem), None)

    @property
    def morphemes_string(self) -> str:
        return format_morphemes(self)

    @property
    def realization(self) -> str:
        """Concatenated morphemes with gemination marks stripped."""
        return "".join(orthographic_surface(m.lexical) for m in self.morphemes)


def format_morphemes(a: MorphAnalysis) -> str:
    return "-".join(m.formatted() for m in a.morphemes)


def unclassified(sera: str) -> MorphAnalysis:
    return MorphAnalysis("UNC", (Morpheme(sera, "", sera, True),), TOP, sera)


def punctuation(sera: str) -> MorphAnalysis:
    return MorphAnalysis("PUN", (), TOP, sera)


def _chain(m: Fst, new_state, src, dst, lexical: str, sym, weight) -> None:
    if not lexical:
        m.add_arc(src, dst, EPS, sym, weight)
        return
    q = src
    for i, ch in enumerate(lexical):
        nxt = dst if i == len(lexical) - 1 else new_state()
        m.add_arc(q, nxt, ch, sym if i == 0 else EPS, weight if i == 0 else TOP)
        q = nxt


def build_morphotactics(g: Grammar) -> tuple[Fst, dict[str, Morpheme]]:
    """Lexical-string acceptor emitting morpheme ids, plus the id table."""
    counter = iter(range(1, 1 << 30))
    new_state = lambda: next(counter)
    m = Fst(start=0)
    table: dict[str, Morpheme] = {}

    def morpheme_id(morph: Morpheme) -> str:
        sym = f"#{len(table)}"
        table[sym] = morph
        return sym

    entries = g.entries()
    for pos, order in g.slots.items():
        states = [new_state() for _ in range(len(order) + 1)]
        m.add_arc(0, states[0], EPS, EPS, FeatStruct(pos=pos))
        m.set_final(states[-1])
        for i, slot in enumerate(order):
            src, dst = states[i], states[i + 1]
            if slot == STEM:
                for e in entries:
                    if e.pos != pos:
                        continue
                    sym = morpheme_id(Morpheme(e.display, e.label, e.lexical, True))
                    _chain(m, new_state, src, dst, e.lexical, sym, e.features)
                continue
            affixes = g.affixes_for(slot)
            if not any(a.is_zero for a in affixes):
                m.add_arc(src, dst, EPS, EPS, TOP)
            for a in affixes:
                sym = EPS if a.is_zero else morpheme_id(Morpheme(a.form, a.label, a.lexical))
                _chain(m, new_state, src, dst, a.lexical, sym, a.features)
    return m, table


def build_gemination_rule(alphabet: set[str], consonants: set[str]) -> Fst:
    """Surface-to-lexical rule restoring unwritten or doubled gemination."""
    rule = Fst(start="B")
    states = ["B"] + [f"C{c}" for c in sorted(consonants)]
    for q in states:
        rule.set_final(q)
        for x in sorted(alphabet):
            rule.add_arc(q, f"C{x}" if x in consonants else "B", x, x)
    for c in sorted(consonants):
        rule.add_arc(f"C{c}", "B", EPS, GEMINATION)
        rule.add_arc(f"C{c}", "B", c, GEMINATION)
    return rule


class Analyzer:
    def __init__(self, grammar: Grammar | None = None):
        self.grammar = grammar or seed_grammar()
        self.morphotactics, self.morphemes = build_morphotactics(self.grammar)
        table = default_table()
        alphabet = {ch for s in table.to_ascii.values() for ch in s}
        alphabet |= {a.input for a in self.morphotactics.arcs if a.input is not EPS}
        alphabet.discard(GEMINATION)
        consonants = {c for c in table.consonants.values() if len(c) == 1 and c.isalpha()}
        self.rule = build_gemination_rule(alphabet, consonants)
        self.fst = compose(self.rule, self.morphotactics)
        self.diagnostics = Counter()
        self._cache: dict[str, frozenset[MorphAnalysis]] = {}

    def candidates(self, sera: str) -> set[MorphAnalysis]:
        """Grammar analyses only, possibly empty."""
        out = set()
        for res in transduce(self.fst, tuple(sera), stats=self.diagnostics):
            morphs = tuple(self.morphemes[s] for s in res.output)
            out.add(MorphAnalysis(res.features["pos"], morphs, res.features, sera))
        return out

    def analyze(self, word) -> frozenset[MorphAnalysis]:
        sera = to_sera_form(word)
        cached = self._cache.get(sera)
        if cached is not None:
            return cached
        if sera and all(ethiopic.char_class(ch) == CharClass.PUNCT for ch in sera):
            result = frozenset({punctuation(sera)})
        else:
            found = self.candidates(sera)
            if len(found) > 1:
                self.diagnostics["ambiguous"] += 1
            if not found:
                self.diagnostics["unclassified"] += 1
            result = frozenset(found or {unclassified(sera)})
        self._cache[sera] = result
        return result

    def select(self, analyses) -> MorphAnalysis:
        return select_analysis(analyses, self.grammar)

    def tag(self, word) -> MorphAnalysis:
        return self.select(self.analyze(word))


def to_sera_form(word) -> str:
    """SERA string for a token, Ethiopic surface, or SERA string.

    Ethiopic that cannot be romanized is returned unchanged; it will only
    ever receive the UNC analysis.
    """
    text = getattr(word, "surface", word)
    if any(ethiopic.decompose(ch) for ch in text):
        try:
            return to_sera(ethiopic.normalize_homophones(text))
        except SeraError:
            return text
    return text


def select_analysis(analyses, grammar: Grammar | None = None) -> MorphAnalysis:
    """Fewest morphemes, then most frequent stem, then morpheme string."""
    analyses = list(analyses)
    if not analyses:
        raise ValueError("select_analysis needs at least one analysis")
    grammar = grammar or seed_grammar()

    def key(a: MorphAnalysis):
        stem = a.stem
        count = grammar.stem_count(stem.form) if stem else 0
        return (len(a.morphemes), -count, format_morphemes(a), a.pos, str(a.features))

    return min(analyses, key=key)


@lru_cache(maxsize=None)
def default_analyzer() -> Analyzer:
    return Analyzer()


def analyze(word, grammar: Grammar | None = None) -> frozenset[MorphAnalysis]:
    analyzer = default_analyzer() if grammar is None else Analyzer(grammar)
    return analyzer.analyze(word)
