"""Grammar data: lexicon, affixes, slot order and gazetteer.

File layout (UTF-8, tab-separated, ``#`` comments)::

    [slots]
    V       neg1 sbp stem sbs aux neg2 cnj
    [lexicon]
    form    pos  root+template  label  features  surface  count
    [affixes]
    form    slot  label  features  surface
    [gazetteer]
    form

Only the first two lexicon columns and the first four affix columns are
required; ``-`` leaves an optional column empty.  An affix whose form is
``0`` is a zero morph: it consumes nothing but contributes features, and
its presence makes the slot obligatory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ..fst.featstruct import TOP, FeatStruct, parse_fs
from .templates import TemplateError, check_template, expand_template

POS_TAGS = ("N", "V", "ADJ", "NADJ", "ADV", "PRON", "NM_PRS", "CONJ", "ADP", "NUM", "PUN", "UNC")
STEM = "stem"
ZERO = "0"
MAX_PROCLITIC_SLOTS = 2
NAME_POS = "NM_PRS"


class GrammarError(ValueError):
    pass


@dataclass(frozen=True)
class LexEntry:
    form: str
    pos: str
    root: str | None = None
    template: str | None = None
    label: str = ""
    features: FeatStruct = TOP
    surface: str = ""
    count: int = 1

    @property
    def lexical(self) -> str:
        """Underlying string the analyzer matches, gemination marks included."""
        if self.root is not None:
            return expand_template(self.root, self.template)
        return self.surface or self.form

    @property
    def display(self) -> str:
        if self.root is not None:
            return f"{self.root}+{self.template}"
        return self.form


@dataclass(frozen=True)
class Affix:
    form: str
    slot: str
    label: str = ""
    features: FeatStruct = TOP
    surface: str | None = None

    @property
    def lexical(self) -> str:
        if self.form == ZERO:
            return ""
        return self.form if self.surface is None else self.surface

    @property
    def is_zero(self) -> bool:
        return self.form == ZERO


@dataclass
class Grammar:
    slots: dict[str, list[str]] = field(default_factory=dict)
    lexicon: list[LexEntry] = field(default_factory=list)
    affixes: list[Affix] = field(default_factory=list)
    gazetteer: set[str] = field(default_factory=set)

    def validate(self) -> None:
        for pos, order in self.slots.items():
            if pos not in POS_TAGS:
                raise GrammarError(f"unknown POS {pos!r} in [slots]")
            if order.count(STEM) != 1:
                raise GrammarError(f"slot order for {pos} needs exactly one {STEM!r}")
            if len(set(order)) != len(order):
                raise GrammarError(f"repeated slot in order for {pos}")
            if order.index(STEM) > MAX_PROCLITIC_SLOTS:
                raise GrammarError(f"{pos} allows more than {MAX_PROCLITIC_SLOTS} prefix slots")
        used = {s for order in self.slots.values() for s in order}
        for a in self.affixes:
            if a.slot not in used:
                raise GrammarError(f"affix {a.form!r} names unused slot {a.slot!r}")
        for e in self.lexicon:
            if e.pos not in self.slots:
                raise GrammarError(f"lexicon entry {e.form!r} has POS {e.pos} with no slot order")
            if e.pos == "V" and e.root is None:
                raise GrammarError(f"verb {e.form!r} needs root+template")
            if e.root is not None:
                try:
                    check_template(e.root, e.template)
                except TemplateError as exc:
                    raise GrammarError(f"lexicon entry {e.form!r}: {exc}") from None
        if self.gazetteer and NAME_POS not in self.slots:
            raise GrammarError(f"gazetteer given but no slot order for {NAME_POS}")

    def entries(self) -> list[LexEntry]:
        """Lexicon plus one proper-name entry per gazetteer form."""
        names = [LexEntry(form, NAME_POS) for form in sorted(self.gazetteer)]
        return self.lexicon + names

    def affixes_for(self, slot: str) -> list[Affix]:
        return [a for a in self.affixes if a.slot == slot]

    def stem_count(self, display: str) -> int:
        return max((e.count for e in self.lexicon if e.display == display), default=0)


def _opt(cols, i, default=""):
    if i < len(cols) and cols[i] not in ("", "-"):
        return cols[i]
    return default


def parse_grammar(text: str, name: str = "<grammar>") -> Grammar:
    g = Grammar()
    section = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if line.startswith("[") and line.rstrip().endswith("]"):
            section = line.strip()[1:-1]
            if section not in ("slots", "lexicon", "affixes", "gazetteer"):
                raise GrammarError(f"{name}:{lineno}: unknown section [{section}]")
            continue
        cols = line.split("\t")
        try:
            if section == "slots":
                g.slots[cols[0]] = cols[1].split()
            elif section == "lexicon":
                root = template = None
                rt = _opt(cols, 2)
                if rt:
                    root, template = rt.split("+", 1)
                g.lexicon.append(LexEntry(
                    form=cols[0], pos=cols[1], root=root, template=template,
                    label=_opt(cols, 3), features=parse_fs(_opt(cols, 4, "[]")),
                    surface=_opt(cols, 5), count=int(_opt(cols, 6, "1"))))
            elif section == "affixes":
                g.affixes.append(Affix(
                    form=cols[0], slot=cols[1], label=_opt(cols, 2),
                    features=parse_fs(_opt(cols, 3, "[]")), surface=_opt(cols, 4, None)))
            elif section == "gazetteer":
                g.gazetteer.add(cols[0].strip())
            else:
                raise GrammarError("content before the first section header")
        except (IndexError, ValueError) as exc:
            raise GrammarError(f"{name}:{lineno}: {exc}") from None
    g.validate()
    return g


def load_grammar(path) -> Grammar:
    path = Path(path)
    return parse_grammar(path.read_text(encoding="utf-8"), str(path))


@lru_cache(maxsize=None)
def seed_grammar() -> Grammar:
    text = (resources.files("fidel") / "data" / "seed.grammar").read_text(encoding="utf-8")
    return parse_grammar(text, "seed.grammar")
