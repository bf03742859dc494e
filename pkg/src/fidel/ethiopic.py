"""Ethiopic syllabary model and orthographic normalization.

The Ethiopic block lays out each consonant family as a row of eight
codepoints: offsets 0-6 hold the seven vowel orders (ä u i a e ə o) and
offset 7 holds either a labialized ``Cwa`` form or a rarely used extra.
Five velar families have an additional labiovelar row.  Everything here
is derived from that layout plus two small data tables (homophones and
punctuation) that ship in ``fidel/data`` and can be replaced by the user.
"""

from __future__ import annotations

import enum
import re
import unicodedata
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import NamedTuple

N_ORDERS = 7

# (order-1 codepoint, family id).  Ids follow the usual ASCII romanization;
# the backquoted ones are the rows the spelling reform retires.
FAMILIES = [
    (0x1200, "h"), (0x1208, "l"), (0x1210, "H"), (0x1218, "m"),
    (0x1220, "`s"), (0x1228, "r"), (0x1230, "s"), (0x1238, "x"),
    (0x1240, "q"), (0x1260, "b"), (0x1268, "v"), (0x1270, "t"),
    (0x1278, "c"), (0x1280, "`h"), (0x1290, "n"), (0x1298, "N"),
    (0x12A0, "'"), (0x12A8, "k"), (0x12B8, "K"), (0x12C8, "w"),
    (0x12D0, "`"), (0x12D8, "z"), (0x12E0, "Z"), (0x12E8, "y"),
    (0x12F0, "d"), (0x1300, "j"), (0x1308, "g"), (0x1320, "T"),
    (0x1328, "C"), (0x1330, "P"), (0x1338, "S"), (0x1340, "`S"),
    (0x1348, "f"), (0x1350, "p"),
]

# Labiovelar rows: offsets 0,2,3,4,5 carry orders 1,3,4,5,6.
LABIOVELAR_ROWS = {"q": 0x1248, "`h": 0x1288, "k": 0x12B0, "K": 0x12C0, "g": 0x1310}
_LABIOVELAR_OFFSETS = {1: 0, 3: 2, 4: 3, 5: 4, 6: 5}

FULL_STOP = "።"  # ።
QUESTION = "?"


class SyllableParts(NamedTuple):
    family: str
    order: int
    labialized: bool = False


class CharClass(enum.Enum):
    SYLLABLE = "syllable"
    PUNCT = "punct"
    DIGIT = "digit"
    SPACE = "space"
    OTHER = "other"


def _build_cells() -> dict[str, SyllableParts]:
    cells: dict[str, SyllableParts] = {}
    for base, fam in FAMILIES:
        for off in range(N_ORDERS):
            cells[chr(base + off)] = SyllableParts(fam, off + 1)
        wa = chr(base + 7)
        # offset 7 is only a labialized a-order form when Unicode says so
        if unicodedata.name(wa, "").endswith("WA"):
            cells[wa] = SyllableParts(fam, 4, True)
    for fam, base in LABIOVELAR_ROWS.items():
        for order, off in _LABIOVELAR_OFFSETS.items():
            cells[chr(base + off)] = SyllableParts(fam, order, True)
    return cells


_CELLS = _build_cells()
_BY_PARTS = {parts: c for c, parts in _CELLS.items()}
FAMILY_BASES = {fam: chr(base) for base, fam in FAMILIES}
_FAMILY_OF_BASE = {chr(base): fam for base, fam in FAMILIES}


def decompose(c: str) -> SyllableParts | None:
    """Family, vowel order and labialization of a syllabic codepoint.

    Returns None for anything outside the modelled syllabary.
    """
    return _CELLS.get(c)


def compose(parts: SyllableParts) -> str:
    try:
        return _BY_PARTS[parts]
    except KeyError:
        raise ValueError(f"no syllabary cell for {parts!r}") from None


def syllables() -> list[str]:
    """Every codepoint of the modelled syllabary, in codepoint order."""
    return sorted(_CELLS)


def family_members(family: str, labialized: bool = False) -> dict[int, str]:
    return {p.order: c for c, p in _CELLS.items()
            if p.family == family and p.labialized == labialized}


def char_class(c: str) -> CharClass:
    if c in _CELLS:
        return CharClass.SYLLABLE
    if c.isspace():
        return CharClass.SPACE
    cat = unicodedata.category(c)
    if cat == "Nd" or "፩" <= c <= "፼":
        return CharClass.DIGIT
    if cat.startswith("P"):
        return CharClass.PUNCT
    return CharClass.OTHER


# -- data tables -----------------------------------------------------------

def _data_path(name: str):
    return resources.files("fidel") / "data" / name


def _read_tsv(source) -> list[list[str]]:
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read_text(encoding="utf-8")
    rows = []
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        rows.append(line.split("\t"))
    return rows


class HomophoneTable:
    """Codepoint map from retired families onto their canonical families."""

    def __init__(self, family_pairs: dict[str, str]):
        mapping: dict[str, str] = {}
        for src, dst in family_pairs.items():
            src_cells = family_members(src)
            dst_cells = family_members(dst)
            for order in range(1, N_ORDERS + 1):
                mapping[src_cells[order]] = dst_cells[order]
        clash = set(mapping) & set(mapping.values())
        if clash:
            raise ValueError(f"homophone targets also listed as sources: {sorted(clash)}")
        self.family_pairs = dict(family_pairs)
        self.mapping = mapping
        self._trans = str.maketrans(mapping)

    @classmethod
    def load(cls, path=None) -> "HomophoneTable":
        pairs = {}
        for i, row in enumerate(_read_tsv(path or _data_path("homophones.tsv")), 1):
            if len(row) != 2:
                raise ValueError(f"homophone table line {i}: expected 2 columns")
            src, dst = row
            if src not in _FAMILY_OF_BASE or dst not in _FAMILY_OF_BASE:
                raise ValueError(f"homophone table line {i}: {src!r}/{dst!r} is not an order-1 syllable")
            pairs[_FAMILY_OF_BASE[src]] = _FAMILY_OF_BASE[dst]
        return cls(pairs)

    @property
    def deprecated_families(self) -> set[str]:
        return set(self.family_pairs)

    def apply(self, text: str) -> str:
        return text.translate(self._trans)


class PunctTable:
    """Variant-to-canonical punctuation rewriting."""

    SPACE_TOKEN = "<sp>"

    def __init__(self, mapping: dict[str, str]):
        for canon in set(mapping.values()):
            if mapping.get(canon, canon) != canon:
                raise ValueError(f"canonical form {canon!r} is itself rewritten")
        self.mapping = dict(mapping)
        variants = sorted(mapping, key=lambda v: (-len(v), v))
        self._pattern = re.compile("|".join(re.escape(v) for v in variants)) if variants else None

    @classmethod
    def load(cls, path=None) -> "PunctTable":
        mapping = {}
        for i, row in enumerate(_read_tsv(path or _data_path("punct.tsv")), 1):
            if len(row) != 2 or not row[0]:
                raise ValueError(f"punctuation table line {i}: expected variant<TAB>canonical")
            variant, canon = (cls._unescape(x) for x in row)
            mapping[variant] = canon
        return cls(mapping)

    @classmethod
    def _unescape(cls, s: str) -> str:
        return s.replace(cls.SPACE_TOKEN, " ")

    @property
    def canonical(self) -> set[str]:
        return set(self.mapping.values())

    def apply(self, text: str) -> str:
        if self._pattern is None:
            return text
        # a single pass can create a new variant (e.g. ‘ followed by '), so
        # iterate; every rewrite either shortens the text or lands on a fixed point
        while True:
            out = self._pattern.sub(lambda m: self.mapping[m.group(0)], text)
            if out == text:
                return out
            text = out


@lru_cache(maxsize=None)
def default_homophones() -> HomophoneTable:
    return HomophoneTable.load()


@lru_cache(maxsize=None)
def default_punct() -> PunctTable:
    return PunctTable.load()


def normalize_homophones(text: str, table: HomophoneTable | None = None) -> str:
    return (table or default_homophones()).apply(text)


def normalize_punct(text: str, table: PunctTable | None = None) -> str:
    return (table or default_punct()).apply(text)


def normalize(text: str, homophones: HomophoneTable | None = None,
              punct: PunctTable | None = None) -> str:
    """Homophone reduction followed by punctuation canonicalization."""
    return normalize_punct(normalize_homophones(text, homophones), punct)
