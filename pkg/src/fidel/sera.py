"""Ethiopic <-> SERA (System for Ethiopic Representation in ASCII)."""

from __future__ import annotations

from functools import lru_cache

from . import ethiopic
from .ethiopic import FULL_STOP, SyllableParts

SERA_FULL_STOP = "::"
# ASCII accepted verbatim by from_sera; digits are deliberately excluded
_PASSTHROUGH = set(" \t\n\r!\"#$%&()*+,-./;<=>?@[\\]^_{|}~")


class SeraError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class SeraTable:
    """Bijection between syllabary cells and ASCII strings."""

    def __init__(self, consonants: dict[str, str], vowels: list[str],
                 labial: str = "W", overrides: dict[str, str] | None = None):
        if len(vowels) != ethiopic.N_ORDERS:
            raise ValueError("vowel row must have 7 entries")
        self.consonants = dict(consonants)
        self.vowels = list(vowels)
        self.labial = labial
        cells: dict[str, str] = {}
        for c in ethiopic.syllables():
            parts = ethiopic.decompose(c)
            if parts.family not in self.consonants:
                continue
            cons = self.consonants[parts.family]
            if parts.labialized:
                cons += labial
            cells[c] = cons + self.vowels[parts.order - 1]
        cells.update(overrides or {})
        self.to_ascii = cells
        self.from_ascii = {}
        for c, s in cells.items():
            if s in self.from_ascii:
                raise ValueError(f"SERA string {s!r} assigned to both "
                                 f"{self.from_ascii[s]!r} and {c!r}")
            if not s.isascii():
                raise ValueError(f"non-ASCII SERA string for {c!r}")
            self.from_ascii[s] = c
        self._maxlen = max(map(len, self.from_ascii))
        glottal = self.consonants.get("'")
        # a bare vowel letter is read as a glottal-row syllable
        self._bare_vowels = {}
        if glottal is not None:
            for s, c in self.from_ascii.items():
                if s.startswith(glottal) and len(s) == len(glottal) + 1:
                    self._bare_vowels[s[len(glottal):]] = c

    @classmethod
    def load(cls, path=None) -> "SeraTable":
        consonants, overrides = {}, {}
        vowels, labial = None, "W"
        rows = ethiopic._read_tsv(path or ethiopic._data_path("sera.tsv"))
        for i, row in enumerate(rows, 1):
            key = row[0]
            if key == "@vowels":
                vowels = ["" if v == "-" else v for v in row[1:]]
            elif key == "@labial":
                labial = row[1]
            elif key == "@cell":
                overrides[row[1]] = row[2]
            else:
                parts = ethiopic.decompose(key)
                if parts is None or parts.order != 1 or parts.labialized or len(row) != 2:
                    raise ValueError(f"SERA table row {i}: expected <order-1 syllable><TAB><consonant>")
                consonants[parts.family] = row[1]
        if vowels is None:
            raise ValueError("SERA table has no @vowels row")
        return cls(consonants, vowels, labial, overrides)

    def cells(self) -> list[str]:
        return sorted(self.to_ascii)

    def encode(self, text: str) -> str:
        out = []
        for ch in text:
            s = self.to_ascii.get(ch)
            if s is not None:
                out.append(s)
            elif ch == FULL_STOP:
                out.append(SERA_FULL_STOP)
            elif ethiopic.decompose(ch) is not None:
                raise SeraError(f"no SERA form for {ch!r} (U+{ord(ch):04X})")
            else:
                out.append(ch)
        return "".join(out)

    def decode(self, ascii_text: str) -> str:
        out = []
        i, n = 0, len(ascii_text)
        while i < n:
            if ascii_text.startswith(SERA_FULL_STOP, i):
                out.append(FULL_STOP)
                i += 2
                continue
            for size in range(min(self._maxlen, n - i), 0, -1):
                c = self.from_ascii.get(ascii_text[i:i + size])
                if c is not None:
                    out.append(c)
                    i += size
                    break
            else:
                ch = ascii_text[i]
                if ch in self._bare_vowels:
                    out.append(self._bare_vowels[ch])
                elif ch in _PASSTHROUGH or not ch.isascii():
                    out.append(ch)
                else:
                    offset = len(ascii_text[:i].encode("utf-8"))
                    raise SeraError(f"cannot read {ch!r} at offset {offset}", offset)
                i += 1
        return "".join(out)


@lru_cache(maxsize=None)
def default_table() -> SeraTable:
    return SeraTable.load()


def to_sera(text: str, table: SeraTable | None = None) -> str:
    return (table or default_table()).encode(text)


def from_sera(ascii_text: str, table: SeraTable | None = None) -> str:
    return (table or default_table()).decode(ascii_text)


def parts_to_sera(parts: SyllableParts, table: SeraTable | None = None) -> str:
    return (table or default_table()).to_ascii[ethiopic.compose(parts)]
