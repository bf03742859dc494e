"""Root-and-template stems.

A template interleaves root-consonant positions (digits), vowels and the
gemination marker ``_``: ``ktt`` + ``te1a2_e3`` gives ``tekat_et``.
"""

from __future__ import annotations

from typing import Sequence

GEMINATION = "_"
VOWELS = set("euiaEoAI")


class TemplateError(ValueError):
    pass


def split_root(root: str | Sequence[str]) -> list[str]:
    """Root consonants; a labial ``W`` stays with the consonant before it."""
    if not isinstance(root, str):
        return list(root)
    out: list[str] = []
    for ch in root:
        if ch == "W" and out:
            out[-1] += ch
        else:
            out.append(ch)
    return out


def expand_template(root: str | Sequence[str], template: str) -> str:
    cons = split_root(root)
    out = []
    for ch in template:
        if ch.isdigit():
            k = int(ch)
            if not 1 <= k <= len(cons):
                raise TemplateError(f"template {template!r} needs root consonant {k}, "
                                    f"root {''.join(cons)!r} has {len(cons)}")
            out.append(cons[k - 1])
        else:
            out.append(ch)
    return "".join(out)


def orthographic_surface(stem: str) -> str:
    return stem.replace(GEMINATION, "")


def check_template(root: str | Sequence[str], template: str) -> None:
    """Raise unless the template uses each root position exactly once and
    only puts ``_`` after a consonant or digit."""
    n = len(split_root(root))
    digits = [int(ch) for ch in template if ch.isdigit()]
    if sorted(digits) != list(range(1, n + 1)):
        raise TemplateError(f"template {template!r} must use positions 1..{n} once each")
    for i, ch in enumerate(template):
        prev = template[i - 1] if i else ""
        if ch == GEMINATION and not (prev.isdigit() or (prev.isalpha() and prev not in VOWELS)):
            raise TemplateError(f"misplaced gemination marker in {template!r}")
