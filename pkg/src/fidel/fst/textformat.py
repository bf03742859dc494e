"""Plain-text FST files.

Grammar (one directive per line, ``#`` starts a comment line)::

    start <state>
    final <state> [features]
    <src> <dst> <input> <output> [features]

States are integers or bare words; symbols are any whitespace-free
strings, with ``<eps>`` for the empty symbol.  Features use the bracketed
syntax of :func:`fidel.fst.featstruct.parse_fs` and may contain spaces.
"""

from __future__ import annotations

from pathlib import Path

from .featstruct import TOP, format_fs, parse_fs
from .machine import EPS, Fst, FstError

EPS_TEXT = "<eps>"


def _state(tok: str):
    return int(tok) if tok.lstrip("-").isdigit() else tok


def _sym(tok: str):
    return EPS if tok == EPS_TEXT else tok


def parse_fst(text: str) -> Fst:
    start = None
    finals = []
    arcs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head = line.split(None, 1)[0]
        try:
            if head == "start":
                _, q = line.split()
                start = _state(q)
            elif head == "final":
                parts = line.split(None, 2)
                w = parse_fs(parts[2]) if len(parts) > 2 else TOP
                finals.append((_state(parts[1]), w))
            else:
                parts = line.split(None, 4)
                if len(parts) < 4:
                    raise FstError("arc needs <src> <dst> <in> <out>")
                w = parse_fs(parts[4]) if len(parts) > 4 else TOP
                arcs.append((_state(parts[0]), _state(parts[1]), _sym(parts[2]), _sym(parts[3]), w))
        except ValueError as exc:
            raise FstError(f"line {lineno}: {exc}") from None
    if start is None:
        raise FstError("no start line")
    m = Fst(start=start)
    for a in arcs:
        m.add_arc(*a)
    for q, w in finals:
        m.set_final(q, w)
    return m


def load_fst(path) -> Fst:
    return parse_fst(Path(path).read_text(encoding="utf-8"))


def format_fst(m: Fst) -> str:
    names = {}
    if not all(isinstance(q, int) or (isinstance(q, str) and q.split() == [q]) for q in m.states):
        # compose() builds tuple states; number them in discovery order
        order = [m.start] + [a.dst for a in m.arcs] + list(m.finals)
        for q in order:
            names.setdefault(q, len(names))
    name = lambda q: str(names.get(q, q))
    sym = lambda s: EPS_TEXT if s is EPS else s
    feats = lambda w: f" {format_fs(w)}" if w else ""

    lines = [f"start {name(m.start)}"]
    for q in sorted(m.finals, key=name):
        lines.append(f"final {name(q)}{feats(m.finals[q])}")
    for a in m.arcs:
        lines.append(f"{name(a.src)} {name(a.dst)} {sym(a.input)} {sym(a.output)}{feats(a.weight)}")
    return "\n".join(lines) + "\n"


def dump_fst(m: Fst, path) -> None:
    Path(path).write_text(format_fst(m), encoding="utf-8")
