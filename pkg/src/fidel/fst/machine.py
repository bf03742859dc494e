"""Finite-state transducers weighted with feature structures.

Weights combine by unification: a path survives only if every weight on
it, plus the final weight of the state it ends in, unifies.  Results are
(output, features) pairs where ``output`` is a tuple of output symbols.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, NamedTuple, Sequence

from .featstruct import FAIL, TOP, FeatStruct, unify

EPS = None
State = Hashable


class FstError(ValueError):
    pass


class Arc(NamedTuple):
    src: State
    dst: State
    input: str | None
    output: str | None
    weight: FeatStruct = TOP


class TransductionResult(NamedTuple):
    output: tuple[str, ...]
    features: FeatStruct

    @property
    def text(self) -> str:
        return "".join(self.output)


@dataclass
class Fst:
    start: State = 0
    states: set = field(default_factory=set)
    finals: dict = field(default_factory=dict)
    arcs: list[Arc] = field(default_factory=list)

    def __post_init__(self):
        self.states = set(self.states) | {self.start}
        arcs, self.arcs = self.arcs, []
        self._out = defaultdict(list)
        for a in arcs:
            self.add_arc(*a)
        for q in self.finals:
            self.states.add(q)

    def add_state(self, q: State) -> State:
        self.states.add(q)
        return q

    def add_arc(self, src, dst, input=EPS, output=EPS, weight=TOP) -> Arc:
        arc = Arc(src, dst, input, output, weight if weight is not None else TOP)
        self.states.update((src, dst))
        self.arcs.append(arc)
        self._out[src].append(arc)
        return arc

    def set_final(self, q: State, weight: FeatStruct = TOP) -> None:
        self.states.add(q)
        self.finals[q] = weight if weight is not None else TOP

    def arcs_from(self, q: State) -> list[Arc]:
        return self._out.get(q, [])

    @property
    def input_alphabet(self) -> set[str]:
        return {a.input for a in self.arcs if a.input is not EPS}

    @property
    def output_alphabet(self) -> set[str]:
        return {a.output for a in self.arcs if a.output is not EPS}

    def transduce(self, symbols, **kw) -> set[TransductionResult]:
        return transduce(self, symbols, **kw)


def _symbols(x) -> tuple[str, ...]:
    return tuple(x) if not isinstance(x, tuple) else x


def transduce(m: Fst, symbols: Sequence[str], eps_limit: int | None = None,
              stats: Counter | None = None) -> set[TransductionResult]:
    """All (output, features) pairs for paths consuming exactly ``symbols``.

    Simulates the machine breadth-first over (state, output, features)
    configurations.  A run of epsilon moves longer than
    ``max(eps_limit, number of states)`` can only come from an epsilon
    cycle, and raises FstError.  ``eps_limit`` defaults to len(input)+10.
    Paths cut by unification failure are counted under ``stats["pruned"]``.
    """
    symbols = _symbols(symbols)
    limit = len(symbols) + 10 if eps_limit is None else eps_limit
    cap = max(limit, len(m.states))
    pruned = 0

    def closure(configs):
        nonlocal pruned
        seen = set(configs)
        frontier = list(configs)
        depth = 0
        while frontier:
            nxt = []
            for q, out, fs in frontier:
                for arc in m.arcs_from(q):
                    if arc.input is not EPS:
                        continue
                    w = unify(fs, arc.weight)
                    if w is FAIL:
                        pruned += 1
                        continue
                    c = (arc.dst, out if arc.output is EPS else out + (arc.output,), w)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            if nxt:
                depth += 1
                if depth > cap:
                    raise FstError(f"epsilon run longer than {cap}: the machine has an epsilon cycle")
            frontier = nxt
        return seen

    configs = closure({(m.start, (), TOP)})
    for sym in symbols:
        step = set()
        for q, out, fs in configs:
            for arc in m.arcs_from(q):
                if arc.input != sym or arc.input is EPS:
                    continue
                w = unify(fs, arc.weight)
                if w is FAIL:
                    pruned += 1
                    continue
                step.add((arc.dst, out if arc.output is EPS else out + (arc.output,), w))
        if not step:
            configs = set()
            break
        configs = closure(step)

    results = set()
    for q, out, fs in configs:
        if q in m.finals:
            w = unify(fs, m.finals[q])
            if w is FAIL:
                pruned += 1
            else:
                results.add(TransductionResult(out, w))
    if stats is not None:
        stats["pruned"] += pruned
    return results


def enumerate_paths(m: Fst, max_len: int) -> set[tuple[tuple[str, ...], tuple[str, ...], FeatStruct]]:
    """Every accepted (input, output, features) with input length <= max_len.

    Plain depth-first walk over paths, independent of ``transduce``; it is
    the reference the simulator is tested against.  Epsilon runs never
    revisit a state, which is exact for machines without epsilon cycles.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    found = set()

    def walk(q, inp, out, fs, eps_seen):
        if q in m.finals:
            w = unify(fs, m.finals[q])
            if w is not FAIL:
                found.add((inp, out, w))
        for arc in m.arcs_from(q):
            if arc.input is EPS:
                if arc.dst in eps_seen:
                    continue
                nxt_inp, nxt_seen = inp, eps_seen | {arc.dst}
            else:
                if len(inp) == max_len:
                    continue
                nxt_inp, nxt_seen = inp + (arc.input,), frozenset((arc.dst,))
            w = unify(fs, arc.weight)
            if w is FAIL:
                continue
            nxt_out = out if arc.output is EPS else out + (arc.output,)
            walk(arc.dst, nxt_inp, nxt_out, w, nxt_seen)

    walk(m.start, (), (), TOP, frozenset((m.start,)))
    return found


def compose(f: Fst, g: Fst) -> Fst:
    """Machine computing g after f, with weights unified arc by arc.

    States are pairs (f-state, g-state), built only where reachable.  An
    f-arc with epsilon output advances f alone; a g-arc with epsilon
    input advances g alone; otherwise f's output must match g's input.
    Arc pairs whose weights fail to unify are dropped.
    """
    start = (f.start, g.start)
    out = Fst(start=start)
    todo = [start]
    seen = {start}

    def visit(q):
        if q not in seen:
            seen.add(q)
            todo.append(q)

    while todo:
        p, r = q = todo.pop()
        if p in f.finals and r in g.finals:
            w = unify(f.finals[p], g.finals[r])
            if w is not FAIL:
                out.set_final(q, w)
        g_by_input = defaultdict(list)
        for b in g.arcs_from(r):
            if b.input is EPS:
                dst = (p, b.dst)
                out.add_arc(q, dst, EPS, b.output, b.weight)
                visit(dst)
            else:
                g_by_input[b.input].append(b)
        for a in f.arcs_from(p):
            if a.output is EPS:
                dst = (a.dst, r)
                out.add_arc(q, dst, a.input, EPS, a.weight)
                visit(dst)
                continue
            for b in g_by_input.get(a.output, ()):
                w = unify(a.weight, b.weight)
                if w is FAIL:
                    continue
                dst = (a.dst, b.dst)
                out.add_arc(q, dst, a.input, b.output, w)
                visit(dst)
    return out


def identity(alphabet: Iterable[str]) -> Fst:
    m = Fst(start=0)
    m.set_final(0)
    for s in sorted(alphabet):
        m.add_arc(0, 0, s, s)
    return m
