"""Immutable feature structures with set-valued atoms.

A value is an atom (a string), an ambiguity set of two or more atoms, or
a nested structure.  Singleton sets are stored as plain atoms and empty
nested structures are dropped, so two structures carrying the same
information compare equal.  There is no reentrancy.

Text form, used by the FST file format::

    [sb=[p={2,3},n=sg],tam=impf]
"""

from __future__ import annotations

import re
from typing import Iterator, Mapping


class _Fail:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "FAIL"

    def __bool__(self):
        return False

    def __reduce__(self):
        return (_Fail, ())


FAIL = _Fail()


def _norm_value(v):
    if isinstance(v, FeatStruct):
        return v if v else None
    if isinstance(v, Mapping):
        fs = FeatStruct(v)
        return fs if fs else None
    if isinstance(v, (set, frozenset, list, tuple)):
        atoms = frozenset(str(x) for x in v)
        if not atoms:
            raise ValueError("ambiguity sets must be non-empty")
        if len(atoms) == 1:
            return next(iter(atoms))
        return atoms
    if isinstance(v, bool) or v is None:
        raise TypeError(f"unsupported feature value {v!r}")
    return str(v)


class FeatStruct(Mapping[str, object]):
    __slots__ = ("_d", "_hash")

    def __init__(self, data: Mapping | None = None, **kw):
        d = {}
        for src in (data or {}), kw:
            for k, v in src.items():
                nv = _norm_value(v)
                if nv is not None:
                    d[str(k)] = nv
        self._d = d
        self._hash = None

    def __getitem__(self, key):
        return self._d[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self._d)

    def __len__(self):
        return len(self._d)

    def __eq__(self, other):
        if isinstance(other, FeatStruct):
            return self._d == other._d
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._d.items()))
        return self._hash

    def __repr__(self):
        return f"FeatStruct({str(self)!r})"

    def __str__(self):
        return format_fs(self)

    def to_dict(self) -> dict:
        return {k: v.to_dict() if isinstance(v, FeatStruct) else v for k, v in self._d.items()}

    def unify(self, other):
        return unify(self, other)


TOP = FeatStruct()


def _unify_values(a, b):
    if a == b:
        return a
    a_fs, b_fs = isinstance(a, FeatStruct), isinstance(b, FeatStruct)
    if a_fs and b_fs:
        return unify(a, b)
    if a_fs or b_fs:
        return FAIL
    sa = a if isinstance(a, frozenset) else frozenset((a,))
    sb = b if isinstance(b, frozenset) else frozenset((b,))
    common = sa & sb
    if not common:
        return FAIL
    return next(iter(common)) if len(common) == 1 else common


def unify(a, b):
    """Most general structure consistent with both, or FAIL."""
    if a is FAIL or b is FAIL:
        return FAIL
    if not a:
        return b
    if not b:
        return a
    out = dict(a._d)
    for k, bv in b._d.items():
        av = out.get(k)
        if av is None:
            out[k] = bv
            continue
        v = _unify_values(av, bv)
        if v is FAIL:
            return FAIL
        out[k] = v
    fs = FeatStruct.__new__(FeatStruct)
    fs._d = out
    fs._hash = None
    return fs


def unify_all(structs):
    result = TOP
    for fs in structs:
        result = unify(result, fs)
        if result is FAIL:
            break
    return result


def subsumes(a, b) -> bool:
    """True when ``b`` carries at least the information in ``a``."""
    return unify(a, b) == b


# -- text form -----------------------------------------------------------------

def format_fs(fs: FeatStruct) -> str:
    parts = []
    for k in sorted(fs):
        v = fs[k]
        if isinstance(v, FeatStruct):
            s = format_fs(v)
        elif isinstance(v, frozenset):
            s = "{" + ",".join(sorted(v)) + "}"
        else:
            s = v
        parts.append(f"{k}={s}")
    return "[" + ",".join(parts) + "]"


_TOKEN = re.compile(r"\s*([\[\]{}=,]|[^\s\[\]{}=,]+)")


class FeatSyntaxError(ValueError):
    pass


def parse_fs(text: str) -> FeatStruct:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FeatSyntaxError(f"bad character at {pos} in {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    fs, i = _parse_struct(tokens, 0, text)
    if i != len(tokens):
        raise FeatSyntaxError(f"trailing material in {text!r}")
    return fs


def _expect(tokens, i, tok, text):
    if i >= len(tokens) or tokens[i] != tok:
        got = tokens[i] if i < len(tokens) else "end of input"
        raise FeatSyntaxError(f"expected {tok!r}, got {got!r} in {text!r}")
    return i + 1


def _parse_struct(tokens, i, text):
    i = _expect(tokens, i, "[", text)
    d = {}
    while i < len(tokens) and tokens[i] != "]":
        key = tokens[i]
        if key in "[]{}=,":
            raise FeatSyntaxError(f"expected attribute name, got {key!r} in {text!r}")
        if key in d:
            raise FeatSyntaxError(f"repeated attribute {key!r} in {text!r}")
        i = _expect(tokens, i + 1, "=", text)
        if i >= len(tokens):
            raise FeatSyntaxError(f"missing value for {key!r} in {text!r}")
        if tokens[i] == "[":
            d[key], i = _parse_struct(tokens, i, text)
        elif tokens[i] == "{":
            atoms = []
            i += 1
            while i < len(tokens) and tokens[i] != "}":
                if tokens[i] != ",":
                    atoms.append(tokens[i])
                i += 1
            i = _expect(tokens, i, "}", text)
            if not atoms:
                raise FeatSyntaxError(f"empty ambiguity set for {key!r} in {text!r}")
            d[key] = set(atoms)
        else:
            if tokens[i] in "[]{}=,":
                raise FeatSyntaxError(f"missing value for {key!r} in {text!r}")
            d[key] = tokens[i]
            i += 1
        if i < len(tokens) and tokens[i] == ",":
            i += 1
    i = _expect(tokens, i, "]", text)
    return FeatStruct(d), i
