"""End-to-end corpus processing: normalize, segment, repair, tag, count.

Documents are processed independently (optionally in a process pool) and
merged in input order, so the output does not depend on the worker count.
"""

from __future__ import annotations

import glob
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from . import ethiopic
from .ethiopic import CharClass, HomophoneTable, PunctTable
from .morph.analyzer import Analyzer, MorphAnalysis, punctuation
from .morph.grammar import load_grammar, seed_grammar
from .segmenter import DEFAULT_TERMINATORS, Sentence, Token, split_sentences
from .sera import SeraError, SeraTable, to_sera
from .spell import ConfusionTable, Lexicon, correct_confusions, restore_spaces
from .stats import NgramTable


class ConfigError(ValueError):
    pass


_TABLE_KEYS = ("homophones", "punct", "sera", "confusion", "grammar", "lexicon")
_BOOL = {"on": True, "true": True, "yes": True, "1": True,
         "off": False, "false": False, "no": False, "0": False}


@dataclass(frozen=True)
class PipelineConfig:
    inputs: tuple[str, ...] = ()
    output: str = "out"
    homophones: str | None = None
    punct: str | None = None
    sera: str | None = None
    confusion: str | None = None
    grammar: str | None = None
    lexicon: str | None = None
    spell: bool = False
    lexicon_min_count: int = 2
    k: float = 1.0
    workers: int = 1
    min_tokens: int = 1
    single_file: bool = False
    count_punct: bool = True

    def validate(self) -> None:
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.min_tokens < 0:
            raise ConfigError("min_tokens must be >= 0")
        if self.k < 0:
            raise ConfigError("k must be >= 0")
        for key in _TABLE_KEYS:
            path = getattr(self, key)
            if path is not None and not Path(path).is_file():
                raise ConfigError(f"{key} file not found: {path}")

    def input_files(self) -> list[str]:
        files = []
        for pattern in self.inputs:
            matches = sorted(glob.glob(pattern, recursive=True))
            files.extend(matches if glob.has_magic(pattern) else [pattern])
        return files


def load_config(path) -> PipelineConfig:
    """Read a flat ``key = value`` file; relative paths resolve against it."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    base = path.parent
    fields = PipelineConfig.__dataclass_fields__
    values: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key == "input":
            key = "inputs"
        if key not in fields:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            if key == "inputs":
                values[key] = tuple(str(base / p.strip()) for p in value.split(",") if p.strip())
            elif key in _TABLE_KEYS or key == "output":
                values[key] = str(base / value)
            elif key in ("spell", "single_file", "count_punct"):
                values[key] = _BOOL[value.lower()]
            elif key == "k":
                values[key] = float(value)
            else:
                values[key] = int(value)
        except (KeyError, ValueError):
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    cfg = PipelineConfig(**values)
    cfg.validate()
    return cfg


@dataclass
class RunSummary:
    documents: int = 0
    sentences: int = 0
    tokens: int = 0
    unclassified: int = 0
    corrections: int = 0
    dropped_fragments: int = 0
    short_sentences: int = 0
    errors: list[tuple[str, str]] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class TaggedSentence:
    sentence: Sentence
    words: tuple[tuple[str, MorphAnalysis], ...]


# -- per-process resources -------------------------------------------------------

@dataclass(frozen=True)
class _Resources:
    homophones: HomophoneTable
    punct: PunctTable
    sera: SeraTable
    analyzer: Analyzer
    confusion: ConfusionTable


@lru_cache(maxsize=4)
def _resources(homophones=None, punct=None, sera=None, grammar=None, confusion=None) -> _Resources:
    return _Resources(
        homophones=HomophoneTable.load(homophones) if homophones else ethiopic.default_homophones(),
        punct=PunctTable.load(punct) if punct else ethiopic.default_punct(),
        sera=SeraTable.load(sera) if sera else None,
        analyzer=Analyzer(load_grammar(grammar) if grammar else seed_grammar()),
        confusion=ConfusionTable.load(confusion) if confusion else ConfusionTable(),
    )


def _res(cfg: PipelineConfig) -> _Resources:
    return _resources(cfg.homophones, cfg.punct, cfg.sera, cfg.grammar, cfg.confusion)


# -- stages ---------------------------------------------------------------------

def is_punct_token(surface: str) -> bool:
    return all(ethiopic.char_class(ch) == CharClass.PUNCT for ch in surface)


def segment_text(text: str, cfg: PipelineConfig, stats: Counter | None = None) -> list[Sentence]:
    res = _res(cfg)
    norm = ethiopic.normalize(text, res.homophones, res.punct)
    stats = stats if stats is not None else Counter()
    sentences = split_sentences(norm, DEFAULT_TERMINATORS, stats)
    kept = [s for s in sentences if len(s.tokens) >= cfg.min_tokens]
    stats["short"] += len(sentences) - len(kept)
    return kept


def repair_tokens(tokens: Sequence[Token], lex: Lexicon, conf: ConfusionTable) -> tuple[list[Token], int]:
    out, changed = [], 0
    for tok in tokens:
        if tok.surface in lex:
            out.append(tok)
            continue
        fixed = correct_confusions(tok, lex, conf)
        parts = [fixed] if fixed != tok else restore_spaces(tok, lex)
        if [p.surface for p in parts] != [tok.surface]:
            changed += 1
        out.extend(parts)
    return out, changed


def tag_sentence(sentence: Sentence, analyzer: Analyzer, sera: SeraTable | None = None) -> TaggedSentence:
    words = []
    for tok in sentence.tokens:
        if is_punct_token(tok.surface):
            words.append((tok.surface, punctuation(to_sera(tok.surface, sera))))
        else:
            try:
                latin = to_sera(tok.surface, sera)
            except SeraError:
                latin = tok.surface
            words.append((tok.surface, analyzer.tag(latin)))
    term = sentence.terminator
    words.append((term, punctuation(to_sera(term, sera))))
    return TaggedSentence(sentence, tuple(words))


def _attr(value: str) -> str:
    return escape(value, {'"': "&quot;"})


def emit_xml(tagged: TaggedSentence) -> str:
    lines = ["<s>"]
    for surface, a in tagged.words:
        if a.pos == "PUN":
            lines.append(f'  <w pos="PUN">{escape(a.sera)} </w>')
        else:
            lines.append(f'  <w pos="{a.pos}" morphemes="{_attr(a.morphemes_string)}" '
                         f'latin="{_attr(a.sera)}">{escape(surface)} </w>')
    lines.append("</s>")
    return "\n".join(lines) + "\n"


def _doc_xml(name: str, sentences_xml: str) -> str:
    return f'<doc name="{_attr(name)}">\n{sentences_xml}</doc>\n'


XML_DECL = '<?xml version="1.0" encoding="UTF-8"?>\n'


# -- document workers --------------------------------------------------------------

def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _segment_doc(args):
    path, cfg = args
    try:
        text = _read(path)
    except (OSError, UnicodeDecodeError) as exc:
        return None, f"{type(exc).__name__}: {exc}"
    stats = Counter()
    return (segment_text(text, cfg, stats), stats), None


@dataclass
class _DocResult:
    xml: str
    table: NgramTable
    stats: Counter


def _process_doc(args):
    path, cfg, lex = args
    seg, err = _segment_doc((path, cfg))
    if err:
        return None, err
    sentences, stats = seg
    res = _res(cfg)
    table = NgramTable()
    parts = []
    for s in sentences:
        if lex is not None:
            tokens, changed = repair_tokens(s.tokens, lex, res.confusion)
            stats["corrections"] += changed
            s = Sentence(s.raw, s.terminator, tuple(tokens))
        tagged = tag_sentence(s, res.analyzer, res.sera)
        stats["tokens"] += len(s.tokens)
        stats["unclassified"] += sum(1 for _, a in tagged.words if a.pos == "UNC")
        words = [t.surface for t in s.tokens if cfg.count_punct or not is_punct_token(t.surface)]
        table.add_sentence(words)
        parts.append(emit_xml(tagged))
    stats["sentences"] += len(sentences)
    return _DocResult("".join(parts), table, stats), None


def _map(fn, items, workers: int):
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (workers * 4))))


def _doc_names(files: list[str]) -> list[str]:
    names, seen = [], Counter()
    for f in files:
        stem = Path(f).stem
        seen[stem] += 1
        names.append(stem if seen[stem] == 1 else f"{stem}-{seen[stem]}")
    return names


def run_pipeline(cfg: PipelineConfig) -> RunSummary:
    cfg.validate()
    files = cfg.input_files()
    summary = RunSummary()
    out_dir = Path(cfg.output)
    out_dir.mkdir(parents=True, exist_ok=True)

    lex = None
    if cfg.spell:
        if cfg.lexicon:
            lex = Lexicon.load(cfg.lexicon)
        else:
            # first pass: the corpus is its own dictionary
            counts = Counter()
            for seg, err in _map(_segment_doc, [(f, cfg) for f in files], cfg.workers):
                if seg:
                    for s in seg[0]:
                        counts.update(t.surface for t in s.tokens)
            lex = Lexicon.from_tokens(counts.elements(), cfg.lexicon_min_count)

    results = _map(_process_doc, [(f, cfg, lex) for f in files], cfg.workers)
    table = NgramTable()
    docs = []
    for path, name, (res, err) in zip(files, _doc_names(files), results):
        if err:
            summary.errors.append((path, err))
            continue
        summary.documents += 1
        summary.sentences += res.stats["sentences"]
        summary.tokens += res.stats["tokens"]
        summary.unclassified += res.stats["unclassified"]
        summary.corrections += res.stats["corrections"]
        summary.dropped_fragments += res.stats["dropped"]
        summary.short_sentences += res.stats["short"]
        table = table + res.table
        docs.append((name, res.xml))

    if cfg.single_file:
        body = "".join(_doc_xml(name, xml) for name, xml in docs)
        _write(out_dir / "corpus.xml", f"{XML_DECL}<corpus>\n{body}</corpus>\n")
    else:
        for name, xml in docs:
            _write(out_dir / f"{name}.xml", XML_DECL + _doc_xml(name, xml))
    _write(out_dir / "stats.tsv", table.report().format())
    _write(out_dir / "ngrams.tsv", table.dump())
    _write(out_dir / "summary.json", summary.to_json())
    return summary


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def corpus_table(paths: Sequence[str], cfg: PipelineConfig | None = None) -> NgramTable:
    """N-gram table over documents, counted per document and merged."""
    cfg = cfg or PipelineConfig()
    table = NgramTable()
    for p in paths:
        for s in segment_text(_read(p), cfg):
            table.add_sentence([t.surface for t in s.tokens
                                if cfg.count_punct or not is_punct_token(t.surface)])
    return table


__all__ = [
    "ConfigError", "PipelineConfig", "RunSummary", "TaggedSentence", "load_config", "run_pipeline",
    "segment_text", "repair_tokens", "tag_sentence", "emit_xml", "corpus_table",
]
