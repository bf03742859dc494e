"""``fidel-pipe`` command line.

    fidel-pipe run --config pipeline.conf
    fidel-pipe normalize|segment|sera|analyze|tag|stats [FILE]

Single-stage commands read UTF-8 from FILE or standard input.  Exit
status: 0 success, 1 fatal I/O error, 2 configuration error.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import replace

from . import ethiopic
from .morph.analyzer import Analyzer, format_morphemes
from .morph.grammar import GrammarError, load_grammar, seed_grammar
from .pipeline import (ConfigError, PipelineConfig, emit_xml, is_punct_token, load_config,
                       run_pipeline, segment_text, tag_sentence)
from .sera import SeraError, from_sera, to_sera
from .stats import count_ngrams

EXIT_OK, EXIT_IO, EXIT_CONFIG = 0, 1, 2


def _read_input(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _stage_config(args) -> PipelineConfig:
    return PipelineConfig(min_tokens=getattr(args, "min_tokens", 1),
                          count_punct=getattr(args, "count_punct", True),
                          grammar=getattr(args, "grammar", None))


def cmd_run(args, out):
    cfg = load_config(args.config)
    overrides = {k: v for k, v in (("workers", args.workers), ("spell", args.spell),
                                   ("single_file", args.single_file)) if v is not None}
    if overrides:
        cfg = replace(cfg, **overrides)
        cfg.validate()
    summary = run_pipeline(cfg)
    out.write(summary.to_json())
    return EXIT_OK


def cmd_normalize(args, out):
    out.write(ethiopic.normalize(_read_input(args.file)))
    return EXIT_OK


def cmd_segment(args, out):
    stats = Counter()
    for s in segment_text(_read_input(args.file), _stage_config(args), stats):
        out.write(" ".join(s.words + [s.terminator]) + "\n")
    if stats["dropped"]:
        print(f"dropped {stats['dropped']} unterminated fragment(s)", file=sys.stderr)
    return EXIT_OK


def cmd_sera(args, out):
    text = _read_input(args.file)
    out.write(from_sera(text) if args.reverse else to_sera(ethiopic.normalize_homophones(text)))
    return EXIT_OK


def _analyzer(args) -> Analyzer:
    return Analyzer(load_grammar(args.grammar) if args.grammar else seed_grammar())


def cmd_analyze(args, out):
    analyzer = _analyzer(args)
    for s in segment_text(_read_input(args.file), _stage_config(args)):
        for tok in s.tokens:
            analyses = analyzer.analyze(tok)
            chosen = [analyzer.select(analyses)] if not args.all else sorted(analyses, key=format_morphemes)
            for a in chosen:
                out.write(f"{tok.surface}\t{a.pos}\t{format_morphemes(a)}\t{a.sera}\n")
    return EXIT_OK


def cmd_tag(args, out):
    analyzer = _analyzer(args)
    for s in segment_text(_read_input(args.file), _stage_config(args)):
        out.write(emit_xml(tag_sentence(s, analyzer)))
    return EXIT_OK


def cmd_stats(args, out):
    sentences = segment_text(_read_input(args.file), _stage_config(args))
    table = count_ngrams([w for w in s.words if args.count_punct or not is_punct_token(w)]
                         for s in sentences)
    out.write(table.dump() if args.dump else table.report().format())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fidel-pipe", description="Amharic corpus pipeline")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="process a corpus described by a config file")
    run.add_argument("--config", required=True)
    run.add_argument("--workers", type=int)
    run.add_argument("--spell", action=argparse.BooleanOptionalAction, default=None)
    run.add_argument("--single-file", action="store_true", default=None)
    run.set_defaults(func=cmd_run)

    def stage(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", nargs="?")
        sp.set_defaults(func=func)
        return sp

    stage("normalize", cmd_normalize, "homophone and punctuation normalization")
    for name, func, help in (("segment", cmd_segment, "one sentence per line"),
                             ("analyze", cmd_analyze, "tab-separated morphological analyses"),
                             ("tag", cmd_tag, "tagged XML sentences"),
                             ("stats", cmd_stats, "corpus statistics report")):
        sp = stage(name, func, help)
        sp.add_argument("--min-tokens", type=int, default=1)
        if name in ("analyze", "tag"):
            sp.add_argument("--grammar")
        if name == "analyze":
            sp.add_argument("--all", action="store_true", help="print every analysis")
        if name == "stats":
            sp.add_argument("--count-punct", action=argparse.BooleanOptionalAction, default=True)
            sp.add_argument("--dump", action="store_true", help="print n-gram counts")
    sera = stage("sera", cmd_sera, "Ethiopic to SERA (or back with --reverse)")
    sera.add_argument("--reverse", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (ConfigError, GrammarError) as exc:
        print(f"fidel-pipe: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (OSError, UnicodeDecodeError, SeraError) as exc:
        print(f"fidel-pipe: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
