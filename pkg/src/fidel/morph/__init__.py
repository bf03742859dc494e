from .analyzer import (Analyzer, MorphAnalysis, Morpheme, analyze, default_analyzer,
                       format_morphemes, select_analysis)
from .grammar import Affix, Grammar, GrammarError, LexEntry, load_grammar, parse_grammar, seed_grammar
from .templates import TemplateError, expand_template, orthographic_surface

__all__ = [
    "Analyzer", "MorphAnalysis", "Morpheme", "analyze", "default_analyzer", "format_morphemes",
    "select_analysis", "Affix", "Grammar", "GrammarError", "LexEntry", "load_grammar",
    "parse_grammar", "seed_grammar", "TemplateError", "expand_template", "orthographic_surface",
]
