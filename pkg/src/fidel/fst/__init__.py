from .featstruct import FAIL, TOP, FeatStruct, FeatSyntaxError, parse_fs, subsumes, unify, unify_all
from .machine import EPS, Arc, Fst, FstError, TransductionResult, compose, enumerate_paths, identity, transduce
from .textformat import dump_fst, format_fst, load_fst, parse_fst

__all__ = [
    "FAIL", "TOP", "FeatStruct", "FeatSyntaxError", "parse_fs", "subsumes", "unify", "unify_all",
    "EPS", "Arc", "Fst", "FstError", "TransductionResult", "compose", "enumerate_paths",
    "identity", "transduce", "dump_fst", "format_fst", "load_fst", "parse_fst",
]
