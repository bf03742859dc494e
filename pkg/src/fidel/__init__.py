"""Amharic corpus construction: Ethiopic normalization, sentence and token
segmentation, SERA transliteration, feature-structure FST morphology and
n-gram statistics."""

from .ethiopic import (CharClass, HomophoneTable, PunctTable, SyllableParts, char_class, compose,
                       decompose, normalize, normalize_homophones, normalize_punct)
from .segmenter import Sentence, Token, split_sentences, tokenize
from .sera import SeraError, SeraTable, from_sera, to_sera

__version__ = "0.1.0"
