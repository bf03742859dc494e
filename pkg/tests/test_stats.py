import math
import random

import pytest
from hypothesis import given, strategies as st

from fidel.stats import CorpusReport, NgramTable, cond_prob, count_ngrams, lm_logprob

from oracles import brute_ngrams

SENTS = st.lists(st.lists(st.sampled_from("abcde"), max_size=7), max_size=8)


def test_report_example():
    t = count_ngrams([["a", "b", "c"], ["a", "b"]])
    assert t.report() == CorpusReport(2, 5, 3, 2, 1)
    assert t.report().format() == ("Elements\tNumbers\nSentences\t2\nTokens\t5\n"
                                   "Unigrams\t3\nBigrams\t2\nTrigrams\t1\n")


def test_empty_sentence_counts_as_sentence():
    t = count_ngrams([[]])
    assert t.report() == CorpusReport(1, 0, 0, 0, 0)


@given(SENTS)
def test_counts_match_brute_force(sents):
    t = count_ngrams(sents)
    assert t.counts == brute_ngrams(sents)
    assert sum(t.bigrams.values()) == sum(max(len(s) - 1, 0) for s in sents)
    assert sum(t.trigrams.values()) == sum(max(len(s) - 2, 0) for s in sents)


@given(SENTS, SENTS)
def test_merge_equals_whole(a, b):
    assert count_ngrams(a) + count_ngrams(b) == count_ngrams(a + b)


@given(SENTS)
def test_dump_parse_round_trip(sents):
    t = count_ngrams(sents)
    assert NgramTable.parse(t.dump(), sentences=len(sents)) == t


@given(SENTS, st.sampled_from([0.5, 1.0, 2.0]))
def test_distributions_sum_to_one(sents, k):
    t = count_ngrams(sents)
    if not t.unigrams:
        return
    vocab = sorted(t.vocabulary) + ["<unk>"]
    histories = [()] + [g[:-1] for n in (2, 3) for g in t.counts[n]] + [("zz",)]
    for h in histories:
        total = sum(cond_prob(t, h, w, k) for w in vocab)
        assert abs(total - 1) < 1e-9


def test_unsmoothed_values():
    t = count_ngrams([["a", "b"], ["a", "c"]])
    assert cond_prob(t, ["a"], "b", k=0) == 0.5
    assert cond_prob(t, [], "a", k=0) == 0.5
    assert cond_prob(t, ["z"], "b", k=0) == 0.0
    assert lm_logprob(t, ["a", "d"], k=0) == -math.inf


def test_add_one_value():
    t = count_ngrams([["a", "b"], ["a", "c"]])
    # V = 3 words + UNK
    assert cond_prob(t, ["a"], "b") == pytest.approx((1 + 1) / (2 + 4))
    assert lm_logprob(t, ["a", "b"]) == pytest.approx(math.log((2 + 1) / (4 + 4)) + math.log(2 / 6))


def test_history_truncated_to_two_words():
    t = count_ngrams([["a", "b", "c"]])
    assert cond_prob(t, ["x", "a", "b"], "c") == cond_prob(t, ["a", "b"], "c")


def test_bad_smoothing():
    with pytest.raises(ValueError):
        cond_prob(NgramTable(), [], "a", k=-1)
    with pytest.raises(ValueError):
        cond_prob(NgramTable(), [], "a", k=1)


def test_partition_order_irrelevant():
    rng = random.Random(3)
    sents = [[rng.choice("abc") for _ in range(rng.randint(0, 5))] for _ in range(40)]
    parts = [count_ngrams(sents[i::4]) for i in range(4)]
    total = NgramTable()
    for p in reversed(parts):
        total = total + p
    assert total == count_ngrams(sents)
