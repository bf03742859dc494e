import pytest

from fidel.fst import FeatStruct
from fidel.morph import (Analyzer, GrammarError, analyze, format_morphemes, parse_grammar,
                         seed_grammar, select_analysis)
from fidel.morph.analyzer import Morpheme, MorphAnalysis, to_sera_form, unclassified
from fidel.segmenter import Token


def only(word):
    (a,) = analyze(word)
    return a


@pytest.mark.parametrize("word, pos, morphemes", [
    ("bezihu", "PRON", "be (prep)-{yh}"),
    ("yedereja", "N", "ye (gen)-{dereja}"),
    ("zrzr", "N", "{zrzr}"),
    ("'andm", "NADJ", "{'and}-m (cnj)"),
    ("'ityoPyawi", "N", "{'ityoP_yawi}"),
    ("'altekatetem", "V", "al (neg1)-{ktt+te1a2_e3} (prf, recip, pas)-e (sb=3sm)-m (neg2)"),
    ("bebEtu", "N", "be (prep)-{bEt}-u (def)"),
    ("'adis", "NM_PRS", "{'adis}"),
    ("sne-lbona", "N", "{sne-lbona} (cmp)"),
])
def test_seed_analyses(word, pos, morphemes):
    a = only(word)
    assert (a.pos, format_morphemes(a)) == (pos, morphemes)
    assert a.sera == word


def test_ethiopic_input():
    assert only("ዝርዝር").morphemes_string == "{zrzr}"
    assert only(Token("በቤቱ", 0)).morphemes_string == "be (prep)-{bEt}-u (def)"


def test_agreement_narrows_prefix():
    (a,) = [a for a in analyze("tfelligiyalleS") if a.pos == "V"]
    assert a.features["sb"] == FeatStruct(p="2", n="sg", g="f")


@pytest.mark.parametrize("word", ["tfelligiyallehu", "tfelligiyallen", "tfelligiyalleS_"])
def test_inconsistent_suffix_rejected(word):
    assert [a for a in analyze(word) if a.pos == "V"] == []


def test_gemination_written_or_not():
    assert {a.pos for a in analyze("tfeligiyalleS")} == {"V"}
    assert {a.pos for a in analyze("yfelgal")} == {"V"}
    assert only("yfelgal").features["sb"] == FeatStruct(p="3", n="sg", g="m")


def test_unknown_word_is_unc():
    a = only("xyz")
    assert a.pos == "UNC" and format_morphemes(a) == "{xyz}"


def test_punctuation_is_pun():
    assert only("::").pos == "PUN"
    assert only("።").pos == "PUN"


def test_unromanizable_ethiopic_left_as_is():
    assert to_sera_form("ሇ") == "ሇ"
    assert only("ሇ").pos == "UNC"


def test_realization_strips_gemination():
    assert only("'altekatetem").realization == "'altekatetem"


def test_select_prefers_fewer_morphemes_then_frequency():
    g = seed_grammar()
    short = MorphAnalysis("N", (Morpheme("lj", "", "lj", True),), FeatStruct(), "x")
    long_ = MorphAnalysis("N", (Morpheme("sew", "", "sew", True), Morpheme("u", "def", "u")), FeatStruct(), "x")
    assert select_analysis([long_, short], g) is short
    rare = MorphAnalysis("N", (Morpheme("zrzr", "", "zrzr", True),), FeatStruct(), "x")
    common = MorphAnalysis("N", (Morpheme("bEt", "", "bEt", True),), FeatStruct(), "x")
    assert select_analysis([rare, common], g) is common
    with pytest.raises(ValueError):
        select_analysis([], g)


def test_analyzer_counts_unclassified():
    an = Analyzer()
    an.analyze("qqq")
    an.analyze("zrzr")
    assert an.diagnostics["unclassified"] == 1


def test_custom_grammar():
    g = parse_grammar("[slots]\nN\tstem def\n[lexicon]\nbet\tN\n[affixes]\nu\tdef\tdef\n")
    an = Analyzer(g)
    assert {format_morphemes(a) for a in an.analyze("betu")} == {"{bet}-u (def)"}
    assert an.analyze("bet") == frozenset({MorphAnalysis("N", (Morpheme("bet", "", "bet", True),),
                                                         FeatStruct(pos="N"), "bet")})
    assert an.analyze("betx") == frozenset({unclassified("betx")})


@pytest.mark.parametrize("text", [
    "[slots]\nN\tdef\n",
    "[slots]\nN\tstem stem\n",
    "[slots]\nXX\tstem\n",
    "[slots]\nN\ta b c stem\n",
    "[slots]\nN\tstem\n[affixes]\nu\tdef\n",
    "[slots]\nN\tstem\n[lexicon]\nx\tV\n",
    "[slots]\nV\tstem\n[lexicon]\nx\tV\n",
    "[slots]\nV\tstem\n[lexicon]\nx\tV\tkt+1a2a3\n",
    "[bogus]\n",
    "N\tstem\n",
    "[slots]\nN\tstem\n[lexicon]\nx\tN\t-\t-\t[a=\n",
])
def test_grammar_errors(text):
    with pytest.raises(GrammarError):
        parse_grammar(text)
