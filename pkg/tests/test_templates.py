import pytest
from hypothesis import given, strategies as st

from fidel.morph.templates import (TemplateError, check_template, expand_template,
                                   orthographic_surface, split_root)


def test_verb_stem():
    assert expand_template("ktt", "te1a2_e3") == "tekat_et"
    assert orthographic_surface("tekat_et") == "tekatet"


def test_plain_stems():
    assert expand_template("sbr", "1e2_e3") == "seb_er"
    assert expand_template(["s", "b", "r"], "1e2_3") == "seb_r"


def test_labial_consonant_stays_whole():
    assert split_root("qWtr") == ["qW", "t", "r"]
    assert expand_template("qWtr", "1e2_e3") == "qWet_er"


def test_digit_overflow():
    with pytest.raises(TemplateError):
        expand_template("kt", "1a2e3")
    with pytest.raises(TemplateError):
        expand_template("ktb", "0a1")


@pytest.mark.parametrize("root, template", [("ktb", "1a2"), ("ktb", "1a2a3a3"), ("ktb", "_1a2a3"),
                                            ("ktb", "1a_2a3")])
def test_check_template_rejects(root, template):
    with pytest.raises(TemplateError):
        check_template(root, template)


def test_check_template_accepts():
    check_template("ktt", "te1a2_e3")
    check_template("flg", "1e2_i3")


CONS = st.lists(st.sampled_from("bdfgklmnrstz"), min_size=1, max_size=4)


@given(CONS, st.lists(st.sampled_from("aeiou_"), max_size=8))
def test_expansion_keeps_root_in_order(root, vowels):
    template = "".join(str(i + 1) + (vowels[i] if i < len(vowels) else "") for i in range(len(root)))
    stem = expand_template("".join(root), template)
    assert [c for c in stem if c not in "aeiou_"] == root
    assert "_" not in orthographic_surface(stem)
