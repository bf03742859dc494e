import pickle
import random

import pytest
from hypothesis import given, strategies as st

from fidel.fst import FAIL, TOP, FeatStruct, FeatSyntaxError, parse_fs, subsumes, unify, unify_all
from fidel.fst.featstruct import format_fs

from oracles import subsumes_oracle
from randgen import random_fs

SEEDS = st.integers(0, 2**32 - 1)


def fs3(seed):
    rng = random.Random(seed)
    return random_fs(rng), random_fs(rng), random_fs(rng)


def test_normalization():
    assert FeatStruct(a={"x"}) == FeatStruct(a="x")
    assert FeatStruct(a={}) == TOP
    assert FeatStruct(a=FeatStruct()) == TOP
    assert FeatStruct(a=["x", "y"])["a"] == frozenset({"x", "y"})
    with pytest.raises(ValueError):
        FeatStruct(a=set())
    with pytest.raises(TypeError):
        FeatStruct(a=True)


def test_hashable_and_immutable():
    a = FeatStruct(sb=FeatStruct(p="2", n="sg"))
    assert hash(a) == hash(FeatStruct(sb={"n": "sg", "p": "2"}))
    with pytest.raises(TypeError):
        a["x"] = "1"


def test_fail_is_falsy_singleton():
    assert not FAIL
    assert pickle.loads(pickle.dumps(FAIL)) is FAIL
    assert unify(FAIL, TOP) is FAIL


def test_ambiguity_narrows():
    prefix = parse_fs("[sb=[p={2,3}]]")
    assert unify(prefix, parse_fs("[sb=[p=2,n=sg,g=f]]")) == parse_fs("[sb=[p=2,n=sg,g=f]]")
    assert unify(prefix, parse_fs("[sb=[p=1]]")) is FAIL
    assert unify(parse_fs("[a={x,y,z}]"), parse_fs("[a={y,z}]")) == parse_fs("[a={y,z}]")


def test_atom_against_structure_fails():
    assert unify(FeatStruct(a="x"), FeatStruct(a=FeatStruct(b="y"))) is FAIL


def test_unify_all():
    assert unify_all([FeatStruct(a="x"), FeatStruct(b="y")]) == FeatStruct(a="x", b="y")
    assert unify_all([FeatStruct(a="x"), FeatStruct(a="y"), FeatStruct(b="y")]) is FAIL
    assert unify_all([]) == TOP


def test_format_and_parse():
    fs = parse_fs("[ tam=prf , sb=[p=2, n=sg], g={m,f} ]")
    assert format_fs(fs) == "[g={f,m},sb=[n=sg,p=2],tam=prf]"
    assert parse_fs(format_fs(fs)) == fs
    assert parse_fs("[]") == TOP


@pytest.mark.parametrize("bad", ["", "[a]", "[a=]", "[a=x", "[a={}]", "[a=x,a=y]", "[a=x]]", "[=x]"])
def test_parse_errors(bad):
    with pytest.raises(FeatSyntaxError):
        parse_fs(bad)


@given(SEEDS)
def test_text_round_trip(seed):
    a, _, _ = fs3(seed)
    assert parse_fs(format_fs(a)) == a


@given(SEEDS)
def test_laws(seed):
    a, b, c = fs3(seed)
    assert unify(a, a) == a
    assert unify(a, b) == unify(b, a)
    assert unify(unify(a, b), c) == unify(a, unify(b, c))
    assert unify(a, TOP) == a
    assert unify(a, FAIL) is FAIL


@given(SEEDS)
def test_subsumption_matches_structural_oracle(seed):
    a, b, _ = fs3(seed)
    assert subsumes(a, b) == subsumes_oracle(a, b)
    u = unify(a, b)
    if u is not FAIL:
        assert subsumes_oracle(a, u) and subsumes_oracle(b, u)
