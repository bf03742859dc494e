import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from fidel.morph.analyzer import MorphAnalysis, Morpheme, punctuation
from fidel.fst import TOP
from fidel.pipeline import (ConfigError, PipelineConfig, RunSummary, TaggedSentence, emit_xml,
                            load_config, run_pipeline, segment_text)
from fidel.segmenter import Sentence
from fidel.synthetic import generate_corpus


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


def test_emit_xml_shapes():
    s = Sentence.from_raw("ዝርዝር", "።")
    noun = MorphAnalysis("N", (Morpheme("zrzr", "", "zrzr", True),), TOP, "zrzr")
    unc = MorphAnalysis("UNC", (Morpheme("a<&\"", "", "", True),), TOP, "a<&\"")
    xml = emit_xml(TaggedSentence(s, (("ዝርዝር", noun), ("x", unc), ("።", punctuation("::")))))
    assert xml.splitlines() == [
        "<s>",
        '  <w pos="N" morphemes="{zrzr}" latin="zrzr">ዝርዝር </w>',
        '  <w pos="UNC" morphemes="{a&lt;&amp;&quot;}" latin="a&lt;&amp;&quot;">x </w>',
        '  <w pos="PUN">:: </w>',
        "</s>",
    ]
    ET.fromstring(xml)


def test_segment_text_applies_normalization():
    sents = segment_text("ሐበሻ፡ነው:: ሌላ", PipelineConfig())
    assert [s.words for s in sents] == [["ሀበሻ", "ነው"]]


def test_min_tokens_filter():
    assert segment_text("ሀ። ሀ ለ።", PipelineConfig(min_tokens=2))[0].words == ["ሀ", "ለ"]


def test_empty_run(tmp_path):
    summary = run_pipeline(PipelineConfig(inputs=(), output=str(tmp_path / "out")))
    assert summary == RunSummary()
    assert (tmp_path / "out" / "stats.tsv").read_text(encoding="utf-8").splitlines()[1] == "Sentences\t0"


def test_run_outputs(tmp_path):
    a = write(tmp_path / "a.txt", "በዚሁ ዝርዝር። ሰው ሀ?")
    b = write(tmp_path / "b.txt", "ቤቱ ፣ ሰው። tail")
    out = tmp_path / "out"
    summary = run_pipeline(PipelineConfig(inputs=(str(a), str(b)), output=str(out)))
    assert (summary.documents, summary.sentences, summary.tokens) == (2, 3, 7)
    assert summary.dropped_fragments == 1
    assert summary.unclassified == 1
    n_words = 0
    for name in ("a", "b"):
        root = ET.parse(out / f"{name}.xml").getroot()
        assert root.tag == "doc" and root.get("name") == name
        n_words += len(root.findall("./s/w"))
    assert n_words == summary.tokens + summary.sentences
    assert json.loads((out / "summary.json").read_text())["tokens"] == 7
    assert (out / "ngrams.tsv").read_text(encoding="utf-8").startswith("1\t")


def test_missing_input_recorded(tmp_path):
    a = write(tmp_path / "a.txt", "ሰው።")
    summary = run_pipeline(PipelineConfig(inputs=(str(a), str(tmp_path / "nope.txt")),
                                          output=str(tmp_path / "out")))
    assert summary.documents == 1
    assert [Path(p).name for p, _ in summary.errors] == ["nope.txt"]


def test_single_file(tmp_path):
    a = write(tmp_path / "a.txt", "ሰው።")
    (tmp_path / "sub").mkdir()
    b = write(tmp_path / "sub" / "a.txt", "ሀ።")
    run_pipeline(PipelineConfig(inputs=(str(a), str(b)), output=str(tmp_path / "o"), single_file=True))
    root = ET.parse(tmp_path / "o" / "corpus.xml").getroot()
    assert [d.get("name") for d in root] == ["a", "a-2"]


def test_spell_bootstrap_restores_spaces(tmp_path):
    text = "ሰው ሰው ቤት ቤት ሰውቤት።"
    a = write(tmp_path / "a.txt", text)
    summary = run_pipeline(PipelineConfig(inputs=(str(a),), output=str(tmp_path / "o"), spell=True))
    assert summary.corrections == 1
    assert summary.tokens == 6


def test_config_file(tmp_path):
    write(tmp_path / "in.txt", "ሰው።")
    cfg_path = write(tmp_path / "run.conf", "# comment\ninput = in.txt\noutput = out\nworkers = 2\n"
                                             "spell = off\nk = 0.5\n")
    cfg = load_config(cfg_path)
    assert cfg.inputs == (str(tmp_path / "in.txt"),)
    assert cfg.output == str(tmp_path / "out")
    assert (cfg.workers, cfg.spell, cfg.k) == (2, False, 0.5)


@pytest.mark.parametrize("body", ["workers = 0\n", "bogus = 1\n", "workers = many\n", "no equals\n",
                                  "grammar = missing.grammar\n", "spell = perhaps\n"])
def test_config_errors(tmp_path, body):
    with pytest.raises(ConfigError):
        load_config(write(tmp_path / "c.conf", body))


def test_config_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.conf")


def test_globs_expand_sorted(tmp_path):
    for n in ("b", "a", "c"):
        write(tmp_path / f"{n}.txt", "ሰው።")
    cfg = PipelineConfig(inputs=(str(tmp_path / "*.txt"),))
    assert [Path(p).stem for p in cfg.input_files()] == ["a", "b", "c"]


def test_workers_do_not_change_output(tmp_path):
    paths = []
    for i in range(4):
        paths.append(str(write(tmp_path / f"d{i}.txt", generate_corpus(30, seed=i))))
    outs = []
    for w in (1, 3):
        out = tmp_path / f"o{w}"
        run_pipeline(PipelineConfig(inputs=tuple(paths), output=str(out), workers=w))
        outs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert outs[0] == outs[1]
