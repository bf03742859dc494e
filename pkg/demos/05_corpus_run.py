"""End-to-end run over a small synthetic corpus.

Writes tagged XML per document plus corpus statistics into a temporary
directory, then prints the report and the first tagged sentence.
"""

import tempfile
from pathlib import Path

from fidel.pipeline import PipelineConfig, run_pipeline
from fidel.stats import NgramTable, cond_prob, lm_logprob
from fidel.synthetic import generate_corpus

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    docs = []
    for i in range(5):
        p = tmp / f"doc{i}.txt"
        p.write_text(generate_corpus(40, seed=i), encoding="utf-8")
        docs.append(str(p))

    summary = run_pipeline(PipelineConfig(inputs=tuple(docs), output=str(tmp / "out"), workers=2))
    print(summary.to_json())
    print((tmp / "out" / "stats.tsv").read_text(encoding="utf-8"))

    xml = (tmp / "out" / "doc0.xml").read_text(encoding="utf-8")
    print(xml[: xml.index("</s>") + 4])

    table = NgramTable.parse((tmp / "out" / "ngrams.tsv").read_text(encoding="utf-8"))
    (top,) = table.unigrams.most_common(1)
    print("\nmost frequent word:", top)
    print("P(ዝርዝር | የደረጃ) =", round(cond_prob(table, ["የደረጃ"], "ዝርዝር", k=0.1), 4))
    print("log P(ሰው ዝርዝር) =", round(lm_logprob(table, ["ሰው", "ዝርዝር"], k=0.1), 3))
