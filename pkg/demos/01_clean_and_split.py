"""From messy Ethiopic text to sentences and tokens.

Web text mixes retired letter rows with their modern equivalents and
writes the same punctuation several ways.  Normalizing first means the
splitter and every later count see one spelling per word.
"""

from collections import Counter

from fidel.ethiopic import normalize, normalize_homophones, normalize_punct
from fidel.segmenter import split_sentences

raw = "ፀሐይ፡ወጣች:: ሠላም፡ነው፧ «ዐይን» ሐበሻ፣ ጸሀይ።  ያልተጨረሰ"

print("raw:          ", raw)
print("homophones:   ", normalize_homophones(raw))
print("punctuation:  ", normalize_punct(raw))
clean = normalize(raw)
print("both:         ", clean)

stats = Counter()
for s in split_sentences(clean, stats=stats):
    print(f"  [{s.terminator}]", " | ".join(t.surface for t in s.tokens))
print("unterminated fragments dropped:", stats["dropped"])

# ፀሐይ and ጸሀይ are now the same word
words = Counter(w for s in split_sentences(clean) for w in s.words)
print("ጸሀይ occurs", words["ጸሀይ"], "times")
