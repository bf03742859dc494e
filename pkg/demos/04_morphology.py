"""Analyzing Amharic words with the seed grammar.

Orthographic words carry clitics (prepositions, the definite article,
conjunctions) and verbs carry agreement on both sides of the stem.  The
analyzer segments them, assigns a part of speech, and falls back to UNC
when the grammar has nothing to say.
"""

from fidel.morph import Analyzer, expand_template, orthographic_surface

analyzer = Analyzer()

for word in ["በዚሁ", "የደረጃ", "አንድም", "በቤቱ", "አልተካተተም", "ይፈልጋል", "ትፈልጊያለሽ", "ሰንጠረዥ"]:
    best = analyzer.tag(word)
    print(f"{word:>10}  {best.sera:<16} {best.pos:<6} {best.morphemes_string}")

stem = expand_template("ktt", "te1a2_e3")
print("\nktt + te1a2_e3 =", stem, "written", orthographic_surface(stem))

# the subject prefix t- is ambiguous until a suffix narrows it
for sera in ["tfelligiyalleS", "tfelligiyallehu"]:
    verbs = [a for a in analyzer.analyze(sera) if a.pos == "V"]
    print(sera, "->", [str(a.features["sb"]) for a in verbs] or "no verb reading")
print("diagnostics:", dict(analyzer.diagnostics))
