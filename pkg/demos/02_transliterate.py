"""SERA: a reversible ASCII spelling for the syllabary.

Each syllable is consonant + vowel; the sixth order has no vowel letter,
case separates look-alike consonants (t/T, s/S) and W marks a labialized
consonant.  Decoding is greedy longest-match.
"""

from fidel.sera import SeraError, default_table, from_sera, to_sera

for word in ["በዚሁ", "ዝርዝር", "ኢትዮጵያዊ", "ቋንቋ", "ጠጅ", "ተጅ"]:
    latin = to_sera(word)
    print(f"{word:>8} -> {latin:<12} -> {from_sera(latin)}")

table = default_table()
print("cells in the shipped table:", len(table.cells()))
print("bad round trips:", [c for c in table.cells() if from_sera(to_sera(c)) != c])

try:
    from_sera("selam 2")
except SeraError as exc:
    print("decode error:", exc)
