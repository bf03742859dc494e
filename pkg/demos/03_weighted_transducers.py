"""Feature structures as FST weights.

A path's weight is the unification of its arc weights, so a path dies as
soon as two arcs disagree.  Here a prefix leaves the person open between
2 and 3, and the suffix settles it (or kills the path).
"""

from fidel.fst import EPS, Fst, compose, format_fst, parse_fs, transduce, unify

prefix = parse_fs("[sb=[p={2,3}]]")
print("unify with p=2:", unify(prefix, parse_fs("[sb=[p=2,g=f]]")))
print("unify with p=1:", unify(prefix, parse_fs("[sb=[p=1]]")))

m = Fst(start=0)
m.add_arc(0, 1, "t", "t-", prefix)
m.add_arc(1, 2, "x", "STEM")
m.add_arc(2, 3, "i", "-2sf", parse_fs("[sb=[p=2,n=sg,g=f]]"))
m.add_arc(2, 3, "o", "-1s", parse_fs("[sb=[p=1,n=sg]]"))
m.add_arc(2, 3, EPS, EPS)  # no suffix: p stays open
m.set_final(3)

for word in ["txi", "txo", "tx"]:
    results = transduce(m, word)
    print(word, "->", [(r.text, str(r.features)) for r in results] or "rejected")

# an upper-casing machine composed with the analyzer: lower-case input only
upper = Fst(start=0)
upper.set_final(0)
for ch in "txio":
    upper.add_arc(0, 0, ch.upper(), ch)
both = compose(upper, m)
print("TXI ->", [r.text for r in transduce(both, "TXI")])
print()
print(format_fst(m))
