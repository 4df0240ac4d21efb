"""
A small random census
=====================

Draw random Artin words, keep the knots, run the full pipeline on each and
tally the verdicts.  The same thing is available as ``braid3-cosmetic batch``.
"""

import collections
import random

from braid3_cosmetic import analyze
from braid3_cosmetic.braidcore import ArtinLetter, BraidWord, is_knot, render_compact

rng = random.Random(7)
letters = [ArtinLetter(i, s) for i in (1, 2) for s in (1, -1)]

tally = collections.Counter()
shown = 0
while sum(tally.values()) < 40:
    w = BraidWord(rng.choice(letters) for _ in range(rng.randint(6, 12)))
    if not is_knot(w):
        continue
    c = analyze(render_compact(w))
    tally[c.verdict.verdict] += 1
    if shown < 5:
        print(f"{render_compact(w):34s} genus<={c.genus.upper:>3s}  a2={c.a2:>3d}  {c.verdict.verdict}")
        shown += 1

print(dict(tally))
