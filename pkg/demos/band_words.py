"""
Band words, closures and rotation
=================================

Parse a few 3-braids, move between the Artin and band alphabets and look
at what the closure permutation says about components.
"""

from braid3_cosmetic import braidcore as bc

# a band word and its Artin image; a3 expands to s2 s1 s2^-1
w = bc.parse_word("a2 a3^-1 a1^2")
print(bc.render(w), "->", bc.render(bc.band_to_artin(w)))

# the closure is a knot exactly when the strand permutation is a 3-cycle
for text in ["s1 s2", "s1 s1", "s1^3 s2^-1 s1 s2^-1"]:
    u = bc.parse_word(text)
    print(f"{text:22s} components={bc.num_components(u)} knot={bc.is_knot(u)}")

# relabelling a1 -> a2 -> a3 -> a1 is conjugation by a full turn, so the
# closure is unchanged; only the letter counts move around
for k in range(3):
    print(k, bc.render(w), bc.letter_counts(w))
    w = bc.rotate_band(w)
