"""
Alexander polynomial two ways
=============================

The reduced Burau matrix gives the Alexander polynomial directly.  A
Kauffman state sum over the closed-braid diagram gives it again, and the
spread of delta gradings across states bounds the knot Floer thickness.
"""

from braid3_cosmetic.alexander import alexander_poly
from braid3_cosmetic.braidcore import parse_word
from braid3_cosmetic.kauffman import build_diagram, delta_span, enumerate_states, state_sum_alexander
from braid3_cosmetic.laurent import render_poly

w = parse_word("s1 s2^-1 s1 s2^-1")   # figure-eight
data = alexander_poly(w)
print("Burau:     ", render_poly(data.delta), " a2 =", data.a2, " det =", data.determinant)

# regions are U (outside), C (centre) and one annulus segment per crossing
d = build_diagram(w)
print(d.dump())

states = list(enumerate_states(d))
print("states:    ", len(states))
print("state sum: ", render_poly(state_sum_alexander(d)))

# alternating diagrams have a single delta value, so the span is zero
span = delta_span(d)
print("delta range", span.delta_min, "..", span.delta_max, " thickness <=", span.thickness_upper)

# the torus knot T(3,4) as a positive braid: its states spread over several delta values
span = delta_span(build_diagram(parse_word("s1 s2 s1 s2 s1 s2 s1 s2")))
print("(s1 s2)^4 thickness <=", span.thickness_upper, "from", span.num_states, "states")
