"""
Walking the obstruction ladder
==============================

Feed genus bounds, a2 and a thickness bound into the decision procedure
and see which rung settles each case.
"""

from fractions import Fraction

from braid3_cosmetic.obstruction import GenusBounds, hanselman_ratio, thickness_bound_from_genus, verdict

# nonzero a2 settles things immediately
r = verdict(1, GenusBounds(1, Fraction(1)), 0)
print(r.verdict.value, r.reason.value)
for note in r.notes:
    print("  note:", note)

# from genus 4 on, the genus-only thickness bound already forces q_max = 0
for g in range(2, 8):
    th = thickness_bound_from_genus(g)
    print(g, th, hanselman_ratio(th, g))

r = verdict(0, GenusBounds(4, Fraction(4)), thickness_bound_from_genus(4))
print(r.verdict.value, r.reason.value, r.ratio)

# genus 2 with a2 = 0 leaves a finite list of candidate slopes
r = verdict(0, GenusBounds(2, Fraction(2)), 5)
print(r.verdict.value, [f"{a}, {b}" for a, b in r.candidates])
