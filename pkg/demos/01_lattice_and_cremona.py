"""Walk through the Picard lattice of a blow-up and the Cremona action."""

from blowup_positivity.lattice import DivisorClass, canonical_class, intersect, profile
from blowup_positivity.weyl import enumerate_exceptional_classes, exceptional_patterns, reduce_to_fundamental

# a class is dH - sum n_i E_i; the text form is "d; n1 ... nr"
F = DivisorClass.parse("17; 6 6 6 6 6 6 6 6")
print(F.pretty())
print("F^2 =", intersect(F, F), " F.K =", intersect(F, canonical_class(8)))
print(profile(F))

# Cremona steps + sorting take F down to the line class
trace = reduce_to_fundamental(F)
print("reduces to", trace.end, "after", trace.cremona_steps, "Cremona steps")

# the seven sorted (-1)-classes on eight points, and their 240 rearrangements
for C in exceptional_patterns(8):
    print(f"{str(C):24s} {C.pretty()}")
print(len(enumerate_exceptional_classes(8)), "exceptional classes in total")
