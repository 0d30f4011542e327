"""Certify ampleness and read the certificate records."""

from blowup_positivity import (
    DivisorClass,
    Property,
    UniformBundle,
    ample_by_nef_decomposition,
    ample_general,
    certify,
    min_degree,
)

mults = (3,) + (2,) * 7 + (1,) * 4
d = min_degree("ample_general", mults=mults)
print("smallest certified degree:", d)
print(ample_general(DivisorClass(d, mults)))

# five points of multiplicity 10: 25 fails, and the conic shows why
v = certify(Property.AMPLE, DivisorClass.uniform(25, 5, 10))
print(v.outcome.value, v.failed(), v.notes["obstructions"])

# eight points of multiplicity 60, from the crude bound down to the truth
for deg in (178, 172, 171, 170):
    v = certify(Property.AMPLE, UniformBundle(deg, 8, 60))
    print(deg, v.criterion, v.outcome.value)
nef = ample_by_nef_decomposition(DivisorClass.uniform(171, 8, 60), DivisorClass.uniform(17, 8, 6))
print("171 via L = kF + aH:", nef.outcome.value, nef.notes)
