"""Check curve existence by counting conditions over F_p."""

import time

from blowup_positivity import DivisorClass, actual_dimension, predicted_dimension

for text in ("2; 1 1 1 1 1", "2; 2 2", "4; 2 2 2 2 2", "4; 2 1 1 1 1 1 1 1 1 1 1 1 1 1"):
    A = DivisorClass.parse(text)
    rep = actual_dimension(A)
    print(f"{text:34s} expected {rep.expected_dim:3d}  actual {rep.actual_dim:3d}"
          f"  predicted {predicted_dimension(A):3d}  special={rep.special}")

# the degree-48 curve with eight points of multiplicity 17 (a 1224 x 1225 system)
t = time.perf_counter()
rep = actual_dimension(DivisorClass.uniform(48, 8, 17))
print("48; 17^8 ->", rep.actual_dim, f"({time.perf_counter() - t:.1f} s, matrix {rep.matrix_shape})")
