# Grade and the Cohen-Macaulay balance for R / R<x_i : i in S>
#
# The q-Koszul complex resolves the quotient. Dualizing and taking ranks
# degree by degree gives Ext; its first nonzero index is the grade.

import itertools

from qpbw import catalog
from qpbw.homology import build_qkoszul, cm_check, verify_complex

A = catalog.two_parameter_space()
K = build_qkoszul(A, (0, 1, 2))
print("d^2 = 0:", verify_complex(K))
for (T, U), (c, i) in sorted(K.differentials[2].items()):
    print(f"  e{T} -> ({c}) x{i + 1} e{U}")

for c in (1, 2, 3):
    for S in itertools.combinations(range(3), c):
        rep = cm_check(A, S)
        top = [(k, d, v) for (k, d), v in sorted(rep.dims.items()) if v][:3]
        print(f"S={[i + 1 for i in S]} j={rep.grade} GKdim(M)={rep.module_gkdim} "
              f"ok={rep.ok} first nonzero Ext {top}")
