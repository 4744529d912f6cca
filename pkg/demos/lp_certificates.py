# Weight vectors and infeasibility certificates
#
# find_weight_vector looks for w >= 1 with <w, a> <= -1 for every a in C.
# When no such w exists it reports nonnegative multipliers y with
# sum y_a a >= 0, which makes the contradiction explicit.

from qpbw import lp
from qpbw.refilter import CSet, Infeasible, find_weight_vector, verify_certificate

for vectors in ([(-1, -1)], [(-1, 2, -1)], [(2, -3, -1), (-4, 1, 0)], [(1, -1), (-1, 1)]):
    C = CSet(len(vectors[0]), vectors, {})
    try:
        cert = find_weight_vector(C)
    except Infeasible as exc:
        print(vectors, "-> infeasible, multipliers", exc.farkas)
    else:
        print(vectors, "-> w =", cert.w, "verified:", verify_certificate(C, cert))

# The same systems by Fourier-Motzkin elimination
A = [[1, -1], [-1, 1], [-1, 0], [0, -1]]
print("FM feasible:", lp.fourier_motzkin_feasible(A, [-1, -1, -1, -1]))
