# Growth of quantum affine spaces and their localizations
#
# With every generator (and inverse) in degree 1, the number of standard
# monomials of degree <= n grows like n^s, whatever t is.

from qpbw import catalog
from qpbw.qspace import gkdim_estimate, growth_count, monomial_quotient_gkdim

for s, t in [(2, 0), (3, 0), (3, 1), (2, 2)]:
    A = catalog.uniform_q_space(s, t)
    counts = [growth_count(A, n) for n in range(6)]
    est = gkdim_estimate(A, 64)
    print(f"s={s} t={t} counts={counts} estimate={est.raw:.3f} -> {est.value}")

# Quotients by monomial ideals
A = catalog.uniform_q_space(3)
for gens in ([(1, 0, 0)], [(1, 1, 0)], [(1, 0, 0), (0, 1, 1)], [(0, 0, 0)]):
    print(gens, "GKdim", monomial_quotient_gkdim(A, gens))
