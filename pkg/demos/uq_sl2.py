# U_q(sl_2) as a PBW algebra over Q(q)[K, K^-1]
#
# F and E are the variables, K lives in the coefficient ring. Moving F or E
# past K rescales it by q^2 or q^-2.

from qpbw import catalog
from qpbw.pbw import associativity_check, poly_str, psub
from qpbw.refilter import refilter_pipeline
from qpbw.syntax import parse_poly, serialize_presentation

A = catalog.make_uq_sl2()
print(serialize_presentation(A))

EF = parse_poly(A, "E*F")
FE = parse_poly(A, "F*E")
print("EF - FE =", poly_str(A, psub(EF, FE)))

print("E*K*F =", poly_str(A, parse_poly(A, "E*K*F")))
print("F^2*K^-1 =", poly_str(A, parse_poly(A, "F^2*K^-1")))

rep = associativity_check(A, trials=20)
print("associative on", rep.checked, "triples:", rep.ok)

# The tail is a coefficient, so the weight (1, 1) kills it and the associated
# graded algebra has E and F commuting over the twisted Laurent ring.
print(serialize_presentation(refilter_pipeline(A).graded.presentation))
