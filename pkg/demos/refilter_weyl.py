# Re-filtering the quantized Weyl algebra
#
# x2 x1 = q x1 x2 + 1. The tail 1 sits in degree 0, below x1 x2, so a weight
# vector should exist that makes the relation homogeneous once the tail is
# dropped.

from qpbw import catalog
from qpbw.pbw import poly_str
from qpbw.refilter import collect_c_set, find_weight_vector, leading_form, refilter_pipeline
from qpbw.syntax import parse_poly

A = catalog.make_quantized_weyl()

# The constraint set: tail exponent minus e_1 + e_2.
C = collect_c_set(A)
print("C =", C.vectors)

cert = find_weight_vector(C)
print("w =", cert.w, "margins", cert.margins)

# Products in normal form.
f = parse_poly(A, "x2*x1^3")
print("x2*x1^3 =", poly_str(A, f))

# The leading form drops the lower order terms; in gr(A) it is again a
# product of leading forms.
rep = refilter_pipeline(A)
gr = rep.graded.presentation
print("gr:", gr.name, "tails", gr.tails)
lf = leading_form(cert.w, f)
print("leading form:", poly_str(gr, lf))
print("in gr(A):", poly_str(gr, gr.multiply(gr.var(1), gr.monomial((3, 0)))))
