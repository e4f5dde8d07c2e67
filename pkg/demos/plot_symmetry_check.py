"""
Guarding against non-symmetric input
====================================

Replacing F by s gives a formal answer for any input, even one that is
not symmetric.  verified_convert re-expands the result and reports the
first composition where it disagrees with the input.
"""

from quasischur import SchurExpansion, parse_expression, schur_expansion_to_F, verified_convert

print(verified_convert(parse_expression("F[1,2]").f_part()))

g = SchurExpansion({(3, 1): 2, (2, 2): -1})
f = schur_expansion_to_F(g)
report = verified_convert(f)
print(f)
print(report, "->", report.schur)

# drop one term and the check catches it
broken = dict(f)
broken.pop(next(iter(broken)))
print(verified_convert(broken))
