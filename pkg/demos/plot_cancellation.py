"""
Cancelling tableaux in pairs
============================

Summing s over the descent compositions of every standard tableau of a
shape leaves only the superstandard one.  The map theta explains the
cancellation by pairing tableaux with opposite signs, but it has a gap:
some tableaux have no image.
"""

from quasischur import cancellation_pairing, enumerate_syt, theta_trace

report = cancellation_pairing((4, 1))
for e in report.entries:
    print(e.tableau, e.composition, e.value, e.status)
print(report.counts, "sum ok:", report.sum_ok)

# a single step, with the raised index
res = theta_trace(enumerate_syt((3, 3, 1))[5])
print(res.tableau, "->", res.image, "i =", res.raise_index)

# (4,1,1) has three tableaux the map cannot reach; the sum still works
report = cancellation_pairing((4, 1, 1))
print(report.counts, "sum ok:", report.sum_ok, "theta ok:", report.theta_ok)
for e in report.entries:
    if e.status == "undefined":
        print("  undefined on", e.tableau, e.composition, e.value)
