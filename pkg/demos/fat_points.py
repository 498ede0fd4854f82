"""Quotients of the fat-point filtration of the coordinate cross B2.

The direct computation and the corrected closed form agree. The closed form
s^n/(1-t)^m T((2-t)/(1-t), (2s-t)/s) does not, as the last column shows.

Run: python demos/fat_points.py
"""
from powerideals import boolean
from powerideals.fatpoints import (
    fatpoint_quotient_closed,
    fatpoint_quotient_corrected,
    fatpoint_quotient_series,
)

B2, D = boolean(2), 5
print("k   direct              corrected           naive closed form")
for k in range(B2.n + 1):
    rows = [f(B2, k, D).padded() for f in (fatpoint_quotient_series, fatpoint_quotient_corrected, fatpoint_quotient_closed)]
    print(k, "  ".join(f"{str(r):<18}" for r in rows))
