"""Multigraded Hilbert tables for the three-line configuration in the plane.

Run: python demos/cox_tables.py
"""
from powerideals import uniform_2_3
from powerideals.coxring import MODES, cox_closed_form, cox_table_direct

U23 = uniform_2_3()
for mode in sorted(MODES):
    closed = cox_closed_form(U23, mode, 4, 3)
    direct = cox_table_direct(U23, mode, 4, 3)
    print(f"{mode}: closed form {'equals' if closed == direct else 'differs from'} the direct table")
    for a in [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 0, 0), (1, 1, 1)]:
        print("   a =", a, "degrees 0..4:", [direct[d, a] for d in range(5)])
