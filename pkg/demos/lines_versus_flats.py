"""Ideals generated by line powers and by flat powers agree for k <= 0, not above.

Run: python demos/lines_versus_flats.py
"""
from powerideals import boolean, flats_ideal_dims, lines_ideal_dims

B2 = boolean(2)
for k in (-2, -1, 0, 1, 2):
    flats = flats_ideal_dims(B2, k, 8)
    lines = lines_ideal_dims(B2, k, 8)
    mark = "" if flats == lines else "   <- differ"
    print(f"k={k:>2}  flats {list(flats.dims)}  lines {list(lines.dims)}{mark}")
