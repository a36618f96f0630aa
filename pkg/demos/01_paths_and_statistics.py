"""Paths, heights, humps and peaks.

Run: python demos/01_paths_and_statistics.py
"""

from kapath import (
    INFINITY,
    PathParams,
    enumerate_paths,
    height_profile,
    humps,
    parse_path,
    peaks,
    reverse_path,
)

# A (k, a)-path uses up steps (1, k), down steps (1, -1) and horizontal
# steps (a, 0). Words are read left to right.
p = parse_path("UHDUDD", PathParams(2, 3))
print("word     ", p.word)
print("order    ", p.order)  # 1 + 3 + 1 + 1 + 1 + 1
print("heights  ", height_profile(p))
print("humps    ", humps(p))
print("peaks    ", peaks(p))
print("reversed ", reverse_path(p).word)

# k = 1 with a = 1, 2, inf gives Motzkin, Schroeder and Dyck paths.
for label, a in (("Motzkin", 1), ("Schroeder", 2), ("Dyck", INFINITY)):
    params = PathParams(1, a)
    counts = [sum(1 for _ in enumerate_paths(n, params)) for n in range(11)]
    print(f"{label:<10}", counts)

# Humps vs peaks on the Motzkin paths of order 4.
for path in enumerate_paths(4, PathParams(1, 1)):
    print(f"  {path.word:<6} humps={len(humps(path))} peaks={len(peaks(path))}")
