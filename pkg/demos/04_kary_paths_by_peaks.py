"""k-ary paths counted by peaks.

The number of k-ary paths (a = inf) with n up steps and m peaks is
C(n, m) C(kn, m-1) / n. For k = 1 these are the Narayana numbers.

Run: python demos/04_kary_paths_by_peaks.py
"""

from kapath import count_kary_peak_paths, count_sud, count_suu
from kapath.enumeration import kary_peak_census

for k in (1, 2, 3):
    print(f"k = {k}")
    for n in range(1, 7):
        closed = [count_kary_peak_paths(n, k, m) for m in range(1, n + 1)]
        census = kary_peak_census(n, k)["paths"]
        brute = [census.get(m, 0) for m in range(1, n + 1)]
        print(f"  n={n}: {closed}  brute force agrees: {closed == brute}")

# The super paths starting UU / UD that the count is assembled from.
n, k = 4, 2
census = kary_peak_census(n, k)
for m in range(1, n + 1):
    print(f"m={m}: UU {count_suu(n, k, m)} (brute {census['uu'].get(m, 0)}), "
          f"UD {count_sud(n, k, m)} (brute {census['ud'].get(m, 0)})")
