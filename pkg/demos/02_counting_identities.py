"""Total humps and peaks against super path counts.

For every order n,

    (k+1) * total humps = |SP_n| - [a divides n]
    (k+1) * total peaks = |SP_n| - |SP_{n-a}|      (n >= 1)

where SP_n are the super paths (allowed below the axis). This script checks
both by brute force over a small grid and prints a table.

Run: python demos/02_counting_identities.py
"""

from kapath import INFINITY, Mode, PathParams, count_super, delta_divides, total_statistic

print(f"{'k':>2} {'a':>4} {'n':>3} {'humps':>7} {'peaks':>7} {'|SP_n|':>8}  ok")
for k in (1, 2):
    for a in (1, 2, INFINITY):
        params = PathParams(k, a)
        for n in range(1, 11):
            th = total_statistic(n, params, Mode.HUMP)
            tp = total_statistic(n, params, Mode.PEAK)
            sp = count_super(n, params)
            tail = count_super(n - a, params) if params.a_is_finite else 0
            ok = (k + 1) * th == sp - delta_divides(n, params) and (k + 1) * tp == sp - tail
            print(f"{k:>2} {params.format_a():>4} {n:>3} {th:>7} {tp:>7} {sp:>8}  {ok}")

# At n = 0 the peak identity breaks: the empty path has no peak but is the
# one super path of order 0.
motzkin = PathParams(1, 1)
print("n=0 peaks:", total_statistic(0, motzkin, Mode.PEAK), "vs", count_super(0, motzkin))
