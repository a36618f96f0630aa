"""The colored-hump bijection on the worked (3, 2) example.

A path with one hump painted in one of k+1 colors is sent to a super path
with at least one up step; the inverse recovers the path, the hump and the
color from the leftmost up step meeting the x-axis.

Run: python demos/03_bijection_worked_example.py
"""

from kapath import (
    ColoredHumpPath,
    Mode,
    PathParams,
    decompose_colored,
    decompose_super,
    enumerate_colored,
    phi,
    psi,
)
from kapath import figures

cp = figures.colored_path()
print("colored path:", cp.path.word, "hump", cp.hump, "color", cp.color)

dec = decompose_colored(cp)
print("  R_1 =", dec.segment(dec.r1))
print("  P'  =", dec.segment(dec.p_prime))
print("  R_i =", [dec.segment(s) for s in dec.r_segments])
print("  P'' =", dec.segment(dec.p_dprime))

image = phi(cp)
print("image:       ", image.word)

sup = decompose_super(image)
q = sup.path
print(f"  case {sup.case.value}, q_l from ({q.start_x(sup.ql_index)}, {sup.p}) "
      f"to ({q.xs[sup.ql_index]}, {sup.q})")
print(f"  A = {tuple(sup.anchor_a)}, B = {tuple(sup.anchor_b)}")

back = psi(image)
print("inverse ok:  ", back == cp)

# The same hump in every color: color 1, k+1 and the rest give the three cases.
path = cp.path
for c in range(1, path.k + 2):
    img = phi(ColoredHumpPath(path, cp.hump, c))
    print(f"  color {c}: {img.word}  case {decompose_super(img).case.value}")

# A small exhaustive check: every 2-colored hump of a Motzkin path of order 5.
params = PathParams(1, 1)
pairs = [(c, phi(c)) for c in enumerate_colored(5, params, Mode.HUMP)]
print("order 5 Motzkin:", len(pairs), "colored humps,",
      len({q.word for _, q in pairs}), "distinct images,",
      all(psi(q) == c for c, q in pairs), "roundtrip")
