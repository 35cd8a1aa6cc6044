"""The 13-node double star, end to end.

Two hubs with five leaves each, joined through a bridge. Small enough to
enumerate every pin set exactly, so it shows the whole story in one
screen: the Laplacian spectrum, the exhaustive max-lambda1 table, and
where the interlacing ceiling stops being attainable.
"""

import numpy as np

from pinopt import (
    brute_force_max_lambda1,
    eig_sym,
    gen_double_star,
    ground,
    lambda1,
    laplacian,
)

g = gen_double_star(5)
print(f"double star: n={g.n}, m={g.m} (bridge=0, hubs=1 and 7)")

full = eig_sym(laplacian(g))
print("\nLaplacian spectrum:")
print("  " + ", ".join(f"{v:.4f}" for v in full))

print("\nexhaustive search, best pin set per size l:")
print(f"  {'l':>2}  {'max lambda1':>11}  {'ceiling (l+1)-th eig':>20}  best set")
for l in range(1, 13):
    res = brute_force_max_lambda1(g, l)
    ceiling = full[l]
    mark = "tight" if abs(res.lambda1 - ceiling) < 1e-9 else f"gap {ceiling - res.lambda1:.4f}"
    print(f"  {l:>2}  {res.lambda1:>11.4f}  {ceiling:>20.4f}  {res.pin_set}  [{mark}]")

print("\nthe l=1 winner is the bridge, not a hub:")
for node, label in [(0, "bridge"), (1, "hub")]:
    lam = lambda1(ground(g, [node]).matrix)
    print(f"  pin {label} ({node}): lambda1 = {lam:.4f}")
