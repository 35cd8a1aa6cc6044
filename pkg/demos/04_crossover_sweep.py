"""Where hub pinning stops paying: the q-crossover at n=500.

For small pin budgets, controlling the hubs (q=1) beats controlling the
periphery (q=0); pin most of the network and the ranking flips, because
what matters at the end is which nodes are left uncontrolled. Both a
scale-free and a small-world graph show the same crossover.

The same table comes out of the CLI as CSV:
  pinopt sweep graph.txt --strategy degree_mix --l-range 50:450:50 \
      --q 0,1 --runs 3 --seed 0
"""

from pinopt import StrategyConfig, gen_ba, gen_nw, select_degree_mix

GRAPHS = [
    ("BA  (m0=5, m=5)", gen_ba(500, 5, 5, seed=0)),
    ("NW  (K=4, p=0.006)", gen_nw(500, 4, 0.006, seed=0)),
]

for label, g in GRAPHS:
    print(f"\n{label}: n={g.n}, m={g.m}")
    print(f"  {'l':>4} {'l/N':>5}  {'q=1 hubs':>9}  {'q=0 leaves':>10}  winner")
    for l in (25, 50, 100, 150, 250, 350, 400, 450, 499):
        hi = select_degree_mix(g, StrategyConfig(l=l, q=1.0, seed=0, runs=3)).lambda1
        lo = select_degree_mix(g, StrategyConfig(l=l, q=0.0, seed=0, runs=3)).lambda1
        winner = "hubs" if hi > lo else "leaves"
        print(f"  {l:>4} {l / g.n:>5.2f}  {hi:>9.4f}  {lo:>10.4f}  {winner}")
    print("  (at l = n-1 the survivor's degree is lambda1 exactly:"
          f" min={int(g.degrees.min())}, max={int(g.degrees.max())})")
