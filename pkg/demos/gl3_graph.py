# %%
# The orbit graph of gl(3)
#
# Thirteen orbits, three of them closed. Right edges come from the simple
# roots a1, a2 of gl(3), left edges from the root k1 of gl(2).

from orbit_atlas.order_graphs import build_graph, export, korbit_census
from orbit_atlas.orbit_engine import get_engine

eng = get_engine("A", 3)
g = build_graph(eng)

for q in g.nodes:
    print(q.dim, q.flag.ascii(), q.korbit)

# %%
# Weak order edges: each raises the dimension by one.

for e in g.weak_edges:
    print(f"{e.src.ascii():12} -> {e.dst.ascii():12} {e.side:5} {e.root} {e.case}")

# %%
# Pairs related in the standard order but not in the weak order.

for a, b in sorted(g.green_pairs, key=lambda p: (p[0].ascii(), p[1].ascii())):
    print(a.ascii(), "<", b.ascii())

# %%
# Orbits per K-orbit, next to the closed formula.

for q, (got, want) in korbit_census(eng).items():
    print(q, got, want)

# %%
# DOT output for graphviz.

print(export(g, "dot"))
