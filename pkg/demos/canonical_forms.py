# %%
# Canonical forms of matrix flags
#
# Any isotropic flag in so(5) lies in exactly one orbit; the label sequence
# of its levels finds the standard representative.

from orbit_atlas.grassmann_labels import label_sequence
from orbit_atlas.group_model import build_context, random_borel
from orbit_atlas.orbit_engine import embed_flag, get_engine
from orbit_atlas.standard_flags import parse_flag

ctx = build_context("B", 5)
eng = get_engine("B", 5)
F = parse_flag("B", 2, "(h2m1<h2)")
flag = embed_flag(ctx, F)
print(flag)
print(label_sequence(ctx, flag))

# %%
# Move the flag by a random Borel element; the label does not change.

b = random_borel(ctx, 42)
moved = [b.apply(v) for v in flag]
print(moved)
print(label_sequence(ctx, moved))
print(eng.canonicalize(moved).ascii())

# %%
# Each simple root acting on a closed orbit of so(5).

Q = eng.orbit(parse_flag("B", 2, "(e1<e2)"))
for side, root in eng.generators():
    R, case = eng.monoid(Q, side, root)
    print(side, root, R.flag.ascii(), case)
