"""Orbit graphs as drawn for gl(3), so(4) and so(5).

Edge tuples are (src, dst, side, root, case); solid lines are right actions,
dashed lines left actions, blue complex stable and red non-compact.
"""

R, L = "Right", "Left"
CS, NC = "ComplexStable", "NonCompactImaginary"

GL3_NODES = {
    "a1": "(e1<e2<e3)", "a2": "(e1<e3<e2)", "a3": "(e3<e1<e2)",
    "a4": "(e2<e1<e3)", "a5": "(e1<h2<e3)", "a6": "(e2<e3<e1)", "a7": "(h1<e3<e2)",
    "a8": "(e3<e2<e1)", "a9": "(e2<h1<e3)", "a10": "(h2<e1<e3)", "a11": "(h1<e2<e3)",
    "a12": "(h2<e3<e1)", "a13": "(h2<h1<e3)",
}
GL3_EDGES = [
    ("a1", "a4", R, "a1", CS), ("a1", "a5", R, "a2", NC), ("a2", "a5", R, "a2", NC),
    ("a2", "a6", L, "k1", CS), ("a2", "a7", R, "a1", NC), ("a3", "a7", R, "a1", NC),
    ("a3", "a8", R, "a2", CS), ("a4", "a9", R, "a2", NC), ("a5", "a9", L, "k1", CS),
    ("a5", "a10", R, "a1", CS), ("a6", "a9", R, "a2", NC), ("a6", "a12", R, "a1", NC),
    ("a7", "a12", L, "k1", CS), ("a7", "a11", R, "a2", CS), ("a8", "a12", R, "a1", NC),
    ("a9", "a13", R, "a1", NC), ("a10", "a13", L, "k1", NC), ("a11", "a13", L, "k1", NC),
    ("a12", "a13", R, "a2", NC),
]
GL3_GREEN = [("a4", "a10"), ("a5", "a11"), ("a7", "a10"), ("a8", "a11")]

SO4_NODES = {"a1": "(e1)", "a2": "(e2)", "a3": "(e-1)", "a4": "(e-2)", "a5": "(h1)"}
SO4_EDGES = [
    ("a1", "a3", L, "k1", CS), ("a1", "a2", R, "a1", CS), ("a1", "a4", R, "a2", CS),
    ("a2", "a5", L, "k1", NC), ("a3", "a5", R, "a1", NC), ("a3", "a5", R, "a2", NC),
    ("a4", "a5", L, "k1", NC),
]

# the bottom node is drawn as (e^_{2,-1} < e^_1); the hat2 vector forces e^_2
SO5_NODES = {
    "a1": "(e1<e2)", "a2": "(e1<e-2)", "a3": "(e-2<e-1)", "a4": "(e2<e1)",
    "a5": "(e1<h2)", "a6": "(e-2<e1)", "a7": "(e2<e-1)", "a8": "(e-1<e-2)",
    "a9": "(e-2<h1)", "a10": "(h2<e1)", "a11": "(e2<h1)", "a12": "(e-1<e2)",
    "a13": "(e-1<h2)", "a14": "(h1<e2)", "a15": "(h2<e-1)", "a16": "(h1<e-2)",
    "a17": "(h2m1<h2)",
}
SO5_EDGES = [
    ("a1", "a3", L, "k2", CS), ("a1", "a4", R, "a1", CS), ("a1", "a5", R, "a2", NC),
    ("a2", "a5", R, "a2", NC), ("a2", "a6", R, "a1", CS), ("a2", "a7", L, "k1", CS),
    ("a3", "a8", R, "a1", CS), ("a3", "a9", R, "a2", NC), ("a4", "a8", L, "k2", CS),
    ("a4", "a11", R, "a2", NC), ("a5", "a9", L, "k2", CS), ("a5", "a11", L, "k1", CS),
    ("a5", "a10", R, "a1", CS), ("a6", "a12", L, "k1", CS), ("a6", "a9", R, "a2", NC),
    ("a7", "a11", R, "a2", NC), ("a7", "a12", R, "a1", CS), ("a8", "a13", R, "a2", NC),
    ("a9", "a13", L, "k1", CS), ("a9", "a16", R, "a1", CS), ("a11", "a13", L, "k2", CS),
    ("a11", "a14", R, "a1", CS), ("a10", "a14", L, "k1", CS), ("a10", "a15", R, "a2", CS),
    ("a10", "a16", L, "k2", CS), ("a12", "a13", R, "a2", NC), ("a13", "a17", R, "a1", NC),
    ("a14", "a17", R, "a2", NC), ("a15", "a17", L, "k1", NC), ("a15", "a17", L, "k2", NC),
    ("a16", "a17", R, "a2", NC),
]
SO5_GREEN = [("a4", "a10"), ("a6", "a10"), ("a8", "a16"), ("a9", "a15"), ("a11", "a15"),
             ("a12", "a14")]

FIGURES = {
    ("A", 3): (GL3_NODES, GL3_EDGES, GL3_GREEN, (3, 5, 4, 1)),
    ("D", 4): (SO4_NODES, SO4_EDGES, [], (1, 3, 1)),
    ("B", 5): (SO5_NODES, SO5_EDGES, SO5_GREEN, (2, 5, 5, 4, 1)),
}
