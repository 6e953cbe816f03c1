"""Weak order, standard order and related checks on B_{n-1}-orbits."""

from __future__ import annotations

import itertools
import json
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .exact_algebra import DomainError, InternalInvariantError, VerificationError
from .group_model import GroupContext
from .orbit_engine import (COMPLEX_STABLE, LEFT, NON_COMPACT, RIGHT, OrbitEngine, OrbitRef,
                           get_engine)
from .pil_spil import block_size_formula
from .standard_flags import KOrbitId, StandardFlag, basis

Generator = Tuple[str, str]          # (side, root name)
Pair = Tuple[StandardFlag, StandardFlag]


@dataclass(frozen=True)
class WeakEdge:
    src: StandardFlag
    dst: StandardFlag
    side: str
    root: str
    case: str


@dataclass(frozen=True)
class Cover:
    src: StandardFlag
    dst: StandardFlag
    green: bool
    witness: Optional[Tuple[StandardFlag, Generator, Tuple[Generator, ...]]] = None


@dataclass
class OrbitGraph:
    engine: OrbitEngine
    nodes: List[OrbitRef]
    weak_edges: List[WeakEdge]
    standard_relation: FrozenSet[Pair] = frozenset()
    standard_covers: List[Cover] = field(default_factory=list)

    @property
    def ctx(self) -> GroupContext:
        return self.engine.ctx

    def node(self, flag: StandardFlag) -> OrbitRef:
        return self.engine.orbits[flag]

    def edges_between(self, src: StandardFlag, dst: StandardFlag) -> List[WeakEdge]:
        return [e for e in self.weak_edges if e.src == src and e.dst == dst]

    @property
    def green_pairs(self) -> Set[Pair]:
        return {(c.src, c.dst) for c in self.standard_covers if c.green}


def _engine_for(ctx_or_engine) -> OrbitEngine:
    if isinstance(ctx_or_engine, OrbitEngine):
        return ctx_or_engine
    return get_engine(ctx_or_engine.family, ctx_or_engine.n)


def build_weak_graph(ctx, sides: Sequence[str] = (LEFT, RIGHT)) -> OrbitGraph:
    """All monoid steps between distinct orbits, for the generators on the given sides."""
    eng = _engine_for(ctx)
    edges = []
    for Q in eng.nodes:
        for side, root in eng.generators():
            if side not in sides:
                continue
            R, case = eng.monoid(Q, side, root)
            if R.flag != Q.flag:
                edges.append(WeakEdge(Q.flag, R.flag, side, root, case))
    return OrbitGraph(eng, eng.nodes, edges)


def closed_representatives(family: str, size: int) -> List[StandardFlag]:
    """The zero-dimensional orbits' standard flags."""
    if family == "A":
        n = size
        out = []
        for j in range(1, n + 1):
            idx = list(range(1, j)) + [n] + list(range(j, n))
            out.append(StandardFlag("A", n, [basis(x) for x in idx]))
        return out
    if family == "D":
        return [StandardFlag("D", size, [basis(x) for x in range(1, size)])]
    head = [basis(x) for x in range(1, size)]
    return [StandardFlag("B", size, head + [basis(size)]),
            StandardFlag("B", size, head + [basis(-size)])]


def minimal_nodes(graph: OrbitGraph) -> Set[StandardFlag]:
    targets = {e.dst for e in graph.weak_edges}
    return {q.flag for q in graph.nodes} - targets


def compute_lengths_minimal(graph: OrbitGraph) -> Tuple[Dict[StandardFlag, int], Set[StandardFlag]]:
    """Lengths dim - d and the minimal set, checked against the zero-dimensional census."""
    eng = graph.engine
    if eng.min_dim != 0:
        raise VerificationError(f"minimal orbit dimension is {eng.min_dim}, not 0")
    for e in graph.weak_edges:
        if graph.node(e.dst).dim != graph.node(e.src).dim + 1:
            raise VerificationError(f"weak edge {e} does not raise dimension by one")
    lengths = {q.flag: q.length for q in graph.nodes}
    minimal = minimal_nodes(graph)
    zero = {q.flag for q in graph.nodes if q.dim == 0}
    if minimal != zero:
        raise VerificationError("minimal orbits differ from zero-dimensional orbits")
    ctx = graph.ctx
    expected = set(closed_representatives(ctx.family, ctx.size))
    if zero != expected:
        raise VerificationError("zero-dimensional orbits differ from the closed representatives")
    return lengths, minimal


def _closure(nodes: Sequence[StandardFlag], pairs) -> Set[Pair]:
    """Reflexive-transitive closure."""
    succ: Dict[StandardFlag, Set[StandardFlag]] = {x: set() for x in nodes}
    for a, b in pairs:
        succ[a].add(b)
    out = set()
    for x in nodes:
        seen = {x}
        todo = [x]
        while todo:
            y = todo.pop()
            for z in succ[y]:
                if z not in seen:
                    seen.add(z)
                    todo.append(z)
        out.update((x, z) for z in seen)
    return out


def weak_closure(graph: OrbitGraph) -> Set[Pair]:
    return _closure([q.flag for q in graph.nodes], [(e.src, e.dst) for e in graph.weak_edges])


def standard_order(graph: OrbitGraph) -> OrbitGraph:
    """Fill in the standard order, its covers and the green (standard minus weak) pairs."""
    eng = graph.engine
    gens = eng.generators()
    length = {q.flag: q.length for q in graph.nodes}

    def step(F: StandardFlag, g: Generator) -> StandardFlag:
        return eng.monoid(eng.orbits[F], g[0], g[1])[0].flag

    witness: Dict[Pair, Tuple[StandardFlag, Generator, Tuple[Generator, ...]]] = {}
    todo = deque()
    for q in graph.nodes:
        for t in gens:
            B = step(q.flag, t)
            if length[B] == length[q.flag] + 1 and (q.flag, B) not in witness:
                witness[(q.flag, B)] = (q.flag, t, ())
                todo.append((q.flag, B))
    while todo:
        A, B = todo.popleft()
        for s in gens:
            A2, B2 = step(A, s), step(B, s)
            if length[A2] == length[A] + 1 and length[B2] == length[B] + 1 \
                    and (A2, B2) not in witness:
                q2, t, word = witness[(A, B)]
                witness[(A2, B2)] = (q2, t, word + (s,))
                todo.append((A2, B2))
    flags = [q.flag for q in graph.nodes]
    rel = _closure(flags, witness.keys())
    for a, b in rel:
        if a != b and (b, a) in rel:
            raise InternalInvariantError("standard order is not antisymmetric")
    strict = {(a, b) for a, b in rel if a != b}
    above: Dict[StandardFlag, Set[StandardFlag]] = {x: set() for x in flags}
    for a, b in strict:
        above[a].add(b)
    weak = weak_closure(graph)
    covers = []
    for a, b in sorted(strict, key=lambda p: (_key(graph, p[0]), _key(graph, p[1]))):
        if any(b in above[c] for c in above[a]):
            continue
        covers.append(Cover(a, b, (a, b) not in weak, witness.get((a, b))))
    graph.standard_relation = frozenset(rel)
    graph.standard_covers = covers
    return graph


def _key(graph: OrbitGraph, F: StandardFlag):
    return (graph.node(F).dim, F.ascii())


def build_graph(ctx, order: str = "standard") -> OrbitGraph:
    g = build_weak_graph(ctx)
    compute_lengths_minimal(g)
    if order == "standard":
        standard_order(g)
    elif order != "weak":
        raise DomainError(f"unknown order {order!r}")
    return g


# ------------------------------------------------------------------ algebra checks


def check_idempotence(eng: OrbitEngine) -> None:
    for Q in eng.nodes:
        for side, root in eng.generators():
            R, _ = eng.monoid(Q, side, root)
            if eng.monoid(R, side, root)[0] != R:
                raise VerificationError(f"m(s)^2 != m(s) for {side} {root} on {Q}")


def _cartan_product(w1, w2) -> Fraction:
    dot = lambda a, b: sum((x * y for x, y in zip(a, b)), Fraction(0))
    return 4 * dot(w1, w2) ** 2 / (dot(w1, w1) * dot(w2, w2))


def braid_length(eng: OrbitEngine, g1: Generator, g2: Generator) -> int:
    if g1[0] != g2[0]:
        return 2
    r1, r2 = eng.ctx.root(g1[1]), eng.ctx.root(g2[1])
    return {0: 2, 1: 3, 2: 4, 3: 6}[int(_cartan_product(r1.weight, r2.weight))]


def check_braid_relations(eng: OrbitEngine) -> None:
    gens = eng.generators()
    for g1, g2 in itertools.combinations(gens, 2):
        m = braid_length(eng, g1, g2)
        for Q in eng.nodes:
            a = b = Q
            for k in range(m):
                s, t = (g1, g2) if k % 2 == 0 else (g2, g1)
                a = eng.monoid(a, *s)[0]
                b = eng.monoid(b, *t)[0]
            if a != b:
                raise VerificationError(f"braid relation fails for {g1}, {g2} on {Q}")


def check_compatibility(graph: OrbitGraph) -> None:
    """Q' <= Q implies m(s)Q' <= m(s)Q; comparable pairs of equal length coincide."""
    eng = graph.engine
    rel = graph.standard_relation
    for a, b in rel:
        if a != b and graph.node(a).length >= graph.node(b).length:
            raise VerificationError("standard order relates orbits of equal length")
        for g in eng.generators():
            a2 = eng.monoid(eng.orbits[a], *g)[0].flag
            b2 = eng.monoid(eng.orbits[b], *g)[0].flag
            if (a2, b2) not in rel:
                raise VerificationError(f"standard order not compatible with {g}")


# --------------------------------------------------------------- K-orbit census


def korbit_count_formula(family: str, size: int, q: KOrbitId) -> int:
    """Number of B_{n-1}-orbits inside the K-orbit q, from the closed formulas."""
    if family == "A":
        if q.tag == "ClosedA":
            return factorial(size - 1)
        return block_size_formula("A", size, (q.i, q.j))
    if family == "B":
        if q.tag == "NonClosedB":
            return block_size_formula("B", size, (q.i,))
        return 2 ** (size - 1) * factorial(size)
    if q.tag == "NonClosedD":
        return block_size_formula("D", size, (q.i,))
    return block_size_formula("D", size, (size,))


def all_korbits(family: str, size: int) -> List[KOrbitId]:
    if family == "A":
        return ([KOrbitId("A", "ClosedA", j) for j in range(1, size + 1)]
                + [KOrbitId("A", "NonClosedA", i, j)
                   for i in range(1, size + 1) for j in range(i + 1, size + 1)])
    if family == "B":
        return ([KOrbitId("B", "NonClosedB", i) for i in range(size)]
                + [KOrbitId("B", "ClosedBPlus"), KOrbitId("B", "ClosedBMinus")])
    return ([KOrbitId("D", "NonClosedD", i) for i in range(1, size)]
            + [KOrbitId("D", "ClosedDPlus")])


def korbit_census(eng: OrbitEngine) -> Dict[KOrbitId, Tuple[int, int]]:
    """(engine count, formula count) for every K-orbit."""
    got = Counter(q.korbit for q in eng.nodes)
    fam, size = eng.ctx.family, eng.ctx.size
    return {q: (got.get(q, 0), korbit_count_formula(fam, size, q)) for q in all_korbits(fam, size)}


# ------------------------------------------------------------------- op duality


def open_korbit(family: str, size: int) -> KOrbitId:
    if family == "A":
        return KOrbitId("A", "NonClosedA", 1, size)
    if family == "B":
        return KOrbitId("B", "NonClosedB", 0)
    return KOrbitId("D", "NonClosedD", 1)


def _relabel(g: Generator) -> Optional[Generator]:
    """Big-context generator -> small-context generator."""
    side, root = g
    k = int(root[1:])
    if side == LEFT:
        return (RIGHT, f"a{k}")
    return (LEFT, f"k{k - 1}") if k > 1 else None


def op_duality_check(ctx_big, ctx_small) -> dict:
    """Match the open-K-orbit part of the big weak graph with the small weak graph."""
    big, small = _engine_for(ctx_big), _engine_for(ctx_small)
    fam = big.ctx.family
    if small.ctx.family not in ({"A"} if fam == "A" else {"B", "D"}) or small.ctx.n != big.ctx.n - 1:
        raise DomainError("op duality needs (gl(n), gl(n-1)) or (so(n), so(n-1))")
    top = open_korbit(fam, big.ctx.size)
    inside = [q for q in big.nodes if q.korbit == top]
    inside_set = {q.flag for q in inside}
    small_gens = set(small.generators())
    gens = []
    for g in big.generators():
        h = _relabel(g)
        if h is not None and h in small_gens:
            gens.append((g, h))
    # edges leaving the open orbit are ignored; inside edges by generators with
    # no counterpart are extra relations of the big graph and only counted
    mapped = {g for g, _ in gens}
    extra = duplicates = 0
    for q in inside:
        targets = {big.monoid(q, *g)[0].flag for g in mapped}
        for g in big.generators():
            R, _ = big.monoid(q, *g)
            if R.flag in inside_set and R.flag != q.flag and g not in mapped:
                extra += 1
                duplicates += R.flag in targets
    if len(gens) != len(small_gens):
        raise VerificationError("generator sets do not correspond")

    big_min = [q for q in inside
               if not any(big.monoid(p, *g)[0].flag == q.flag and p.flag != q.flag
                          for p in inside for g, _ in gens)]
    small_min = [q for q in small.nodes if q.dim == 0]
    if len(big_min) != len(small_min):
        raise VerificationError("minimal element counts differ")
    for perm in itertools.permutations(small_min):
        phi: Dict[StandardFlag, StandardFlag] = {b.flag: s.flag for b, s in zip(big_min, perm)}
        ok = True
        todo = deque(phi.items())
        while todo and ok:
            bf, sf = todo.popleft()
            for g, h in gens:
                R, c = big.monoid(big.orbits[bf], *g)
                S, d = small.monoid(small.orbits[sf], *h)
                if R.flag not in inside_set:
                    ok = False
                    break
                if (R.flag == bf) != (S.flag == sf) or (R.flag != bf and c != d):
                    ok = False
                    break
                if R.flag in phi:
                    if phi[R.flag] != S.flag:
                        ok = False
                        break
                else:
                    phi[R.flag] = S.flag
                    todo.append((R.flag, S.flag))
        if ok and len(phi) == len(inside) and len(set(phi.values())) == len(small.nodes):
            return {
                "big": f"{fam}{big.ctx.n}", "small": f"{small.ctx.family}{small.ctx.n}",
                "open_korbit": str(top), "orbits": len(inside), "extra_edges": extra, "parallel_extra_edges": duplicates,
                "generators": {f"{g[0]} {g[1]}": f"{h[0]} {h[1]}" for g, h in gens},
                "mapping": {b.ascii(): s.ascii() for b, s in sorted(phi.items(), key=lambda p: p[0].ascii())},
            }
    raise VerificationError("open-orbit subgraph is not isomorphic to the smaller graph")


# ------------------------------------------------------------------------ export

_COLORS = {COMPLEX_STABLE: "blue", NON_COMPACT: "red"}


def export(graph: OrbitGraph, fmt: str = "dot", order: str = "standard") -> str:
    nodes = sorted(graph.nodes, key=lambda q: (q.dim, q.flag.ascii()))
    edges = sorted(graph.weak_edges, key=lambda e: (_key(graph, e.src), _key(graph, e.dst),
                                                    e.side, e.root))
    covers = graph.standard_covers if order == "standard" else []
    if fmt == "dot":
        ctx = graph.ctx
        lines = [f'digraph "{ctx.family}{ctx.n}" {{', "  rankdir=TB;"]
        for q in nodes:
            lines.append(f'  "{q.flag.ascii()}" [dim={q.dim},korbit="{q.korbit}"];')
        for e in edges:
            attrs = f'color={_COLORS.get(e.case, "black")},label="{e.root}"'
            if e.side == LEFT:
                attrs += ",style=dashed"
            lines.append(f'  "{e.src.ascii()}" -> "{e.dst.ascii()}" [{attrs}];')
        for c in covers:
            if c.green:
                lines.append(f'  "{c.src.ascii()}" -> "{c.dst.ascii()}" [color=green];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        data = {
            "family": graph.ctx.family, "n": graph.ctx.n,
            "nodes": [{"id": q.flag.ascii(), "flag": q.flag.to_json(), "dim": q.dim,
                       "length": q.length, "korbit": str(q.korbit)} for q in nodes],
            "weak_edges": [{"src": e.src.ascii(), "dst": e.dst.ascii(), "side": e.side,
                            "root": e.root, "case": e.case} for e in edges],
            "standard_covers": [_cover_json(c) for c in covers],
        }
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    raise DomainError(f"unknown format {fmt!r}")


def _cover_json(c: Cover) -> dict:
    d = {"src": c.src.ascii(), "dst": c.dst.ascii(), "green": c.green}
    if c.witness is not None:
        q, t, word = c.witness
        d["witness"] = {"base": q.ascii(), "t": list(t), "word": [list(s) for s in word]}
    return d
