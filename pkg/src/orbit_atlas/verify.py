"""Verification suites behind ``orbit-atlas verify``.

Each suite yields (name, ok, detail) lines; contexts are capped by the
ambient dimension ``max_n``.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterator, List, Tuple

from .exact_algebra import InternalInvariantError, VerificationError
from .grassmann_labels import label_sequence, predict_label_sequence
from .group_model import random_borel
from .order_graphs import (build_graph, check_braid_relations, check_compatibility,
                           check_idempotence, korbit_census, op_duality_check)
from .orbit_engine import COMPLEX_STABLE, NON_COMPACT, RIGHT, SAMPLES, embed_flag, get_engine
from .pil_spil import (SeriesTable, count_orbits, enumerate_spil, lah_transform, series,
                       shift_bijection)
from .standard_flags import (enumerate_standard, gamma, korbit_symbolic, lambda_inv,
                             monoid_symbolic, validate_standard)

Line = Tuple[str, bool, str]
SUITES = ("counts", "bijections", "labels", "monoid", "graphs", "duality")
METHODS = ("formula", "recursion", "egf", "enumerate")

# |PIL(n)|, |SPIL(l)|, |SPIL(l u 0)| for n, l = 0..5
KNOWN = {"A": (1, 1, 3, 13, 73, 501), "D": (1, 1, 5, 37, 361, 4361),
         "B": (1, 3, 17, 139, 1473, 19091)}


def contexts(max_n: int, min_n: int = 2) -> List[Tuple[str, int]]:
    out = []
    for n in range(max(min_n, 2), max_n + 1):
        out.append(("A", n))
        if n >= 3 and n % 2:
            out.append(("B", n))
        if n >= 4 and n % 2 == 0:
            out.append(("D", n))
    return out


def _size(family: str, n: int) -> int:
    return n if family == "A" else n // 2


def suite_counts(max_n: int, **_) -> Iterator[Line]:
    for fam in ("A", "D", "B"):
        top = max_n if fam == "A" else max_n // 2
        top = min(top, 5)
        for k in range(top + 1):
            vals = {m: count_orbits(fam, k, m) for m in METHODS
                    if m != "enumerate" or k <= 5}
            ok = len(set(vals.values())) == 1 and vals["formula"] == KNOWN[fam][k]
            yield f"count {fam} size {k}", ok, str(vals)
    a = series("A", 6).values
    ok = lah_transform(series("A", 6)).values == series("D", 6).values
    yield "Lah transform A -> D", ok, ""
    ones = [1] * 6
    yield "Lah transform 1 -> A", lah_transform(SeriesTable("A", ones)).values == a, ""


def suite_bijections(max_n: int, **_) -> Iterator[Line]:
    for fam, n in contexts(max_n):
        size = _size(fam, n)
        flags = enumerate_standard(fam, size)
        ok = all(not validate_standard(F) for F in flags)
        ok = ok and all(gamma(lambda_inv(F), fam, size) == F for F in flags)
        ok = ok and len(set(flags)) == count_orbits(fam, size)
        yield f"Gamma/Lambda {fam}{n}", ok, f"{len(flags)} flags"
    for size in range(1, 5):
        ok = True
        for x in range(1, size + 1):
            for s in enumerate_spil(size, False):
                if any(abs(l[0]) == x for l in s.lists):
                    ok &= shift_bijection("L", shift_bijection("G", s, x), x) == s
        yield f"shift bijection size {size}", ok, ""


def suite_labels(max_n: int, seed: int = 0, samples: int = 8, **_) -> Iterator[Line]:
    for fam, n in contexts(max_n):
        eng = get_engine(fam, n, SAMPLES[:samples])
        ctx = eng.ctx
        bad = 0
        for F in eng.orbits:
            emb = embed_flag(ctx, F)
            key = label_sequence(ctx, emb)
            bad += predict_label_sequence(F) != key
            for k in range(5):
                b = random_borel(ctx, seed * 1000 + k)
                bad += eng.canonicalize(tuple(b.apply(v) for v in emb)) != F
        yield f"labels {fam}{n}", bad == 0, f"{bad} disagreements"


def suite_monoid(max_n: int, samples: int = 8, **_) -> Iterator[Line]:
    names = {"ComplexStable": COMPLEX_STABLE, "NonCompact": NON_COMPACT}
    for fam, n in contexts(max_n):
        eng = get_engine(fam, n, SAMPLES[:samples])
        bad = covered = 0
        for Q in eng.nodes:
            for side, root in eng.generators():
                if side != RIGHT:
                    continue
                sym = monoid_symbolic(Q.flag, int(root[1:]))
                if sym is None:
                    continue
                covered += 1
                R, case = eng.monoid(Q, side, root)
                bad += (sym[0], names[sym[1]]) != (R.flag, case)
        yield f"symbolic monoid {fam}{n}", bad == 0, f"{covered} covered, {bad} mismatches"
        try:
            check_idempotence(eng)
            if n <= 5:
                check_braid_relations(eng)
            yield f"monoid algebra {fam}{n}", True, ""
        except VerificationError as e:
            yield f"monoid algebra {fam}{n}", False, str(e)


def suite_graphs(max_n: int, samples: int = 8, **_) -> Iterator[Line]:
    for fam, n in contexts(max_n):
        eng = get_engine(fam, n, SAMPLES[:samples])
        try:
            g = build_graph(eng)
            if n <= 5:
                check_compatibility(g)
            ok, detail = True, f"{len(g.nodes)} orbits, {len(g.green_pairs)} green pairs"
        except (VerificationError, InternalInvariantError) as e:
            ok, detail = False, str(e)
        yield f"orders {fam}{n}", ok, detail
        census = korbit_census(eng)
        ok = all(a == b for a, b in census.values())
        ok = ok and all(korbit_symbolic(q.flag) == q.korbit for q in eng.nodes)
        yield f"K-orbit census {fam}{n}", ok, " ".join(f"{q}:{a}" for q, (a, _) in census.items())


def suite_duality(max_n: int, samples: int = 8, **_) -> Iterator[Line]:
    pairs = [(("A", n), ("A", n - 1)) for n in range(3, max_n + 1)]
    pairs += [(("B", n), ("D", n - 1)) for n in range(5, max_n + 1, 2)]
    pairs += [(("D", n), ("B", n - 1)) for n in range(4, max_n + 1, 2)]
    for big, small in pairs:
        try:
            r = op_duality_check(get_engine(*big, SAMPLES[:samples]),
                                 get_engine(*small, SAMPLES[:samples]))
            yield f"op duality {big[0]}{big[1]}/{small[0]}{small[1]}", True, f"{r['orbits']} orbits"
        except VerificationError as e:
            yield f"op duality {big[0]}{big[1]}/{small[0]}{small[1]}", False, str(e)


RUNNERS: Dict[str, Callable[..., Iterator[Line]]] = {
    "counts": suite_counts, "bijections": suite_bijections, "labels": suite_labels,
    "monoid": suite_monoid, "graphs": suite_graphs, "duality": suite_duality,
}


def run_suites(names, max_n: int, seed: int = 0, samples: int = 8) -> Iterator[Line]:
    for name in names:
        yield from RUNNERS[name](max_n=max_n, seed=seed, samples=samples)
