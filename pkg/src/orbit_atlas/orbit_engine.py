"""Geometric side: embedded flags, orbit dimensions, canonical forms and the
extended monoid action computed by sampling P^1 fibres exactly."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exact_algebra import (DomainError, InternalInvariantError, Matrix, QSqrt2, Subspace,
                            _rref_rows, unit)
from .grassmann_labels import LabelSequence, _u1, label_sequence
from .group_model import (GroupContext, MatrixFlag, build_context, complete_frame,
                          embed_vector, one_param)
from .standard_flags import KOrbitId, StandardFlag, check_standard, enumerate_standard

LEFT, RIGHT = "Left", "Right"
COMPLEX_STABLE = "ComplexStable"
COMPLEX_UNSTABLE = "ComplexUnstable"
NON_COMPACT = "NonCompactImaginary"
REAL = "Real"
FIXED = "Fixed"
ROOT_CASES = (COMPLEX_STABLE, COMPLEX_UNSTABLE, NON_COMPACT, REAL, FIXED)

SAMPLES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(3), Fraction(5),
           Fraction(7), Fraction(1, 2), Fraction(-2), Fraction(4), Fraction(11), Fraction(-1, 3))


@dataclass(frozen=True)
class OrbitRef:
    flag: StandardFlag
    dim: int
    length: int
    korbit: KOrbitId

    def __str__(self):
        return self.flag.ascii()


def embed_flag(ctx: GroupContext, flag: StandardFlag) -> MatrixFlag:
    if (flag.family, flag.ambient_dim) != (ctx.family, ctx.n):
        raise DomainError("flag does not belong to this context")
    return tuple(embed_vector(ctx, v) for v in flag.vectors)


def orbit_dim(ctx: GroupContext, flag: Sequence[Sequence]) -> int:
    """dim b_{n-1} minus the dimension of the stabilizer of the flag in b_{n-1}."""
    rows: List[List[QSqrt2]] = []
    flag = [tuple(QSqrt2.coerce(x) for x in v) for v in flag]
    images = [[B.apply(v) for B in ctx.basis_b] for v in flag]
    for m in range(1, len(flag) + 1):
        ann = Subspace(ctx.n, flag[:m]).annihilator()
        v_img = images[m - 1]
        for a in ann:
            rows.append([sum((a[p] * w[p] for p in range(ctx.n) if a[p] and w[p]), QSqrt2(0))
                         for w in v_img])
    if not rows:
        return 0
    return len(_rref_rows(rows, len(ctx.basis_b))[1])


def korbit_of(ctx: GroupContext, flag: Sequence[Sequence]) -> KOrbitId:
    """The K-orbit of a matrix flag, read off from U_1 (and e_n / rulings)."""
    U1 = _u1(ctx)
    n = ctx.n
    first_out = None
    for m in range(1, len(flag) + 1):
        if not U1.contains(Subspace(n, flag[:m])):
            first_out = m
            break
    if ctx.family == "A":
        en = unit(n, n - 1)
        j = next(m for m in range(1, len(flag) + 1) if Subspace(n, flag[:m]).contains_vector(en))
        if first_out == j:
            return KOrbitId("A", "ClosedA", j)
        return KOrbitId("A", "NonClosedA", first_out, j)
    if ctx.family == "D":
        if first_out is None:
            return KOrbitId("D", "ClosedDPlus")
        return KOrbitId("D", "NonClosedD", first_out)
    if first_out is not None:
        return KOrbitId("B", "NonClosedB", first_out - 1)
    positive = Subspace(n, [unit(n, p) for p in range(ctx.size)])
    d = Subspace(n, flag).intersect(positive).dim
    return KOrbitId("B", "ClosedBPlus" if (ctx.size - d) % 2 == 0 else "ClosedBMinus")


class OrbitEngine:
    """All B_{n-1}-orbits of one context with a label-sequence index."""

    def __init__(self, ctx: GroupContext, samples: Sequence = SAMPLES[:8]):
        if len(samples) < 4 or samples[0] != 0:
            raise DomainError("need at least 4 samples starting with t = 0")
        self.ctx = ctx
        self.samples = tuple(Fraction(t) for t in samples)
        flags = enumerate_standard(ctx.family, ctx.size)
        self.index: Dict[LabelSequence, StandardFlag] = {}
        raw = []
        for F in flags:
            emb = embed_flag(ctx, F)
            key = label_sequence(ctx, emb)
            if key in self.index:
                raise InternalInvariantError(f"label collision: {F.ascii()} and {self.index[key].ascii()}")
            self.index[key] = F
            raw.append((F, orbit_dim(ctx, emb), korbit_of(ctx, emb)))
        self.min_dim = min(d for _, d, _ in raw)
        self.orbits: Dict[StandardFlag, OrbitRef] = {
            F: OrbitRef(F, d, d - self.min_dim, q) for F, d, q in raw}
        self._moves: Dict[Tuple[str, str], List[Matrix]] = {}
        self._results: Dict[Tuple[StandardFlag, str, str], Tuple[OrbitRef, str]] = {}

    @property
    def nodes(self) -> List[OrbitRef]:
        return sorted(self.orbits.values(), key=lambda q: (q.dim, q.flag.ascii()))

    def generators(self) -> List[Tuple[str, str]]:
        return ([(RIGHT, r.name) for r in self.ctx.roots_g]
                + [(LEFT, r.name) for r in self.ctx.roots_k])

    def canonicalize(self, flag: Sequence[Sequence]) -> StandardFlag:
        key = label_sequence(self.ctx, flag)
        try:
            return self.index[key]
        except KeyError:
            raise InternalInvariantError(f"label sequence {key} matches no standard flag") from None

    def orbit(self, flag) -> OrbitRef:
        if isinstance(flag, StandardFlag):
            return self.orbits[flag]
        return self.orbits[self.canonicalize(flag)]

    def _sample_moves(self, side: str, root: str) -> List[Matrix]:
        """x_alpha(t) s_alpha (Right) or s_alpha x_alpha(t) (Left) per sample t."""
        key = (side, root)
        if key not in self._moves:
            r = self.ctx.root(root)
            is_k = any(x.name == root for x in self.ctx.roots_k)
            if (side == LEFT) != is_k:
                raise DomainError(f"root {root} cannot act on the {side.lower()}")
            out = []
            for t in self.samples:
                x = one_param(self.ctx, r, QSqrt2(t))
                out.append(x @ r.s if side == RIGHT else r.s @ x)
            self._moves[key] = out
        return self._moves[key]

    def monoid(self, Q: OrbitRef, side: str, root: str) -> Tuple[OrbitRef, str]:
        key = (Q.flag, side, root)
        if key in self._results:
            return self._results[key]
        ctx = self.ctx
        L = ctx.flag_length
        v = complete_frame(ctx, embed_flag(ctx, Q.flag))
        base = tuple(v.column(p) for p in range(L))
        moves = self._sample_moves(side, root)
        cands: List[StandardFlag] = []
        for g in moves:
            if side == RIGHT:
                h = v @ g
                cand = tuple(h.column(p) for p in range(L))
            else:
                cand = tuple(g.apply(c) for c in base)
            cands.append(self.canonicalize(cand))
        orbits = [self.orbits[F] for F in cands]
        top = max(o.dim for o in orbits)
        if top < Q.dim:
            raise InternalInvariantError("monoid action lowered dimension")
        result = Q if top == Q.dim else None
        tops = {o.flag for o in orbits if o.dim == top}
        if result is None:
            if len(tops) != 1:
                raise InternalInvariantError(f"generic samples disagree on {Q} under {side} {root}")
            result = self.orbits[tops.pop()]
        generic = orbits[1:]
        hits = sum(1 for o in generic if o.flag == result.flag)
        if hits < min(6, len(generic) - 1):
            raise InternalInvariantError(f"too few generic samples in the open orbit for {Q}")
        census = len({o.flag for o in orbits} | {Q.flag})
        if result.flag != Q.flag:
            if result.dim != Q.dim + 1:
                raise InternalInvariantError("monoid step raised dimension by more than one")
            case = {2: COMPLEX_STABLE, 3: NON_COMPACT}.get(census)
            # the t = 0 point lands in the open orbit exactly in the complex case
            if case is None or (case == COMPLEX_STABLE) != (orbits[0].flag == result.flag):
                raise InternalInvariantError(f"inconsistent fibre census for {Q} under {side} {root}")
        else:
            case = {1: FIXED, 2: COMPLEX_UNSTABLE, 3: REAL}.get(census)
            if case is None:
                raise InternalInvariantError("more than three orbits in a P^1 fibre")
        self._results[key] = (result, case)
        return result, case


_ENGINES: Dict[Tuple[str, int, Tuple], OrbitEngine] = {}


def get_engine(family: str, n: int, samples: Sequence = SAMPLES[:8]) -> OrbitEngine:
    key = (family, n, tuple(samples))
    if key not in _ENGINES:
        _ENGINES[key] = OrbitEngine(build_context(family, n), samples)
    return _ENGINES[key]


def canonicalize(ctx: GroupContext, flag: Sequence[Sequence]) -> StandardFlag:
    return get_engine(ctx.family, ctx.n).canonicalize(flag)


def monoid_engine(ctx: GroupContext, Q: OrbitRef, side: str, root: str) -> Tuple[OrbitRef, str]:
    return get_engine(ctx.family, ctx.n).monoid(Q, side, root)
