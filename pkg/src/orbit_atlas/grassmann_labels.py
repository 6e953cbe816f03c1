"""B_{n-1}-orbit labels of subspaces and of flags.

A subspace V gets the jump set of V (against the prefix spans of the
ordered basis), of V cap U_1, and in type A of the projection of V to U_1.
These are B_{n-1}-invariant because B_{n-1} is upper triangular and
preserves U_1 (and U_2). The label of a flag is the sequence of labels of
its levels; it separates B_{n-1}-orbits of standard flags.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .exact_algebra import ZERO, DomainError, Matrix, QSqrt2, Subspace, _rref_rows, kernel
from .group_model import GroupContext
from .standard_flags import StandardFlag, check_standard

CASES = ("A1", "A2", "A3", "D1", "D2", "D3", "D4", "B1", "B2")


@dataclass(frozen=True)
class SubspaceLabel:
    case: str
    J: Tuple[int, ...]
    extra: Optional[int] = None

    def __post_init__(self):
        if self.case not in CASES:
            raise DomainError(f"unknown label case {self.case!r}")
        object.__setattr__(self, "J", tuple(sorted(self.J)))
        if len({abs(j) for j in self.J}) != len(self.J):
            raise DomainError("label indices must be distinct in absolute value")
        if (self.extra is None) != (self.case in ("A1", "A2", "D1", "B1")):
            raise DomainError(f"bad distinguished index for {self.case}")

    @property
    def count(self) -> int:
        return len(self.J) + (self.extra is not None)

    def to_json(self) -> dict:
        return {"case": self.case, "J": list(self.J), "extra": self.extra}

    @classmethod
    def from_json(cls, d: dict) -> "SubspaceLabel":
        return cls(d["case"], tuple(d["J"]), d.get("extra"))

    def __str__(self):
        inner = ",".join(str(j) for j in self.J)
        if self.extra is not None:
            inner += ("," if inner else "") + f"^{self.extra}"
        return f"{self.case}{{{inner}}}"


@dataclass(frozen=True)
class LabelSequence:
    labels: Tuple[SubspaceLabel, ...]

    def to_json(self) -> list:
        return [l.to_json() for l in self.labels]

    def __str__(self):
        return " ".join(str(l) for l in self.labels)


def schubert_jumps(vectors: Sequence[Sequence], n: Optional[int] = None) -> List[int]:
    """1-based j with dim(W cap E_j) > dim(W cap E_{j-1}), E_j the j-th prefix."""
    vs = [list(reversed([QSqrt2.coerce(x) for x in v])) for v in vectors]
    if not vs:
        return []
    n = len(vs[0]) if n is None else n
    _, piv = _rref_rows(vs, n)
    return sorted(n - p for p in piv)


def _signed_jumps(ctx: GroupContext, vectors) -> List[int]:
    return sorted(ctx.signed_index(p - 1) for p in schubert_jumps(vectors, ctx.n))


def _check_isotropic(ctx: GroupContext, vs) -> None:
    for a in range(len(vs)):
        for b in range(a, len(vs)):
            if ctx.beta(vs[a], vs[b]):
                raise DomainError("subspace is not isotropic")


def _u1(ctx: GroupContext) -> Subspace:
    """U_1: the hyperplane e_n-free (A), x_l = x_{-l} (D), x_0 = 0 (B)."""
    n = ctx.n
    if ctx.family == "A":
        ann = [tuple(QSqrt2(1) if p == n - 1 else ZERO for p in range(n))]
    elif ctx.family == "D":
        a, b = ctx.pos(ctx.size), ctx.pos(-ctx.size)
        ann = [tuple(QSqrt2(1) if p == a else (QSqrt2(-1) if p == b else ZERO)
                     for p in range(n))]
    else:
        ann = [tuple(QSqrt2(1) if p == ctx.pos(0) else ZERO for p in range(n))]
    if "U1" not in ctx._cache:
        ctx._cache["U1"] = Subspace(n, kernel(Matrix(ann)))
    return ctx._cache["U1"]


def subspace_label(ctx: GroupContext, vectors: Sequence[Sequence]) -> SubspaceLabel:
    V = Subspace(ctx.n, vectors)
    vs = list(V.basis)
    if ctx.family != "A":
        _check_isotropic(ctx, vs)
    U1 = _u1(ctx)
    W = V.intersect(U1)
    if ctx.family == "A":
        n = ctx.n
        if W.dim == V.dim:
            return SubspaceLabel("A1", tuple(schubert_jumps(vs, n)))
        J = schubert_jumps(list(W.basis), n)
        en = tuple(QSqrt2(1) if p == n - 1 else ZERO for p in range(n))
        if V.contains_vector(en):
            return SubspaceLabel("A2", tuple(J) + (n,))
        proj = [tuple(x if p < n - 1 else ZERO for p, x in enumerate(v)) for v in vs]
        (extra,) = set(schubert_jumps(Subspace(n, proj).basis, n)) - set(J)
        return SubspaceLabel("A3", tuple(J), extra)
    if W.dim == V.dim:
        return SubspaceLabel(ctx.family + "1", tuple(_signed_jumps(ctx, vs)))
    J = _signed_jumps(ctx, list(W.basis))
    (x,) = set(_signed_jumps(ctx, vs)) - set(J)
    if ctx.family == "B":
        if x >= 0:
            raise DomainError("isotropic subspace with an impossible jump")
        return SubspaceLabel("B2", tuple(J), -x)
    l = ctx.size
    if x == l:
        return SubspaceLabel("D2", tuple(J), l)
    if x == -l:
        return SubspaceLabel("D3", tuple(J), -l)
    if x >= 0:
        raise DomainError("isotropic subspace with an impossible jump")
    return SubspaceLabel("D4", tuple(J), -x)


def label_sequence(ctx: GroupContext, flag: Sequence[Sequence]) -> LabelSequence:
    flag = list(flag)
    return LabelSequence(tuple(subspace_label(ctx, flag[:m]) for m in range(1, len(flag) + 1)))


# ------------------------------------------------------------- symbolic side


def _predict_level(flag: StandardFlag, vs) -> SubspaceLabel:
    fam, size = flag.family, flag.size
    basis_idx = [v.index for v in vs if v.is_basis]
    others = [v for v in vs if not v.is_basis]
    if fam == "A":
        hats = sorted(v.index for v in others)
        if size in basis_idx:
            return SubspaceLabel("A2", tuple(basis_idx + hats))
        if hats:
            return SubspaceLabel("A3", tuple(basis_idx + hats[1:]), hats[0])
        return SubspaceLabel("A1", tuple(basis_idx))
    if fam == "D":
        negs = [-v.index for v in others]
        if size in basis_idx:
            basis_idx.remove(size)
            return SubspaceLabel("D2", tuple(basis_idx + negs), size)
        if -size in basis_idx:
            basis_idx.remove(-size)
            return SubspaceLabel("D3", tuple(basis_idx + negs), -size)
        if others:
            idx = sorted(v.index for v in others)
            return SubspaceLabel("D4", tuple(basis_idx + [-i for i in idx[:-1]]), idx[-1])
        return SubspaceLabel("D1", tuple(basis_idx))
    if others:
        idx = sorted(v.index for v in others)
        return SubspaceLabel("B2", tuple(basis_idx + [-i for i in idx[:-1]]), idx[-1])
    return SubspaceLabel("B1", tuple(basis_idx))


def predict_label_sequence(flag: StandardFlag) -> LabelSequence:
    """Label sequence of a standard flag read off from its vectors alone."""
    check_standard(flag)
    vs = flag.vectors
    return LabelSequence(tuple(_predict_level(flag, vs[:m]) for m in range(1, len(vs) + 1)))
