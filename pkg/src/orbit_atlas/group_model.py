"""Matrix realizations of G, K = G_{n-1}, their Borel subalgebras and root data.

Coordinates follow the ordered bases
  A: e_1, ..., e_n
  D: e_1, ..., e_l, e_{-l}, ..., e_{-1}                 (n = 2l)
  B: e_1, ..., e_l, e_0, e_{-l}, ..., e_{-1}            (n = 2l + 1)
and the form beta(x, y) = x^T S y with S the antidiagonal permutation.

Lie algebras are never written down by hand: each one is the kernel of its
defining linear equations, and root spaces come from torus weights.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exact_algebra import (ONE, ZERO, DomainError, InternalInvariantError, Matrix,
                            QSqrt2, Vector, _rref_rows, exp_nilpotent, kernel, unit)
from .standard_flags import FlagVector, StandardFlag, vector_coords

Weight = Tuple[Fraction, ...]
MatrixFlag = Tuple[Vector, ...]


@dataclass(frozen=True)
class Root:
    """A simple root with its sl2 data."""

    name: str           # "a1", "k2", ...
    label: str          # epsilon form, e.g. "e1-e2"
    weight: Weight      # coefficients on epsilon_1..epsilon_r
    X: Matrix
    Y: Matrix
    H: Matrix
    s: Matrix           # reflection representative exp(X) exp(-Y) exp(X)


def weight_label(w: Weight) -> str:
    out = ""
    for i, c in enumerate(w, start=1):
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        out += f"{sign}{mag}e{i}"
    return out or "0"


def _root_key(w: Weight):
    nz = [(i, c) for i, c in enumerate(w) if c]
    first = nz[0][0]
    if len(nz) == 1:
        return (first, len(w) + 1, 0)
    return (first, nz[1][0], nz[1][1])


@dataclass
class GroupContext:
    family: str
    n: int
    size: int                      # n for A, l for D/B
    form: Matrix
    basis_g: List[Matrix]
    basis_k: List[Matrix]
    basis_b: List[Matrix]          # b_{n-1} = k cap upper triangular
    torus_k: List[Matrix]          # normalized: eps_{pivot}(H_m) = delta
    torus_k_coords: List[int]      # the epsilon index (0-based) paired with H_m
    roots_g: List[Root]
    roots_k: List[Root]
    positive_k: List[Tuple[Weight, Matrix]]
    fixed_vector: Optional[Vector]
    flag_length: int
    _cache: Dict = field(default_factory=dict, repr=False)

    # -- coordinates
    def pos(self, j: int) -> int:
        return signed_position(self.family, self.size, j)

    def signed_index(self, p: int) -> int:
        return position_signed(self.family, self.size, p)

    def column(self, coords: Dict[int, QSqrt2]) -> Vector:
        v = [ZERO] * self.n
        for j, c in coords.items():
            v[self.pos(j)] = v[self.pos(j)] + c
        return tuple(v)

    def beta(self, x: Sequence[QSqrt2], y: Sequence[QSqrt2]) -> QSqrt2:
        if self.family == "A":
            raise DomainError("type A carries no form")
        n = self.n
        s = ZERO
        for p in range(n):
            if x[p] and y[n - 1 - p]:
                s = s + x[p] * y[n - 1 - p]
        return s

    @property
    def rank_g(self) -> int:
        return self.n if self.family == "A" else self.size

    def root(self, name: str) -> Root:
        for r in self.roots_g + self.roots_k:
            if r.name == name:
                return r
        raise DomainError(f"unknown root {name!r}")

    def eps_weight(self, p: int) -> Weight:
        """epsilon-weight of the basis vector at position p."""
        w = [Fraction(0)] * self.rank_g
        j = self.signed_index(p)
        if j:
            w[abs(j) - 1] = Fraction(1 if j > 0 else -1)
        return tuple(w)

    @property
    def F_plus(self) -> MatrixFlag:
        return tuple(unit(self.n, p) for p in range(self.flag_length))


def signed_position(family: str, size: int, j: int) -> int:
    if family == "A":
        if not 1 <= j <= size:
            raise DomainError(f"bad index {j}")
        return j - 1
    if j > 0:
        if j > size:
            raise DomainError(f"bad index {j}")
        return j - 1
    if j == 0:
        if family != "B":
            raise DomainError("e_0 only exists in type B")
        return size
    n = 2 * size + (family == "B")
    if -j > size:
        raise DomainError(f"bad index {j}")
    return n + j


def position_signed(family: str, size: int, p: int) -> int:
    if family == "A":
        return p + 1
    n = 2 * size + (family == "B")
    if p < size:
        return p + 1
    if family == "B" and p == size:
        return 0
    return p - n


# ----------------------------------------------------------------- construction


def _flat_kernel(n: int, rows: List[List[QSqrt2]]) -> List[Matrix]:
    """Matrices X (flattened row-major) satisfying all linear rows."""
    if not rows:
        vecs = [unit(n * n, k) for k in range(n * n)]
    else:
        vecs = kernel(Matrix(rows))
    return [Matrix._raw(tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n))) for v in vecs]


def _eq_rows(family: str, n: int, size: int) -> Dict[str, List[List[QSqrt2]]]:
    """Linear equations (as rows over flattened X) for g, k and b."""
    idx = lambda r, c: r * n + c
    g: List[List[QSqrt2]] = []
    if family != "A":
        # (X^T S + S X)_{pq} = X_{n-1-p, q} + X_{n-1-q, p}... with S antidiagonal:
        # (X^T S)_{pq} = X_{n-1-q, p}, (S X)_{pq} = X_{n-1-p, q}
        for p in range(n):
            for q in range(p, n):
                row = [ZERO] * (n * n)
                row[idx(n - 1 - q, p)] = row[idx(n - 1 - q, p)] + ONE
                row[idx(n - 1 - p, q)] = row[idx(n - 1 - p, q)] + ONE
                g.append(row)
    k = list(g)
    if family == "A":
        for p in range(n):
            for (r, c) in ((p, n - 1), (n - 1, p)):
                row = [ZERO] * (n * n)
                row[idx(r, c)] = ONE
                k.append(row)
    else:
        u = _fixed_vector(family, size)
        for p in range(n):
            row = [ZERO] * (n * n)
            for c in range(n):
                if u[c]:
                    row[idx(p, c)] = u[c]
            k.append(row)
    lower = []
    for r in range(n):
        for c in range(r):
            row = [ZERO] * (n * n)
            row[idx(r, c)] = ONE
            lower.append(row)
    off = []
    for r in range(n):
        for c in range(n):
            if r != c:
                row = [ZERO] * (n * n)
                row[idx(r, c)] = ONE
                off.append(row)
    return {"g": g, "k": k, "b": k + lower, "bg": g + lower,
            "tk": k + off, "tg": g + off}


def _fixed_vector(family: str, size: int) -> Optional[Vector]:
    if family == "A":
        return None
    if family == "B":
        n = 2 * size + 1
        return unit(n, size)
    n = 2 * size
    v = [ZERO] * n
    v[size - 1] = ONE
    v[size] = -ONE
    return tuple(v)


def _normalized_torus(family: str, size: int, n: int, torus: List[Matrix], rank_g: int):
    """Re-choose a torus basis so that eps_{c_m}(H_m) = delta_{m, m'}."""
    eps_rows = []
    for H in torus:
        row = []
        for i in range(1, rank_g + 1):
            row.append(H[signed_position(family, size, i), signed_position(family, size, i)])
        eps_rows.append(row)
    red, piv = _rref_rows([list(r) for r in eps_rows], rank_g)
    out = []
    for r in red:
        diag = [ZERO] * n
        for i in range(1, rank_g + 1):
            p = signed_position(family, size, i)
            diag[p] = r[i - 1]
            if family != "A":
                diag[n - 1 - p] = -r[i - 1]
        out.append(Matrix._raw(tuple(tuple(diag[c] if c == rr else ZERO for c in range(n))
                                     for rr in range(n))))
    return out, piv


def _root_spaces(n, rank_g, H_list, coords, rows_b, rows_alg):
    """Positive root spaces of b and the matching negative spaces of the algebra."""
    # torus value of E_pq: h_p - h_q per normalized H
    hval = [[H[p, p] for H in H_list] for p in range(n)]

    def tw(p, q):
        return tuple(a - b for a, b in zip(hval[p], hval[q]))

    def space(rows_base, lam_t, upper_only):
        rows = list(rows_base)
        for p in range(n):
            for q in range(n):
                if tw(p, q) != lam_t or (upper_only and p >= q):
                    row = [ZERO] * (n * n)
                    row[p * n + q] = ONE
                    rows.append(row)
        return _flat_kernel(n, rows)

    weights = sorted({tw(p, q) for p in range(n) for q in range(p + 1, n)
                      if any(x for x in tw(p, q))}, key=lambda t: tuple(x.a for x in t))
    positive = []
    for lam_t in weights:
        sp = space(rows_b, lam_t, True)
        if len(sp) > 1:
            raise InternalInvariantError("root space of dimension > 1")
        if sp:
            w = [Fraction(0)] * rank_g
            for c, x in zip(coords, lam_t):
                w[c] = Fraction(int(x.a.numerator), int(x.a.denominator))
            neg = space(rows_alg, tuple(-x for x in lam_t), False)
            if len(neg) != 1:
                raise InternalInvariantError("negative root space missing")
            positive.append((tuple(w), sp[0], neg[0]))
    return positive


def _sl2(name: str, w: Weight, X: Matrix, Yp: Matrix, eval_pos) -> Root:
    H = X.bracket(Yp)
    c = ZERO
    for i, a in enumerate(w):
        if a:
            c = c + QSqrt2(a) * H[eval_pos(i + 1), eval_pos(i + 1)]
    if not c:
        raise InternalInvariantError(f"degenerate sl2 triple for {name}")
    Y = Yp.scale(QSqrt2(2) / c)
    H = X.bracket(Y)
    if H.bracket(X) != X.scale(2) or H.bracket(Y) != Y.scale(-2):
        raise InternalInvariantError(f"sl2 relations fail for {name}")
    s = exp_nilpotent(X) @ exp_nilpotent(-Y) @ exp_nilpotent(X)
    return Root(name, weight_label(w), w, X, Y, H, s)


def _simple(positive):
    ws = {w for w, _, _ in positive}
    out = []
    for w, X, Y in positive:
        decomposable = any(tuple(a - b for a, b in zip(w, u)) in ws for u in ws if u != w)
        if not decomposable:
            out.append((w, X, Y))
    return sorted(out, key=lambda t: _root_key(t[0]))


_CONTEXTS: Dict[Tuple[str, int], GroupContext] = {}


def build_context(family: str, n: int) -> GroupContext:
    """Realize (g, k, b_{n-1}) for gl(n) or so(n); cached per (family, n)."""
    key = (family, n)
    if key in _CONTEXTS:
        return _CONTEXTS[key]
    if family == "A":
        if n < 2:
            raise DomainError("type A needs n >= 2")
        size = n
    elif family == "D":
        if n < 4 or n % 2:
            raise DomainError("type D needs even n >= 4")
        size = n // 2
    elif family == "B":
        if n < 3 or n % 2 == 0:
            raise DomainError("type B needs odd n >= 3")
        size = (n - 1) // 2
    else:
        raise DomainError(f"unknown family {family!r}")
    rank_g = n if family == "A" else size
    eq = _eq_rows(family, n, size)
    basis_g = _flat_kernel(n, eq["g"])
    basis_k = _flat_kernel(n, eq["k"])
    basis_b = _flat_kernel(n, eq["b"])
    tk, ck = _normalized_torus(family, size, n, _flat_kernel(n, eq["tk"]), rank_g)
    tg, cg = _normalized_torus(family, size, n, _flat_kernel(n, eq["tg"]), rank_g)
    pos = lambda i: signed_position(family, size, i)
    pos_k = _root_spaces(n, rank_g, tk, ck, eq["b"], eq["k"])
    pos_g = _root_spaces(n, rank_g, tg, cg, eq["bg"], eq["g"])
    if len(basis_b) != len(pos_k) + len(tk):
        raise InternalInvariantError("b_{n-1} is not torus plus positive root spaces")
    roots_k = [_sl2(f"k{m + 1}", w, X, Y, pos) for m, (w, X, Y) in enumerate(_simple(pos_k))]
    roots_g = [_sl2(f"a{m + 1}", w, X, Y, pos) for m, (w, X, Y) in enumerate(_simple(pos_g))]
    ctx = GroupContext(
        family=family, n=n, size=size,
        form=Matrix._raw(tuple(unit(n, n - 1 - p) for p in range(n))),
        basis_g=basis_g, basis_k=basis_k, basis_b=basis_b,
        torus_k=tk, torus_k_coords=ck, roots_g=roots_g, roots_k=roots_k,
        positive_k=[(w, X) for w, X, _ in pos_k],
        fixed_vector=_fixed_vector(family, size),
        flag_length={"A": n, "D": size - 1, "B": size}[family],
    )
    _CONTEXTS[key] = ctx
    return ctx


# ------------------------------------------------------------------ group elements


def one_param(ctx: GroupContext, root, t) -> Matrix:
    """x_alpha(t) = exp(t X_alpha)."""
    r = ctx.root(root) if isinstance(root, str) else root
    return exp_nilpotent(r.X.scale(t))


def reflection_rep(ctx: GroupContext, root) -> Matrix:
    r = ctx.root(root) if isinstance(root, str) else root
    return r.s


_POOL = [Fraction(x) for x in (1, -1, 2, -2, 3)] + [Fraction(1, 2)]


def torus_element(ctx: GroupContext, values: Sequence) -> Matrix:
    """exp of the K-torus: diagonal entries t_m^{H_m[p,p]} multiplied out."""
    diag = [QSqrt2(1)] * ctx.n
    for H, t in zip(ctx.torus_k, values):
        t = QSqrt2.coerce(t)
        for p in range(ctx.n):
            e = H[p, p]
            if e.b or e.a.denominator != 1:
                raise InternalInvariantError("non-integral torus exponent")
            k = int(e.a)
            f = t if k >= 0 else t.inv()
            for _ in range(abs(k)):
                diag[p] = diag[p] * f
    return Matrix._raw(tuple(tuple(diag[r] if c == r else ZERO for c in range(ctx.n))
                             for r in range(ctx.n)))


def random_borel(ctx: GroupContext, seed: int) -> Matrix:
    """A deterministic pseudo-random element of B_{n-1}."""
    rng = random.Random(seed)
    g = torus_element(ctx, [rng.choice(_POOL) for _ in ctx.torus_k])
    for _, X in ctx.positive_k:
        g = g @ exp_nilpotent(X.scale(QSqrt2(rng.choice(_POOL))))
    return g


def preserves_form(ctx: GroupContext, g: Matrix) -> bool:
    return g.T @ ctx.form @ g == ctx.form


# ---------------------------------------------------------------------- frames


def embed_vector(ctx: GroupContext, v: FlagVector) -> Vector:
    return ctx.column(vector_coords(ctx.family, ctx.size, v))


def complete_frame(ctx: GroupContext, flag: Sequence[Sequence]) -> Matrix:
    """Some g in G whose first columns span the given flag level by level."""
    vs = [tuple(QSqrt2.coerce(x) for x in v) for v in flag]
    n = ctx.n
    if len(vs) != ctx.flag_length:
        raise DomainError(f"flag must have {ctx.flag_length} vectors")
    if ctx.family == "A":
        g = Matrix.from_columns(vs)
        if not g.det():
            raise DomainError("flag vectors are dependent")
        return g
    k = len(vs)
    for a in range(k):
        for b in range(a, k):
            if ctx.beta(vs[a], vs[b]):
                raise DomainError("flag is not isotropic")
    # dual isotropic vectors w_i with beta(v_j, w_i) = delta_ij
    ws: List[Vector] = []
    for i in range(k):
        rows = [list(_form_row(ctx, v)) for v in vs] + [list(_form_row(ctx, w)) for w in ws]
        rhs = [ONE if j == i else ZERO for j in range(k)] + [ZERO] * len(ws)
        w = _solve_rows(rows, rhs, n)
        if w is None:
            raise DomainError("flag vectors are dependent")
        c = ctx.beta(w, w) / 2
        w = tuple(x - c * y for x, y in zip(w, vs[i]))
        ws.append(w)
    # orthogonal complement of the hyperbolic span
    perp_rows = [list(_form_row(ctx, x)) for x in vs + ws]
    M = kernel(Matrix(perp_rows))
    middle: List[Vector]
    if ctx.family == "B":
        (m,) = M
        r = ctx.beta(m, m).sqrt()
        if r is None:
            raise InternalInvariantError("middle vector has non-square length")
        middle = [tuple(x / r for x in m)]
    else:
        a, b = M
        p, q, r = ctx.beta(a, a), ctx.beta(a, b), ctx.beta(b, b)
        if not p:
            m1 = a
        elif not r:
            m1 = b
        else:
            d = (q * q - p * r).sqrt()
            if d is None:
                raise InternalInvariantError("complement is not a hyperbolic plane")
            x = (-q + d) / p
            m1 = tuple(x * u + v for u, v in zip(a, b))
        other = a if ctx.beta(m1, a) else b
        m2 = tuple(x / ctx.beta(m1, other) for x in other)
        c = ctx.beta(m2, m2) / 2
        m2 = tuple(x - c * y for x, y in zip(m2, m1))
        middle = [m1, m2]
    cols = list(vs) + middle + list(reversed(ws))
    g = Matrix.from_columns(cols)
    if g.det() != ONE:
        if ctx.family == "B":
            cols[k] = tuple(-x for x in cols[k])
        else:
            cols[k], cols[k + 1] = cols[k + 1], cols[k]
        g = Matrix.from_columns(cols)
    if not preserves_form(ctx, g) or g.det() != ONE:
        raise InternalInvariantError("frame completion failed")
    return g


def _form_row(ctx: GroupContext, v: Vector) -> Vector:
    """Row r with r . y = beta(v, y)."""
    n = ctx.n
    return tuple(v[n - 1 - p] for p in range(n))


def _solve_rows(rows, rhs, ncols) -> Optional[Vector]:
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = _rref_rows(aug, ncols + 1)
    if piv and piv[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, p in zip(red, piv):
        x[p] = row[-1]
    return tuple(x)
