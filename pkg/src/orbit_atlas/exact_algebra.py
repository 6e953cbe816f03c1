"""Exact arithmetic over Q(sqrt 2) and the small linear-algebra kernel.

Everything downstream (group matrices, flags, orbit labels) is built from
``QSqrt2`` scalars, so no floating point ever enters a zero test.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from gmpy2 import mpq


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class InternalInvariantError(RuntimeError):
    """A computed object violated an invariant that should always hold."""


class VerificationError(AssertionError):
    """A verification routine found a mismatch."""


_ZERO = mpq(0)


def _rat(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


class QSqrt2:
    """The number a + b*sqrt(2) with rational a and b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        if isinstance(a, QSqrt2):
            if b:
                raise DomainError("cannot combine QSqrt2 with a sqrt(2) part")
            self.a, self.b = a.a, a.b
            return
        self.a = _rat(a)
        self.b = _rat(b)

    @classmethod
    def _raw(cls, a: mpq, b: mpq) -> "QSqrt2":
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        return obj

    @classmethod
    def coerce(cls, x) -> "QSqrt2":
        if isinstance(x, QSqrt2):
            return x
        return cls(x)

    def __add__(self, other):
        if not isinstance(other, QSqrt2):
            other = QSqrt2.coerce(other)
        return QSqrt2._raw(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, QSqrt2):
            other = QSqrt2.coerce(other)
        return QSqrt2._raw(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return QSqrt2.coerce(other) - self

    def __neg__(self):
        return QSqrt2._raw(-self.a, -self.b)

    def __mul__(self, other):
        if not isinstance(other, QSqrt2):
            other = QSqrt2.coerce(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        if not b and not d:
            return QSqrt2._raw(a * c, _ZERO)
        return QSqrt2._raw(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inv(self) -> "QSqrt2":
        a, b = self.a, self.b
        if not b:
            if not a:
                raise DomainError("inverse of zero")
            return QSqrt2._raw(1 / a, _ZERO)
        n = a * a - 2 * b * b
        return QSqrt2._raw(a / n, -b / n)

    def __truediv__(self, other):
        return self * QSqrt2.coerce(other).inv()

    def __rtruediv__(self, other):
        return QSqrt2.coerce(other) * self.inv()

    def conj(self) -> "QSqrt2":
        return QSqrt2._raw(self.a, -self.b)

    def norm(self) -> mpq:
        return self.a * self.a - 2 * self.b * self.b

    def sqrt(self) -> Optional["QSqrt2"]:
        """Exact square root inside Q(sqrt 2), or None when there is none."""
        a, b = self.a, self.b
        if not a and not b:
            return QSqrt2()
        if not b:
            r = _rat_sqrt(a)
            if r is not None:
                return QSqrt2._raw(r, _ZERO)
            r = _rat_sqrt(a / 2)
            if r is not None:
                return QSqrt2._raw(_ZERO, r)
            return None
        # (u + v sqrt2)^2 = a + b sqrt2  =>  u^2 = (a +- sqrt(a^2 - 2b^2)) / 2
        disc = _rat_sqrt(a * a - 2 * b * b)
        if disc is None:
            return None
        for u2 in ((a + disc) / 2, (a - disc) / 2):
            u = _rat_sqrt(u2)
            if u:
                return QSqrt2._raw(u, b / (2 * u))
        return None

    def is_rational(self) -> bool:
        return not self.b

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QSqrt2):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction, type(_ZERO))):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def __repr__(self):
        return f"QSqrt2({self.a}, {self.b})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*r2"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*r2"

    def to_json(self) -> List[int]:
        """[a_num, a_den, b_num, b_den]."""
        return [int(self.a.numerator), int(self.a.denominator),
                int(self.b.numerator), int(self.b.denominator)]

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "QSqrt2":
        if len(data) != 4:
            raise DomainError("QSqrt2 JSON must be [a_num, a_den, b_num, b_den]")
        return cls(mpq(int(data[0]), int(data[1])), mpq(int(data[2]), int(data[3])))


def _rat_sqrt(x: mpq) -> Optional[mpq]:
    from gmpy2 import is_square, isqrt

    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    if is_square(p) and is_square(q):
        return mpq(isqrt(p), isqrt(q))
    return None


ZERO = QSqrt2()
ONE = QSqrt2(1)
SQRT2 = QSqrt2(0, 1)


def qsqrt2_ops(x: QSqrt2, y: Optional[QSqrt2], op: str) -> QSqrt2:
    """Dispatch form of the field operations: op in {add, mul, inv}."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inv()
    raise DomainError(f"unknown op {op!r}")


Vector = Tuple[QSqrt2, ...]


def vec(entries: Iterable) -> Vector:
    return tuple(QSqrt2.coerce(x) for x in entries)


def unit(n: int, i: int) -> Vector:
    """The i-th standard basis vector of length n (0-based)."""
    return tuple(ONE if k == i else ZERO for k in range(n))


class Matrix:
    """Immutable dense matrix with QSqrt2 entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(vec(r) for r in rows)
        if not rows:
            raise DomainError("matrix needs at least one row")
        width = len(rows[0])
        if width == 0 or any(len(r) != width for r in rows):
            raise DomainError("ragged or empty matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def _raw(cls, rows: Tuple[Vector, ...]) -> "Matrix":
        obj = object.__new__(cls)
        obj.rows = rows
        obj.nrows = len(rows)
        obj.ncols = len(rows[0])
        return obj

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls._raw(tuple((ZERO,) * c for _ in range(r)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(unit(n, i) for i in range(n)))

    @classmethod
    def unit_matrix(cls, n: int, i: int, j: int) -> "Matrix":
        """E_{ij} with 0-based indices."""
        return cls._raw(tuple(
            tuple(ONE if (r == i and c == j) else ZERO for c in range(n))
            for r in range(n)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        cols = [vec(c) for c in cols]
        return cls._raw(tuple(tuple(c[i] for c in cols) for i in range(len(cols[0]))))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.rows)))

    T = property(transpose)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(tuple(tuple(x + y for x, y in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(tuple(tuple(x - y for x, y in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self.rows))

    def scale(self, c) -> "Matrix":
        c = QSqrt2.coerce(c)
        return Matrix._raw(tuple(tuple(c * x for x in r) for r in self.rows))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DomainError("shape mismatch in product")
            cols = list(zip(*other.rows))
            return Matrix._raw(tuple(tuple(_dot(r, c) for c in cols)
                                     for r in self.rows))
        v = tuple(other)
        if len(v) != self.ncols:
            raise DomainError("shape mismatch in matrix-vector product")
        return tuple(_dot(r, v) for r in self.rows)

    def apply(self, v: Sequence[QSqrt2]) -> Vector:
        return self @ v

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def bracket(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def det(self) -> QSqrt2:
        if self.nrows != self.ncols:
            raise DomainError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = self.nrows
        d = ONE
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c]), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d = d * m[c][c]
            inv = m[c][c].inv()
            for r in range(c + 1, n):
                f = m[r][c]
                if f:
                    f = f * inv
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return d

    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DomainError("shape mismatch")

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"


def _dot(r: Sequence[QSqrt2], c: Sequence[QSqrt2]) -> QSqrt2:
    s = ZERO
    for x, y in zip(r, c):
        if x and y:
            s = s + x * y
    return s


# ---------------------------------------------------------------- row reduction


def _rref_rows(rows: List[List[QSqrt2]], ncols: int) -> Tuple[List[List[QSqrt2]], List[int]]:
    """In-place style RREF on a list of row lists; returns (nonzero rows, pivots)."""
    m = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inv()
        if inv != ONE:
            m[r] = [x * inv for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [x - f * y if y else x for x, y in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rref(M: Matrix) -> Tuple[Matrix, List[int], int]:
    """Reduced row-echelon form, 0-based pivot columns, and rank."""
    red, piv = _rref_rows([list(r) for r in M.rows], M.ncols)
    rows = [tuple(r) for r in red]
    rows += [(ZERO,) * M.ncols] * (M.nrows - len(rows))
    return Matrix._raw(tuple(rows)), piv, len(piv)


def rank(M: Matrix) -> int:
    return rref(M)[2]


def kernel(M: Matrix) -> List[Vector]:
    """Basis of {x : M x = 0}."""
    red, piv = _rref_rows([list(r) for r in M.rows], M.ncols)
    return _kernel_from_rref(red, piv, M.ncols)


def _kernel_from_rref(red, piv, ncols) -> List[Vector]:
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(red, piv):
            if row[f]:
                x[p] = -row[f]
        out.append(tuple(x))
    return out


def solve(M: Matrix, b: Sequence) -> Optional[Vector]:
    """One solution of M x = b, or None."""
    aug = [list(r) + [QSqrt2.coerce(bi)] for r, bi in zip(M.rows, b)]
    red, piv = _rref_rows(aug, M.ncols + 1)
    if piv and piv[-1] == M.ncols:
        return None
    x = [ZERO] * M.ncols
    for row, p in zip(red, piv):
        x[p] = row[-1]
    return tuple(x)


def exp_nilpotent(N: Matrix) -> Matrix:
    """exp(N) = sum N^k / k! for nilpotent N (verified)."""
    if N.nrows != N.ncols:
        raise DomainError("exp of a non-square matrix")
    n = N.nrows
    total = Matrix.identity(n)
    term = Matrix.identity(n)
    for k in range(1, n + 1):
        term = (term @ N).scale(QSqrt2(Fraction(1, k)))
        if term.is_zero():
            return total
        total = total + term
    raise DomainError("matrix is not nilpotent")


# -------------------------------------------------------------------- subspaces


class Subspace:
    """A subspace of Q(sqrt2)^n stored by its canonical RREF basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vs = [list(vec(v)) for v in vectors]
        if any(len(v) != ambient_dim for v in vs):
            raise DomainError("vector length differs from the ambient dimension")
        red, _ = _rref_rows(vs, ambient_dim) if vs else ([], [])
        self.ambient_dim = ambient_dim
        self.basis: Tuple[Vector, ...] = tuple(tuple(r) for r in red)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        """span of e_i for the given 0-based indices."""
        return cls(n, [unit(n, i) for i in indices])

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DomainError("ambient dimension mismatch")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, self.basis + other.basis)

    __add__ = sum

    def annihilator(self) -> List[Vector]:
        """Rows f with f . v = 0 for every v in the subspace."""
        if not self.basis:
            return [unit(self.ambient_dim, i) for i in range(self.ambient_dim)]
        return kernel(Matrix._raw(self.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        n = self.ambient_dim
        if not self.basis or not other.basis:
            return Subspace(n)
        ann = self.annihilator() + other.annihilator()
        if not ann:
            return Subspace(n, [unit(n, i) for i in range(n)])
        return Subspace(n, kernel(Matrix._raw(tuple(ann))))

    def contains_vector(self, v: Sequence) -> bool:
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise DomainError("ambient dimension mismatch")
        return Subspace(self.ambient_dim, self.basis + (v,)).dim == self.dim

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return self.sum(other).dim == self.dim

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def subspace_ops(A: Subspace, B, op: str):
    """Dispatch form: op in {intersect, sum, contains_vector}."""
    if op == "intersect":
        return A.intersect(B)
    if op == "sum":
        return A.sum(B)
    if op == "contains_vector":
        return A.contains_vector(B)
    raise DomainError(f"unknown op {op!r}")
