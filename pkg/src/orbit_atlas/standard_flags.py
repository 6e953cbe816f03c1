"""Symbolic flags in standard form and their bijection with (S)PILs.

Vector kinds, with l the rank for the orthogonal families:

=========  =========================================  ======
kind       vector                                     family
=========  =========================================  ======
basis      e_j  (signed j for D/B, 1..n for A)        all
hatA       e_i + e_n                                  A
hatD       e_{-i} + e_{-l}                            D
tildeD     e_{-i} + e_l                               D
hat1       e_i + sqrt2 e_0 - e_{-i}                   B
hat2       hat1(a) + e_{-j}   (index j, aux a > j)    B
=========  =========================================  ======
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .exact_algebra import ONE, SQRT2, ZERO, DomainError, QSqrt2
from .pil_spil import Pil, Spil, enumerate_pil, enumerate_spil

FAMILIES = ("A", "D", "B")
KINDS = ("basis", "hatA", "hatD", "tildeD", "hat1", "hat2")


@dataclass(frozen=True)
class FlagVector:
    kind: str
    index: int
    aux: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown vector kind {self.kind!r}")

    @property
    def is_basis(self) -> bool:
        return self.kind == "basis"

    @property
    def is_hat(self) -> bool:
        return self.kind in ("hatA", "hatD", "hat1", "hat2")

    def ascii(self) -> str:
        if self.kind == "basis":
            return f"e{self.index}"
        if self.kind == "tildeD":
            return f"t{self.index}"
        if self.kind == "hat2":
            return f"h{self.aux}m{self.index}"
        return f"h{self.index}"

    def to_json(self) -> dict:
        d = {"kind": self.kind, "index": self.index}
        if self.kind == "hat2":
            d["aux"] = self.aux
        return d


def basis(j: int) -> FlagVector:
    return FlagVector("basis", j)


@dataclass(frozen=True)
class StandardFlag:
    family: str
    size: int
    vectors: Tuple[FlagVector, ...]

    def __init__(self, family: str, size: int, vectors: Sequence[FlagVector]):
        if family not in FAMILIES:
            raise DomainError(f"unknown family {family!r}")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "vectors", tuple(vectors))

    @property
    def ambient_dim(self) -> int:
        return ambient_dim(self.family, self.size)

    def ascii(self) -> str:
        return "(" + "<".join(v.ascii() for v in self.vectors) + ")"

    __str__ = ascii

    def replace(self, pos: int, *new: FlagVector) -> "StandardFlag":
        """Copy with vectors from 1-based position ``pos`` onward overwritten."""
        vs = list(self.vectors)
        for k, v in enumerate(new):
            vs[pos - 1 + k] = v
        return StandardFlag(self.family, self.size, vs)

    def to_json(self) -> dict:
        key = "n" if self.family == "A" else "l"
        return {"family": self.family, key: self.size,
                "vectors": [v.to_json() for v in self.vectors]}

    @classmethod
    def from_json(cls, data: dict) -> "StandardFlag":
        size = data.get("n", data.get("l"))
        vs = [FlagVector(v["kind"], int(v["index"]), int(v.get("aux", 0)))
              for v in data["vectors"]]
        return cls(data["family"], int(size), vs)


def ambient_dim(family: str, size: int) -> int:
    return {"A": size, "D": 2 * size, "B": 2 * size + 1}[family]


def flag_length(family: str, size: int) -> int:
    return {"A": size, "D": size - 1, "B": size}[family]


_TOKEN = re.compile(r"^(e)(-?\d+)$|^(h)(\d+)m(\d+)$|^(h)(\d+)$|^(t)(\d+)$")


def parse_flag(family: str, size: int, text: str) -> StandardFlag:
    """Parse the ASCII form, e.g. ``(e1<h2<e3)`` or ``(h2m1<h2)``."""
    body = text.strip().strip("()")
    vs = []
    for tok in filter(None, (t.strip() for t in body.split("<"))):
        m = _TOKEN.match(tok)
        if not m:
            raise DomainError(f"bad flag token {tok!r}")
        if m.group(1):
            vs.append(basis(int(m.group(2))))
        elif m.group(3):
            vs.append(FlagVector("hat2", int(m.group(5)), int(m.group(4))))
        elif m.group(6):
            kind = {"A": "hatA", "D": "hatD", "B": "hat1"}[family]
            vs.append(FlagVector(kind, int(m.group(7))))
        else:
            vs.append(FlagVector("tildeD", int(m.group(9))))
    return StandardFlag(family, size, vs)


# ------------------------------------------------------------ coordinates / form


def vector_coords(family: str, size: int, v: FlagVector) -> Dict[int, QSqrt2]:
    """Coefficients of v on the signed basis (0 is the middle vector for B)."""
    i = v.index
    if v.kind == "basis":
        return {i: ONE}
    if v.kind == "hatA":
        return {i: ONE, size: ONE}
    if v.kind == "hatD":
        return {-i: ONE, -size: ONE}
    if v.kind == "tildeD":
        return {-i: ONE, size: ONE}
    if v.kind == "hat1":
        return {i: ONE, 0: SQRT2, -i: -ONE}
    # hat2: hat1(aux) + e_{-index}
    return {v.aux: ONE, 0: SQRT2, -v.aux: -ONE, -i: ONE}


def form(x: Dict[int, QSqrt2], y: Dict[int, QSqrt2]) -> QSqrt2:
    """beta(e_j, e_k) = delta_{j,-k}."""
    s = ZERO
    for j, c in x.items():
        d = y.get(-j)
        if d is not None:
            s = s + c * d
    return s


def vector_index(v: FlagVector) -> int:
    """The (unsigned) index of a vector in the sense of the standard-form rules."""
    return abs(v.index)


# ------------------------------------------------------------------ validation


def _kind_ok(family: str, size: int, v: FlagVector) -> Optional[str]:
    i = v.index
    if family == "A":
        if v.kind == "basis" and 1 <= i <= size:
            return None
        if v.kind == "hatA" and 1 <= i <= size - 1:
            return None
    elif family == "D":
        if v.kind == "basis" and 1 <= abs(i) <= size:
            return None
        if v.kind in ("hatD", "tildeD") and 1 <= i <= size - 1:
            return None
    else:
        if v.kind == "basis" and 1 <= abs(i) <= size:
            return None
        if v.kind == "hat1" and 1 <= i <= size:
            return None
        if v.kind == "hat2" and 1 <= i < v.aux <= size:
            return None
    return f"vector {v.ascii()} is not allowed for family {family} of size {size}"


def validate_standard(flag: StandardFlag) -> List[str]:
    """List the violated standard-form conditions; an empty list means valid."""
    fam, size, vs = flag.family, flag.size, flag.vectors
    out: List[str] = []
    want = flag_length(fam, size)
    if len(vs) != want:
        out.append(f"length: expected {want} vectors, got {len(vs)}")
    for v in vs:
        msg = _kind_ok(fam, size, v)
        if msg:
            out.append("kind: " + msg)
    if out:
        return out
    idx = [vector_index(v) for v in vs]
    if len(set(idx)) != len(idx):
        out.append("distinct: indices must be pairwise distinct")
    if fam == "A":
        out += _validate_A(size, vs)
    elif fam == "D":
        out += _validate_D(size, vs)
    else:
        out += _validate_B(size, vs)
    if fam != "A":
        coords = [vector_coords(fam, size, v) for v in vs]
        for p in range(len(vs)):
            for q in range(p, len(vs)):
                if form(coords[p], coords[q]):
                    out.append(f"isotropy: beta(v{p + 1}, v{q + 1}) != 0")
    return out


def _validate_A(n, vs) -> List[str]:
    out = []
    pos_n = [k for k, v in enumerate(vs) if v == basis(n)]
    if not pos_n:
        out.append("(a): e_n must occur")
    elif any(not v.is_basis for v in vs[pos_n[0] + 1:]):
        out.append("(b): only basis vectors may follow e_n")
    hats = [v.index for v in vs if v.kind == "hatA"]
    if any(a <= b for a, b in zip(hats, hats[1:])):
        out.append("(c): hat indices must decrease")
    return out


def _validate_D(l, vs) -> List[str]:
    out = []
    pm = [k for k, v in enumerate(vs) if v.is_basis and abs(v.index) == l]
    if pm and any(not v.is_basis for v in vs[pm[0] + 1:]):
        out.append("(a): only basis vectors may follow e_{+-l}")
    tildes = [v.index for v in vs if v.kind == "tildeD"]
    hats = [v.index for v in vs if v.kind == "hatD"]
    if tildes and basis(l) not in vs:
        out.append("(b): a tilde vector requires e_l")
    if any(a >= b for a, b in zip(hats, hats[1:])) or any(
            a >= b for a, b in zip(tildes, tildes[1:])):
        out.append("(c): hat (resp. tilde) indices must increase")
    for i in hats + tildes:
        if basis(-i) in vs:
            out.append(f"(d): hat/tilde vector of index {i} occurs with e_-{i}")
    if hats and tildes:
        out.append("exclusion: hat and tilde vectors cannot occur together")
    if hats and basis(l) in vs:
        out.append("exclusion: a hat vector excludes e_l")
    if tildes and basis(-l) in vs:
        out.append("exclusion: a tilde vector excludes e_-l")
    return out


def _validate_B(l, vs) -> List[str]:
    out = []
    first = [k for k, v in enumerate(vs) if v.kind == "hat1"]
    if first and any(not v.is_basis for v in vs[first[0] + 1:]):
        out.append("(a): only basis vectors may follow a hat vector of the first kind")
    seconds = [v for v in vs if v.kind == "hat2"]
    for a in {v.aux for v in seconds}:
        js = [v.index for v in seconds if v.aux == a]
        if any(x >= y for x, y in zip(js, js[1:])):
            out.append("(b): second-kind hat indices must increase")
    if sorted(vector_index(v) for v in vs) != list(range(1, l + 1)):
        out.append("(c): each of 1..l must be the index of exactly one vector")
    if seconds:
        auxes = {v.aux for v in seconds}
        if len(auxes) > 1 or FlagVector("hat1", auxes.pop()) not in vs:
            out.append("first-kind: second-kind hats need the matching first-kind hat")
    return out


def check_standard(flag: StandardFlag) -> None:
    diag = validate_standard(flag)
    if diag:
        raise DomainError(f"{flag.ascii()} is not in standard form: {'; '.join(diag)}")


# ------------------------------------------------------------------ gamma/lambda


def _check_model(model, family: str, size: int) -> None:
    if family == "A":
        if not isinstance(model, Pil) or model.support != frozenset(range(1, size + 1)):
            raise DomainError("type A needs a PIL of {1..n}")
        return
    if not isinstance(model, Spil):
        raise DomainError("orthogonal families need a SPIL")
    model.check()
    if model.support - {0} != frozenset(range(1, size + 1)):
        raise DomainError("SPIL has the wrong ground set")
    if model.with_zero != (family == "B"):
        raise DomainError("SPIL zero presence does not match the family")


def gamma(model: Union[Pil, Spil], family: str, size: Optional[int] = None) -> StandardFlag:
    """The standard flag attached to a PIL (type A) or SPIL (types D, B)."""
    if size is None:
        size = max(abs(x) for l in model.lists for x in l)
    _check_model(model, family, size)
    lists = list(model.lists)
    vs: List[FlagVector] = []
    if family == "A":
        last = next(l for l in lists if size in l)
        rest = sorted((l for l in lists if l is not last), key=lambda l: -l[-1])
        for l in rest:
            vs += [basis(x) for x in l[:-1]] + [FlagVector("hatA", l[-1])]
        vs += [basis(x) for x in last]
    elif family == "D":
        last = next(l for l in lists if size in l or -size in l)
        rest = sorted((l for l in lists if l is not last), key=lambda l: l[-1])
        case1 = last[-1] == size or -size in last
        kind = "hatD" if case1 else "tildeD"
        for l in rest:
            vs += [basis(x) for x in l[:-1]] + [FlagVector(kind, l[-1])]
        vs += [basis(x) for x in last[:-1]]
    else:
        last = next(l for l in lists if l[-1] == 0)
        rest = sorted((l for l in lists if l is not last), key=lambda l: l[-1])
        if rest:
            a = rest[-1][-1]
            for l in rest[:-1]:
                vs += [basis(x) for x in l[:-1]] + [FlagVector("hat2", l[-1], a)]
            vs += [basis(x) for x in rest[-1][:-1]] + [FlagVector("hat1", a)]
        vs += [basis(x) for x in last[:-1]]
    return StandardFlag(family, size, vs)


def _split_at_hats(vs: Sequence[FlagVector]) -> Tuple[List[Tuple[int, ...]], List[int]]:
    lists, cur = [], []
    for v in vs:
        cur.append(v.index if v.is_basis else abs(v.index))
        if not v.is_basis:
            lists.append(tuple(cur))
            cur = []
    return lists, cur


def lambda_inv(flag: StandardFlag) -> Union[Pil, Spil]:
    """Inverse of :func:`gamma`."""
    check_standard(flag)
    lists, tail = _split_at_hats(flag.vectors)
    if flag.family == "A":
        return Pil(lists + [tuple(tail)])
    if flag.family == "D":
        used = {vector_index(v) for v in flag.vectors}
        (missing,) = set(range(1, flag.size + 1)) - used
        return Spil(lists + [tuple(tail) + (missing,)], False)
    return Spil(lists + [tuple(tail) + (0,)], True)


def enumerate_standard(family: str, size: int) -> List[StandardFlag]:
    if family == "A":
        models = enumerate_pil(range(1, size + 1))
    elif family in ("D", "B"):
        models = enumerate_spil(size, family == "B")
    else:
        raise DomainError(f"unknown family {family!r}")
    return [gamma(m, family, size) for m in models]


# -------------------------------------------------------------------- K-orbits


@dataclass(frozen=True, order=True)
class KOrbitId:
    family: str
    tag: str
    i: int = 0
    j: int = 0

    def length(self, size: int) -> int:
        if self.tag == "NonClosedA":
            return self.j - self.i
        if self.tag in ("NonClosedD", "NonClosedB"):
            return size - self.i
        return 0

    def __str__(self):
        if self.tag == "ClosedA":
            return f"Q_{self.i}"
        if self.tag == "NonClosedA":
            return f"Q_{self.i},{self.j}"
        if self.tag in ("NonClosedD", "NonClosedB"):
            return f"Q_{self.i}"
        return {"ClosedDPlus": "Q_+", "ClosedBPlus": "Q_+", "ClosedBMinus": "Q_-"}[self.tag]


def korbit_symbolic(flag: StandardFlag) -> KOrbitId:
    check_standard(flag)
    fam, size, vs = flag.family, flag.size, flag.vectors
    if fam == "A":
        j = vs.index(basis(size)) + 1
        hats = [k + 1 for k, v in enumerate(vs) if v.is_hat]
        if hats and hats[0] < j:
            return KOrbitId("A", "NonClosedA", hats[0], j)
        return KOrbitId("A", "ClosedA", j)
    if fam == "D":
        for k, v in enumerate(vs):
            if not v.is_basis or abs(v.index) == size:
                return KOrbitId("D", "NonClosedD", k + 1)
        return KOrbitId("D", "ClosedDPlus")
    for k, v in enumerate(vs):
        if not v.is_basis:
            return KOrbitId("B", "NonClosedB", k)
    negatives = sum(1 for v in vs if v.index < 0)
    return KOrbitId("B", "ClosedBPlus" if negatives % 2 == 0 else "ClosedBMinus")


# ---------------------------------------------------------------- monoid rules

NOT_COVERED = None
COMPLEX_STABLE = "ComplexStable"
NON_COMPACT = "NonCompact"


def monoid_symbolic(flag: StandardFlag, root: int):
    """Symbolic action of the simple root alpha_root of g on a standard flag.

    Returns (new flag, case) when the rules for the flag's K-orbit cover the
    root, else NOT_COVERED.
    """
    q = korbit_symbolic(flag)
    rule = {"A": _monoid_A, "D": _monoid_D, "B": _monoid_B}[flag.family]
    return rule(flag, q, root)


def _monoid_A(F: StandardFlag, q: KOrbitId, p: int):
    n, vs = F.size, F.vectors
    idx = lambda k: vs[k - 1].index
    en = basis(n)
    if q.tag == "ClosedA":
        i = q.i
        if p == i - 1:
            return F.replace(i - 1, FlagVector("hatA", idx(i - 1))), NON_COMPACT
        if p == i and i <= n - 1:
            return F.replace(i, FlagVector("hatA", idx(i + 1)), en), NON_COMPACT
        return NOT_COVERED
    i, j = q.i, q.j
    if p == i - 1 and i >= 2:
        a, b = idx(i - 1), idx(i)
        if a < b:
            return F.replace(i - 1, vs[i - 1], vs[i - 2]), COMPLEX_STABLE
        return F.replace(i - 1, FlagVector("hatA", a)), NON_COMPACT
    if p == j and j <= n - 1:
        k = min(v.index for v in vs[i - 1:j - 1] if v.is_hat)
        nxt = idx(j + 1)
        if nxt > k:
            return F.replace(j, vs[j], vs[j - 1]), COMPLEX_STABLE
        return F.replace(j, FlagVector("hatA", nxt), en), NON_COMPACT
    return NOT_COVERED


def _monoid_D(F: StandardFlag, q: KOrbitId, p: int):
    l, vs = F.size, F.vectors
    if q.tag == "ClosedDPlus":
        if p not in (l - 1, l) or l < 2:
            return NOT_COVERED
        last = vs[-1].index
        if last > 0:
            # an odd number of negative indices puts the flag's maximal isotropic
            # extension in the other ruling, which swaps alpha_{l-1} and alpha_l
            odd = sum(1 for v in vs if v.index < 0) % 2
            to_plus = (p == l - 1) != bool(odd)
            return F.replace(l - 1, basis(l if to_plus else -l)), COMPLEX_STABLE
        return F.replace(l - 1, FlagVector("hatD", -last)), NON_COMPACT
    i = q.i
    if p != i - 1 or i < 2:
        return NOT_COVERED
    prev, cur = vs[i - 2], vs[i - 1]
    jp = prev.index
    if cur.is_basis:
        if jp > 0:
            return F.replace(i - 1, cur, prev), COMPLEX_STABLE
        kind = "tildeD" if cur.index == l else "hatD"
        return F.replace(i - 1, FlagVector(kind, -jp)), NON_COMPACT
    if jp > 0 or -jp > cur.index:
        return F.replace(i - 1, cur, prev), COMPLEX_STABLE
    return F.replace(i - 1, FlagVector(cur.kind, -jp)), NON_COMPACT


def _monoid_B(F: StandardFlag, q: KOrbitId, p: int):
    l, vs = F.size, F.vectors
    if q.tag in ("ClosedBPlus", "ClosedBMinus"):
        if p != l:
            return NOT_COVERED
        return F.replace(l, FlagVector("hat1", abs(vs[-1].index))), NON_COMPACT
    i = q.i
    if p != i or i < 1:
        return NOT_COVERED
    prev, cur = vs[i - 1], vs[i]
    jp = prev.index
    if jp > 0 or -jp > cur.index:
        return F.replace(i, cur, prev), COMPLEX_STABLE
    a = cur.index if cur.kind == "hat1" else cur.aux
    return F.replace(i, FlagVector("hat2", -jp, a)), NON_COMPACT
