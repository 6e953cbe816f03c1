"""Partitions into lists (PILs), signed variants (SPILs) and their counts.

A PIL of a finite set is a set of lists whose supports partition the set.
A signed list carries signs on its entries subject to two rules: the last
entry is non-negative, and 0 (when present) is last.  B_{n-1}-orbits on the
flag variety of gl(n), so(2l), so(2l+1) are counted by PIL(n), SPIL(l) and
SPIL(l u {0}) respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .exact_algebra import DomainError

SignedList = Tuple[int, ...]


def _canon(lists: Iterable[Sequence[int]]) -> Tuple[SignedList, ...]:
    return tuple(sorted(tuple(l) for l in lists))


@dataclass(frozen=True)
class Pil:
    """A partition of a set of positive integers into lists."""

    lists: Tuple[SignedList, ...]

    def __init__(self, lists: Iterable[Sequence[int]]):
        object.__setattr__(self, "lists", _canon(lists))

    @property
    def support(self) -> frozenset:
        return frozenset(x for l in self.lists for x in l)

    def to_json(self) -> List[List[int]]:
        return [list(l) for l in self.lists]

    def __str__(self):
        return "{" + ",".join("(" + ",".join(map(str, l)) + ")" for l in self.lists) + "}"


@dataclass(frozen=True)
class Spil:
    """A partition into signed lists, optionally including the element 0."""

    lists: Tuple[SignedList, ...]
    with_zero: bool

    def __init__(self, lists: Iterable[Sequence[int]], with_zero: bool = None):
        lists = _canon(lists)
        has_zero = any(0 in l for l in lists)
        if with_zero is None:
            with_zero = has_zero
        object.__setattr__(self, "lists", lists)
        object.__setattr__(self, "with_zero", with_zero)

    @property
    def support(self) -> frozenset:
        return frozenset(abs(x) for l in self.lists for x in l)

    def check(self) -> None:
        """Raise DomainError unless the signed-list conditions hold."""
        seen = set()
        zero_count = 0
        for l in self.lists:
            if not l:
                raise DomainError("empty list in SPIL")
            if l[-1] < 0:
                raise DomainError(f"last entry of {l} is negative")
            if 0 in l[:-1]:
                raise DomainError(f"0 is not last in {l}")
            for x in l:
                if abs(x) in seen:
                    raise DomainError(f"repeated entry {abs(x)}")
                seen.add(abs(x))
            zero_count += l[-1] == 0
        if zero_count != int(self.with_zero):
            raise DomainError("zero presence does not match with_zero")

    def to_json(self) -> List[List[int]]:
        return [list(l) for l in self.lists]

    def __str__(self):
        return "{" + ",".join("(" + ",".join(map(str, l)) + ")" for l in self.lists) + "}"


# ------------------------------------------------------------------ enumeration


def _list_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    """All partitions of ``items`` into lists, each produced exactly once."""
    if not items:
        yield []
        return
    *rest, x = items
    for part in _list_partitions(rest):
        for i, l in enumerate(part):
            for pos in range(len(l) + 1):
                yield part[:i] + [l[:pos] + [x] + l[pos:]] + part[i + 1:]
        yield part + [[x]]


def enumerate_pil(ground: Iterable[int]) -> List[Pil]:
    ground = sorted(set(ground))
    if any(x <= 0 for x in ground) and ground != [0]:
        raise DomainError("PIL ground set must be positive integers")
    return sorted((Pil(p) for p in _list_partitions(ground)), key=lambda p: p.lists)


def _signings(l: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Sign every entry except a final one that must stay non-negative."""
    head, last = l[:-1], l[-1]
    for mask in range(1 << len(head)):
        yield tuple(-x if mask >> k & 1 else x for k, x in enumerate(head)) + (last,)


def _signed_versions(part: List[List[int]]) -> Iterator[List[Tuple[int, ...]]]:
    if not part:
        yield []
        return
    first, *rest = part
    for s in _signings(first):
        for tail in _signed_versions(rest):
            yield [s] + tail


def spils_of(ground: Iterable[int], with_zero: bool) -> List[Spil]:
    """All SPILs of an explicit positive ground set, optionally with 0 adjoined."""
    ground = sorted(set(ground))
    out = []
    for part in _list_partitions(ground):
        shapes = [part]
        if with_zero:
            shapes = [part + [[0]]] + [part[:i] + [l + [0]] + part[i + 1:]
                                        for i, l in enumerate(part)]
        for shape in shapes:
            for signed in _signed_versions(shape):
                out.append(Spil(signed, with_zero))
    return sorted(out, key=lambda s: s.lists)


def enumerate_spil(ell: int, with_zero: bool) -> List[Spil]:
    if ell < 0:
        raise DomainError("ell must be non-negative")
    return spils_of(range(1, ell + 1), with_zero)


def enumerate_signed_lists(i: int, ell: int) -> List[SignedList]:
    """SLI(i, l): sequences of i distinct elements of 1..l with free signs."""
    if not 0 <= i <= ell:
        raise DomainError("need 0 <= i <= ell")
    from itertools import permutations, product

    out = []
    for p in permutations(range(1, ell + 1), i):
        for signs in product((1, -1), repeat=i):
            out.append(tuple(s * x for s, x in zip(signs, p)))
    return sorted(out)


# ------------------------------------------------------------------- counting


def lah(n: int, k: int) -> int:
    """Number of partitions of an n-set into k lists."""
    if not 1 <= k <= n:
        raise DomainError(f"lah({n},{k}) out of range")
    return factorial(n) // factorial(k) * comb(n - 1, k - 1)


def _formula(family: str, n: int) -> int:
    if family == "A":
        return sum(lah(n, k) for k in range(1, n + 1)) if n else 1
    if family == "D":
        return sum(2 ** (n - k) * lah(n, k) for k in range(1, n + 1)) if n else 1
    if family == "B":
        return sum(factorial(n) // factorial(k - 1) * comb(n, k - 1) * 2 ** (n - k + 1)
                   for k in range(1, n + 2))
    raise DomainError(f"unknown family {family!r}")


def _recursion(family: str, n: int) -> int:
    if family == "A":
        f = [1, 1]
        step = lambda m: (2 * m + 1) * f[m] - (m * m - m) * f[m - 1]
    elif family == "D":
        f = [1, 1]
        step = lambda m: (1 + 4 * m) * f[m] - 4 * (m * m - m) * f[m - 1]
    elif family == "B":
        f = [1, 3]
        step = lambda m: (3 + 4 * m) * f[m] - 4 * m * m * f[m - 1]
    else:
        raise DomainError(f"unknown family {family!r}")
    while len(f) <= n:
        f.append(step(len(f) - 1))
    return f[n]


# truncated power series over exact rationals


def _series_mul(f: List[Fraction], g: List[Fraction], order: int) -> List[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(f[:order + 1]):
        if a:
            for j, b in enumerate(g[:order + 1 - i]):
                out[i + j] += a * b
    return out


def _series_exp(g: List[Fraction], order: int) -> List[Fraction]:
    """exp(g) for g(0) = 0 via f' = g' f."""
    if g and g[0]:
        raise DomainError("exp needs a series without constant term")
    f = [Fraction(1)] + [Fraction(0)] * order
    for m in range(1, order + 1):
        f[m] = sum((k * g[k] * f[m - k] for k in range(1, m + 1) if k < len(g)),
                   Fraction(0)) / m
    return f


def _geometric(c: int, order: int) -> List[Fraction]:
    """1 / (1 - c x)."""
    return [Fraction(c) ** k for k in range(order + 1)]


def egf_coefficients(family: str, order: int) -> List[Fraction]:
    """Coefficients of the family's exponential generating function."""
    if family == "A":
        inner = [Fraction(0)] + _geometric(1, order - 1) if order else [Fraction(0)]
        return _series_exp(inner, order)
    if family in ("D", "B"):
        inner = [Fraction(0)] + _geometric(2, order - 1) if order else [Fraction(0)]
        f = _series_exp(inner, order)
        if family == "B":
            f = _series_mul(f, _geometric(2, order), order)
        return f
    raise DomainError(f"unknown family {family!r}")


def _egf(family: str, n: int) -> int:
    c = egf_coefficients(family, n)[n] * factorial(n)
    if c.denominator != 1:
        raise DomainError("EGF coefficient is not integral")
    return int(c)


def count_orbits(family: str, n: int, method: str = "formula") -> int:
    """Number of orbits: |PIL(n)| (A), |SPIL(n)| (D), |SPIL(n u {0})| (B)."""
    if family not in ("A", "D", "B"):
        raise DomainError(f"unknown family {family!r}")
    if n < 0:
        raise DomainError("size must be non-negative")
    if method == "formula":
        return _formula(family, n)
    if method == "recursion":
        return _recursion(family, n)
    if method == "egf":
        return _egf(family, n)
    if method == "enumerate":
        if family == "A":
            return len(enumerate_pil(range(1, n + 1))) if n else 1
        return len(enumerate_spil(n, family == "B"))
    raise DomainError(f"unknown method {method!r}")


@dataclass(frozen=True)
class SeriesTable:
    family: str
    values: Tuple[int, ...]

    def __init__(self, family: str, values: Iterable[int]):
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "values", tuple(values))


def series(family: str, length: int, method: str = "formula") -> SeriesTable:
    return SeriesTable(family, [count_orbits(family, n, method) for n in range(length)])


def lah_transform(seq: SeriesTable) -> SeriesTable:
    """b_n = sum_k L(n,k) a_k for n >= 1, b_0 = a_0."""
    a = seq.values
    out = [a[0]] if a else []
    for n in range(1, len(a)):
        out.append(sum(lah(n, k) * a[k] for k in range(1, n + 1)))
    return SeriesTable(seq.family, out)


# ------------------------------------------------------------- shift bijection


def shift_bijection(direction: str, sigma: Spil, x: int) -> Spil:
    """The two inverse maps between SPIL(A - {x} u {0}) and SPIL_x(A).

    ``Lambda`` moves the list ending in 0 to a list starting with +-x;
    ``Gamma`` undoes it.
    """
    sigma.check()
    if direction in ("Lambda", "L", "Λ"):
        if not sigma.with_zero or x in sigma.support:
            raise DomainError("Lambda needs a SPIL containing 0 and not x")
        zl = next(l for l in sigma.lists if l[-1] == 0)
        others = [l for l in sigma.lists if l is not zl]
        body = zl[:-1]
        if not body:
            new = (x,)
        else:
            *pre, last = body
            sgn = 1 if last > 0 else -1
            new = (sgn * x, *pre, abs(last))
        return Spil(others + [new], False)
    if direction in ("Gamma", "G", "Γ"):
        if sigma.with_zero:
            raise DomainError("Gamma needs a SPIL without 0")
        head = [l for l in sigma.lists if abs(l[0]) == x]
        if not head:
            raise DomainError(f"no list begins with +-{x}")
        hl = head[0]
        others = [l for l in sigma.lists if l is not hl]
        mu = hl[1:]
        if not mu:
            new = (0,)
        else:
            sgn = 1 if hl[0] > 0 else -1
            new = (*mu[:-1], sgn * mu[-1], 0)
        return Spil(others + [new], True)
    raise DomainError(f"unknown direction {direction!r}")


# ------------------------------------------------------------ block partitions


def block_partition(family: str, size: int) -> Dict[tuple, list]:
    """Split the full enumeration into the blocks used by the counting proofs.

    A: key (i, j) with i <= j; the list containing n has n at position i and
       length n - (j - i).
    B: key i; the list containing 0 has length i + 1.
    D: key i; +-l sits at position i of its list.
    Positions are 1-based.
    """
    blocks: Dict[tuple, list] = {}
    if family == "A":
        n = size
        for p in enumerate_pil(range(1, n + 1)):
            l = next(l for l in p.lists if n in l)
            i = l.index(n) + 1
            j = n - len(l) + i
            blocks.setdefault((i, j), []).append(p)
    elif family == "B":
        for s in enumerate_spil(size, True):
            l = next(l for l in s.lists if l[-1] == 0)
            blocks.setdefault((len(l) - 1,), []).append(s)
    elif family == "D":
        for s in enumerate_spil(size, False):
            l = next(l for l in s.lists if size in l or -size in l)
            i = [abs(x) for x in l].index(size) + 1
            blocks.setdefault((i,), []).append(s)
    else:
        raise DomainError(f"unknown family {family!r}")
    return dict(sorted(blocks.items()))


def block_size_formula(family: str, size: int, key: tuple) -> int:
    """Closed-form size of a block from :func:`block_partition`."""
    if family == "A":
        i, j = key
        return factorial(size - 1) // factorial(j - i) * count_orbits("A", j - i)
    if family == "B":
        (i,) = key
        return 2 ** i * factorial(size) // factorial(size - i) * count_orbits("D", size - i)
    if family == "D":
        (i,) = key
        return (2 ** (i - 1) * factorial(size - 1) // factorial(size - i)
                * count_orbits("B", size - i))
    raise DomainError(f"unknown family {family!r}")
