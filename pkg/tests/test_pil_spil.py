import itertools
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbit_atlas.exact_algebra import DomainError
from orbit_atlas.pil_spil import (Pil, SeriesTable, Spil, block_partition, block_size_formula,
                                  count_orbits, egf_coefficients, enumerate_pil,
                                  enumerate_signed_lists, enumerate_spil, lah, lah_transform,
                                  series, shift_bijection, spils_of)


def brute_lists(ground):
    """Every way to write the ground set as a word and cut it into lists."""
    out = set()
    for word in itertools.permutations(ground):
        for mask in range(1 << max(len(word) - 1, 0)):
            lists, cur = [], [word[0]] if word else []
            for k, x in enumerate(word[1:]):
                if mask >> k & 1:
                    lists.append(tuple(cur))
                    cur = []
                cur.append(x)
            if cur:
                lists.append(tuple(cur))
            out.add(frozenset(lists))
    return out


def brute_spils(ell, with_zero):
    ground = list(range(1, ell + 1)) + ([0] if with_zero else [])
    out = set()
    for lists in brute_lists(ground):
        lists = list(lists)
        if with_zero and any(0 in l[:-1] for l in lists):
            continue
        flat = [x for l in lists for x in l]
        for signs in itertools.product((1, -1), repeat=len(flat)):
            it = iter(signs)
            signed = [tuple(next(it) * x for x in l) for l in lists]
            if any(x == 0 and s < 0 for x, s in zip(flat, signs)):
                continue
            if all(l[-1] >= 0 for l in signed):
                out.add(frozenset(signed))
    return out


@pytest.mark.parametrize("n", range(0, 6))
def test_pil_oracle(n):
    got = {frozenset(p.lists) for p in enumerate_pil(range(1, n + 1))} if n else {frozenset()}
    assert got == brute_lists(list(range(1, n + 1)))


@pytest.mark.parametrize("ell,with_zero", [(l, z) for l in range(0, 4) for z in (False, True)])
def test_spil_oracle(ell, with_zero):
    got = {frozenset(s.lists) for s in enumerate_spil(ell, with_zero)}
    assert got == brute_spils(ell, with_zero)
    for s in enumerate_spil(ell, with_zero):
        s.check()


def test_small_examples():
    assert {p.lists for p in enumerate_pil([1, 2])} == {((1, 2),), ((2, 1),), ((1,), (2,))}
    assert len(enumerate_pil([1, 2, 3])) == 13
    five = {s.lists for s in enumerate_spil(2, False)}
    assert five == {((-1, 2),), ((1, 2),), ((-2, 1),), ((2, 1),), ((1,), (2,))}
    assert len(enumerate_spil(2, True)) == 17
    assert len(enumerate_spil(4, True)) == 1473


def test_count_examples():
    for m in ("formula", "enumerate", "recursion", "egf"):
        assert count_orbits("A", 3, m) == 13
    assert count_orbits("D", 3, "formula") == 4 * 6 + 2 * 6 + 1
    assert count_orbits("B", 3, "recursion") == 11 * 17 - 16 * 3
    with pytest.raises(DomainError):
        count_orbits("C", 3)
    with pytest.raises(DomainError):
        count_orbits("A", 3, "guess")


@pytest.mark.parametrize("family,top", [("A", 7), ("D", 5), ("B", 5)])
def test_methods_agree(family, top):
    for n in range(top + 1):
        vals = {count_orbits(family, n, m) for m in ("formula", "recursion", "egf")}
        if n <= 5:
            vals.add(count_orbits(family, n, "enumerate"))
        assert len(vals) == 1


def test_egf_is_exact():
    c = egf_coefficients("A", 4)
    assert [x * factorial(k) for k, x in enumerate(c)] == [1, 1, 3, 13, 73]


def test_lah():
    assert all(lah(n, n) == 1 for n in range(1, 7))
    assert lah(3, 2) == 6 and lah(4, 1) == 24
    # brute force: partitions of {1..4} into k lists
    by_k = {}
    for p in brute_lists([1, 2, 3, 4]):
        by_k[len(p)] = by_k.get(len(p), 0) + 1
    assert by_k == {k: lah(4, k) for k in range(1, 5)}
    with pytest.raises(DomainError):
        lah(2, 3)


def test_lah_transform():
    assert lah_transform(SeriesTable("A", [1] * 6)).values == (1, 1, 3, 13, 73, 501)
    assert lah_transform(SeriesTable("A", [1, 1, 3, 13])).values[3] == 37
    assert lah_transform(SeriesTable("A", [0] * 5)).values == (0,) * 5
    assert lah_transform(series("A", 6)).values == series("D", 6).values


def test_shift_examples():
    assert shift_bijection("L", Spil([(-2, 0)]), 1) == Spil([(-1, 2)])
    assert shift_bijection("L", Spil([(0,), (2,)]), 1) == Spil([(1,), (2,)])
    for s in spils_of([2], True):
        assert shift_bijection("G", shift_bijection("L", s, 1), 1) == s
    with pytest.raises(DomainError):
        shift_bijection("L", Spil([(1,), (2,)]), 1)
    with pytest.raises(DomainError):
        shift_bijection("G", Spil([(2, 1)]), 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.data())
def test_shift_roundtrip(k, data):
    x = data.draw(st.integers(1, k))
    rest = [a for a in range(1, k + 1) if a != x]
    s = data.draw(st.sampled_from(spils_of(rest, True)))
    t = shift_bijection("L", s, x)
    t.check()
    assert any(abs(l[0]) == x for l in t.lists)
    assert shift_bijection("G", t, x) == s


def test_signed_lists():
    assert enumerate_signed_lists(1, 2) == sorted([(1,), (-1,), (2,), (-2,)])
    assert enumerate_signed_lists(0, 3) == [()]
    assert len(enumerate_signed_lists(2, 3)) == 24


@pytest.mark.parametrize("family,size", [("A", 3), ("A", 4), ("A", 5), ("B", 2), ("B", 3),
                                         ("B", 4), ("D", 2), ("D", 3), ("D", 4)])
def test_blocks(family, size):
    blocks = block_partition(family, size)
    total = sum(len(v) for v in blocks.values())
    assert total == count_orbits(family, size)
    flat = [m for v in blocks.values() for m in v]
    assert len(set(flat)) == len(flat)
    for key, members in blocks.items():
        assert len(members) == block_size_formula(family, size, key)


def test_block_examples():
    blocks = block_partition("A", 3)
    assert len(blocks[(1, 3)]) == 3
    assert len(block_partition("B", 2)[(2,)]) == 8


def test_json():
    p = Pil([(2,), (1, 3)])
    assert Pil(p.to_json()) == p
    s = Spil([(-1, 2), (0,)])
    assert Spil(s.to_json()) == s and s.with_zero
