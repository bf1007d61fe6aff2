import itertools
from math import factorial

import pytest

from conftest import P, all_perms
from flockgraph.conjugacy import are_conjugate
from flockgraph.flocks import (
    all_flocks,
    enumerate_flock,
    flock_of,
    membership,
    ranked_members,
    stem_permutation,
)
from flockgraph.perm import Partition, cyclic_type, format_perm, identity, rank

# canonical stems of S5
EXAMPLE_1 = {
    (5,): "(12345.)",
    (1, 4): "(1.2345.)",
    (2, 3): "(12.345.)",
    (1, 2, 2): "(1.23.45.)",
    (1, 1, 3): "(1.2.345.)",
    (1, 1, 1, 2): "(1.2.3.45.)",
    (1, 1, 1, 1, 1): "(1.2.3.4.5.)",
}


def test_stems_of_s5_match_table():
    got = {f.partition.parts: format_perm(f.stem) for f in all_flocks(5)}
    assert got == EXAMPLE_1


def test_identity_stem():
    assert stem_permutation(Partition((1, 1, 1, 1, 1))) == identity(5)


@pytest.mark.parametrize("n", range(1, 10))
def test_stem_has_flock_type(n):
    for f in all_flocks(n):
        assert cyclic_type(f.stem) == f.partition


@pytest.mark.parametrize(
    "parts, size", [((6,), 120), ((1,) * 6, 1), ((2, 3), 20), ((1, 1, 1, 2), 10)]
)
def test_flock_sizes(parts, size):
    f = flock_of(Partition(parts))
    assert f.size == size
    assert sum(1 for _ in enumerate_flock(f)) == size


def test_flock_of_checks_degree():
    with pytest.raises(ValueError):
        flock_of(Partition((2, 3)), 6)


@pytest.mark.parametrize("n", range(1, 8))
def test_sizes_sum_to_factorial(n):
    assert sum(f.size for f in all_flocks(n)) == factorial(n)


def test_s6_split_into_eleven_flocks():
    flocks = all_flocks(6)
    assert len(flocks) == 11
    seen = set()
    for f in flocks:
        members = list(enumerate_flock(f))
        assert len(members) == len(set(members)) == f.size
        assert all(cyclic_type(m) == f.partition for m in members)
        assert seen.isdisjoint(members)
        seen.update(members)
    assert seen == set(all_perms(6))


def test_enumeration_in_rank_order():
    f = flock_of(Partition((2, 2, 2)))
    ranks = [r for r, _ in ranked_members(f)]
    assert ranks == sorted(ranks)
    assert all(rank(phi) == r for r, phi in ranked_members(f))


def test_singleton_flock():
    f = flock_of(Partition((1, 1, 1)))
    assert list(enumerate_flock(f)) == [identity(3)]


def test_range_partitioned_enumeration():
    f = flock_of(Partition((1, 2, 3)))
    whole = list(ranked_members(f))
    cuts = [0, 100, 333, 500, 720]
    pieces = [m for a, b in zip(cuts, cuts[1:]) for m in ranked_members(f, a, b)]
    assert pieces == whole


def test_membership():
    f = flock_of(Partition((6,)))
    assert membership(f, P("(125634.)"))
    assert not membership(f, P("(15.26.3.4.)"))
    assert P("(125634.)") in f
    e = flock_of(Partition((1,)))
    assert membership(e, identity(1))
    with pytest.raises(ValueError):
        membership(f, identity(5))


def test_enumeration_guard():
    f = flock_of(Partition((13,)))
    with pytest.raises(ValueError):
        next(enumerate_flock(f))


def test_conjugacy_matches_flocks():
    for n in (4, 5, 6):
        flocks = all_flocks(n)
        reps = [list(enumerate_flock(f))[:4] for f in flocks]
        for (i, a), (j, b) in itertools.product(enumerate(reps), repeat=2):
            for phi, psi in itertools.product(a, b):
                assert are_conjugate(phi, psi) == (i == j)


def test_flock_sizes_large_degree():
    # sizes come from the count formula and need no enumeration
    f = flock_of(Partition((20,)))
    assert f.size == factorial(19)
