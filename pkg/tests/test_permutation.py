import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grounded.graph import max_clique_bruteforce
from grounded.permutation import (PermutationInstance, VEBTree, longest_decreasing_subsequence,
                                  longest_decreasing_veb, longest_increasing_length,
                                  perm_adjacent, perm_max_clique)

perms = st.integers(0, 40).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def instance(positions_b):
    """order_a is the identity on 1..n; element i sits at positions_b[i-1] in order_b."""
    n = len(positions_b)
    elems = tuple(range(1, n + 1))
    return PermutationInstance(elems, {e: e for e in elems}, dict(zip(elems, positions_b)))


def best_by_subsets(inst):
    elems = list(inst.elements)
    for k in range(len(elems), 0, -1):
        for s in combinations(elems, k):
            if all(perm_adjacent(inst, a, b) for a, b in combinations(s, 2)):
                return k
    return 0


def test_examples():
    assert perm_max_clique(instance([3, 2, 1])).members == {1, 2, 3}
    assert perm_max_clique(instance([1, 2, 3])).size == 1
    inst = instance([3, 1, 4, 2])
    assert perm_max_clique(inst).size == 2 == best_by_subsets(inst)
    assert perm_max_clique(instance([])).size == 0


def test_adjacency_examples():
    rev, ident = instance([3, 2, 1]), instance([1, 2, 3])
    for a, b in combinations((1, 2, 3), 2):
        assert perm_adjacent(rev, a, b)
        assert not perm_adjacent(ident, a, b)
    with pytest.raises(ValueError):
        perm_adjacent(rev, 1, 1)


def test_rejects_non_bijections():
    with pytest.raises(ValueError):
        PermutationInstance((1, 2), {1: 1, 2: 1}, {1: 1, 2: 2})
    with pytest.raises(ValueError):
        PermutationInstance((1, 2), {1: 1, 2: 2}, {1: 1, 3: 2})


@given(perms)
def test_adjacency_is_sign_test(pos):
    inst = instance(pos)
    for a, b in combinations(inst.elements, 2):
        assert perm_adjacent(inst, a, b) == ((a < b) != (pos[a - 1] < pos[b - 1]))


@given(perms)
def test_clique_matches_bruteforce_and_certifies(pos):
    inst = instance(pos)
    c = perm_max_clique(inst)
    assert c.size == max_clique_bruteforce(inst.graph()).size
    assert all(perm_adjacent(inst, a, b) for a, b in combinations(c.members, 2))


@given(perms)
def test_three_implementations_agree(pos):
    lds = longest_decreasing_subsequence(pos)
    assert all(pos[i] > pos[j] for i, j in zip(lds, lds[1:]))
    assert len(lds) == longest_increasing_length([-v for v in pos])
    veb = longest_decreasing_veb(pos)
    assert len(veb) == len(lds)
    assert all(pos[i] > pos[j] for i, j in zip(veb, veb[1:]))
    assert perm_max_clique(instance(pos), "veb").size == len(lds)


@given(st.permutations(list(range(1, 9))))
def test_small_instances_match_subset_scan(pos):
    assert perm_max_clique(instance(pos)).size == best_by_subsets(instance(pos))


def test_veb_against_sorted_set():
    rng = random.Random(3)
    u = 300
    tree, ref = VEBTree(u), set()
    for _ in range(4000):
        x = rng.randrange(u)
        op = rng.random()
        if op < 0.45:
            tree.insert(x)
            ref.add(x)
        elif op < 0.7:
            tree.delete(x)
            ref.discard(x)
        assert (x in tree) == (x in ref)
        above = [v for v in ref if v > x]
        below = [v for v in ref if v < x]
        assert tree.successor(x) == (min(above) if above else None)
        assert tree.predecessor(x) == (max(below) if below else None)
        assert tree.min == (min(ref) if ref else None)
        assert tree.max == (max(ref) if ref else None)


def test_unknown_method():
    with pytest.raises(ValueError):
        perm_max_clique(instance([1]), "bogus")
