import numpy as np
import pytest

from mcn.matching import hopcroft_karp


def kuhn_matching_size(adj, num_right):
    """Oracle: simple augmenting-path matching, independent of Hopcroft-Karp."""
    match_r = [-1] * num_right

    def try_augment(u, seen):
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if match_r[v] < 0 or try_augment(match_r[v], seen):
                match_r[v] = u
                return True
        return False

    return sum(try_augment(u, set()) for u in range(len(adj)))


def random_bipartite(rng, num_left, num_right, density):
    return [
        sorted(np.nonzero(rng.random(num_right) < density)[0].tolist())
        for _ in range(num_left)
    ]


@pytest.mark.parametrize("seed", range(20))
def test_matches_oracle_on_random_graphs(seed):
    rng = np.random.default_rng(seed)
    nl = int(rng.integers(1, 40))
    nr = int(rng.integers(1, 40))
    adj = random_bipartite(rng, nl, nr, float(rng.uniform(0.02, 0.5)))
    match_l, match_r = hopcroft_karp(adj, nr)
    size = sum(1 for v in match_l if v >= 0)
    assert size == kuhn_matching_size(adj, nr)
    # consistency of the two sides
    assert size == sum(1 for u in match_r if u >= 0)
    for u, v in enumerate(match_l):
        if v >= 0:
            assert v in adj[u]
            assert match_r[v] == u


def test_no_edges():
    assert hopcroft_karp([[], [], []], 3) == ([-1, -1, -1], [-1, -1, -1])


def test_perfect_matching_on_cycle():
    adj = [[1], [2], [0]]
    match_l, match_r = hopcroft_karp(adj, 3)
    assert match_l == [1, 2, 0]
    assert match_r == [2, 0, 1]


def test_chain_leaves_one_side_unmatched():
    # path 0 -> 1 -> 2 -> 3 in bipartite form: left i joins right i+1
    adj = [[1], [2], [3], []]
    match_l, match_r = hopcroft_karp(adj, 4)
    assert sum(1 for v in match_l if v >= 0) == 3
    assert match_r[0] == -1  # the chain root stays unmatched on the in-side


def test_deterministic():
    rng = np.random.default_rng(123)
    adj = random_bipartite(rng, 60, 60, 0.1)
    first = hopcroft_karp(adj, 60)
    second = hopcroft_karp(adj, 60)
    assert first == second
