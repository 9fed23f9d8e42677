"""Congruence layers over the natural numbers and their degree statistics.

The layer with remainder r and ceiling N is the directed graph on the
integers r+1, ..., N with an edge i -> j whenever j % i == r (and, for
r = 0, j != i). Layers with different remainders share one node universe,
which makes the family a multiplex network keyed by remainder.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import IO, Mapping

from .digraph import Digraph

EULER_GAMMA = 0.5772156649015329


@dataclass(frozen=True)
class LayerSpec:
    """Identifies one congruence layer: remainder ``r``, largest label ``n``."""

    r: int
    n: int

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError(f"remainder must be non-negative, got {self.r}")
        if self.n < self.r + 2:
            raise ValueError(
                f"ceiling n={self.n} too small for r={self.r}; need n >= r + 2"
            )

    @property
    def node_count(self) -> int:
        return self.n - self.r

    def nodes(self) -> range:
        return range(self.r + 1, self.n + 1)


def build_layer(spec: LayerSpec) -> Digraph:
    """Materialize the congruence layer G(r, N).

    Node m links to m+r, 2m+r, ... for r > 0, and to its proper multiples
    2m, 3m, ... for r = 0, all truncated at the ceiling. Successor lists are
    stored eagerly; the layer has ~N ln N edges, fine at desk scale, and the
    controllability and attack analyses traverse them repeatedly.
    """
    r, n = spec.r, spec.n
    succ: dict[int, range] = {}
    for m in spec.nodes():
        start = m + r if r > 0 else 2 * m
        succ[m] = range(start, n + 1, m)
    return Digraph(succ)


@dataclass(frozen=True)
class MultiplexNetwork:
    """A family of congruence layers over one node universe, keyed by remainder."""

    n: int
    layers: Mapping[int, Digraph]

    @classmethod
    def build(cls, remainders: list[int], n: int) -> "MultiplexNetwork":
        if len(set(remainders)) != len(remainders):
            raise ValueError("remainders must be unique")
        return cls(n=n, layers={r: build_layer(LayerSpec(r, n)) for r in remainders})

    def layer(self, r: int) -> Digraph:
        return self.layers[r]


@dataclass(frozen=True)
class Chain:
    """An arithmetic progression of node labels linked consecutively in a layer."""

    members: tuple[int, ...]
    step: int

    @property
    def root(self) -> int:
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)


def extract_chains(spec: LayerSpec) -> list[Chain]:
    """Decompose a layer with r > 0 into its arithmetic-progression chains.

    The node set splits into the progressions i + r, i + 2r, ... for
    i = 1..r; consecutive members differ by r and are therefore layer edges.
    For n >= 2r every progression is non-empty and exactly r chains come
    back, rooted at r+1, ..., 2r; below that, empty progressions are
    dropped. The r = 0 layer has no such decomposition and is rejected.
    """
    if spec.r == 0:
        raise ValueError("the divisibility layer (r=0) has no chain decomposition")
    r, n = spec.r, spec.n
    chains = []
    for i in range(1, r + 1):
        members = tuple(range(i + r, n + 1, r))
        if members:
            chains.append(Chain(members=members, step=r))
    return chains


@dataclass(frozen=True)
class DegreeHistogram:
    """Out-degree counts over every node of a graph."""

    counts: Mapping[int, int]
    total_nodes: int

    def empirical_p(self, k: int) -> float:
        return self.counts.get(k, 0) / self.total_nodes

    @property
    def degree_sum(self) -> int:
        return sum(k * c for k, c in self.counts.items())


def empirical_distribution(g: Digraph) -> DegreeHistogram:
    """Histogram of out-degrees, normalized over all nodes (sinks included)."""
    counts = Counter(g.out_degree(m) for m in g.nodes)
    return DegreeHistogram(
        counts={k: counts[k] for k in sorted(counts)}, total_nodes=g.num_nodes
    )


def theoretical_pk(r: int, k: int) -> float:
    """Limiting out-degree probability P(k) of an infinite layer.

    For r > 0 the fraction of nodes with out-degree k is
    1 / (k (k+1)), defined for k >= 1; for the divisibility layer (r = 0)
    it is 1 / ((k+1) (k+2)), defined for k >= 0. Both decay as 1/k^2, so
    every layer is scale-free with exponent 2.
    """
    if r < 0:
        raise ValueError(f"remainder must be non-negative, got {r}")
    if r > 0:
        if k < 1:
            raise ValueError(f"degree law for r>0 layers is defined for k >= 1, got k={k}")
        return 1.0 / (k * (k + 1))
    if k < 0:
        raise ValueError(f"degree must be non-negative, got k={k}")
    return 1.0 / ((k + 1) * (k + 2))


def average_degree(g: Digraph) -> float:
    """Exact mean out-degree: integer edge total divided by node count."""
    if g.num_nodes == 0:
        raise ValueError("graph has no nodes")
    return g.num_edges / g.num_nodes


def theoretical_average_degree(spec: LayerSpec) -> float:
    """Asymptotic mean out-degree of a layer.

    With C the Euler constant and s = n - r nodes:

        r > 0:  ln(s) + 2C - 1 - (sum_{i=1..r} floor(s / i)) / s
        r = 0:  ln(n) + 2C - 2

    Both come from the Dirichlet estimate sum_{i<=s} floor(s/i)
    ~ s ln(s) + (2C - 1) s; the r > 0 correction removes the terms of the
    first r divisors, which fall outside the node range.
    """
    r, n = spec.r, spec.n
    if r == 0:
        return math.log(n) + 2.0 * EULER_GAMMA - 2.0
    size = n - r
    correction = sum(size // i for i in range(1, r + 1)) / size
    return math.log(size) + 2.0 * EULER_GAMMA - 1.0 - correction


HISTOGRAM_CSV_HEADER = "k,count,empirical_p,theoretical_p"


def write_histogram_csv(hist: DegreeHistogram, r: int, fh: IO[str]) -> None:
    """Write observed degrees as CSV rows ``k,count,empirical_p,theoretical_p``.

    Only degrees that occur get a row. For r > 0 the k = 0 row carries a
    theoretical value of 0.0: the limiting distribution puts no mass on
    sinks (their fraction r / (n - r) vanishes as n grows).
    """
    fh.write(HISTOGRAM_CSV_HEADER + "\n")
    for k in sorted(hist.counts):
        if r > 0 and k == 0:
            theo = 0.0
        else:
            theo = theoretical_pk(r, k)
        fh.write(f"{k},{hist.counts[k]},{hist.empirical_p(k)!r},{theo!r}\n")
