"""Immutable sparse directed graphs with natural-number node labels."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from typing import IO, Union


class Digraph:
    """A simple directed graph stored as sorted successor lists.

    Node labels are positive integers and need not be contiguous; they are
    never re-indexed. Instances are immutable after construction, so a graph
    may be shared freely between readers; derived graphs (induced subgraphs)
    are new instances. Self-loops and duplicate edges are rejected.
    """

    __slots__ = ("_nodes", "_node_set", "_succ", "_num_edges")

    def __init__(self, successors: Mapping[int, Iterable[int]]):
        nodes = sorted(successors)
        for m in nodes:
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"node labels must be positive integers, got {m!r}")
        node_set = frozenset(nodes)
        succ: dict[int, tuple[int, ...]] = {}
        num_edges = 0
        for m in nodes:
            targets = tuple(successors[m])
            prev = 0
            for j in targets:
                if j not in node_set:
                    raise ValueError(f"edge {m}->{j} points outside the node set")
                if j == m:
                    raise ValueError(f"self-loop on node {m}")
                if j <= prev:
                    raise ValueError(f"successor list of node {m} is not strictly increasing")
                prev = j
            succ[m] = targets
            num_edges += len(targets)
        self._nodes = tuple(nodes)
        self._node_set = node_set
        self._succ = succ
        self._num_edges = num_edges

    @classmethod
    def from_edges(cls, nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> "Digraph":
        succ: dict[int, list[int]] = {m: [] for m in nodes}
        for i, j in edges:
            if i not in succ:
                raise ValueError(f"edge {i}->{j} starts outside the node set")
            succ[i].append(j)
        return cls({m: sorted(ts) for m, ts in succ.items()})

    @property
    def nodes(self) -> tuple[int, ...]:
        return self._nodes

    @property
    def num_nodes(self) -> int:
        return len(self._nodes)

    @property
    def num_edges(self) -> int:
        return self._num_edges

    def __contains__(self, m: int) -> bool:
        return m in self._node_set

    def __len__(self) -> int:
        return len(self._nodes)

    def successors(self, m: int) -> tuple[int, ...]:
        try:
            return self._succ[m]
        except KeyError:
            raise KeyError(f"node {m} is not in the graph") from None

    def out_degree(self, m: int) -> int:
        return len(self.successors(m))

    def edges(self):
        """Yield edges as (i, j) pairs in ascending lexicographic order."""
        for m in self._nodes:
            for j in self._succ[m]:
                yield m, j

    def subgraph(self, keep: Iterable[int]) -> "Digraph":
        """Induced subgraph on the given node labels."""
        keep_set = frozenset(keep)
        unknown = keep_set - self._node_set
        if unknown:
            raise ValueError(f"nodes {sorted(unknown)[:5]} are not in the graph")
        return Digraph(
            {m: tuple(j for j in self._succ[m] if j in keep_set) for m in keep_set}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._succ == other._succ

    def __repr__(self) -> str:
        return f"Digraph(nodes={self.num_nodes}, edges={self.num_edges})"


# --- edge-list file format ---------------------------------------------------
#
# One edge per line, "i<TAB>j", ascending by (i, j). An optional structured
# header line records how the node universe was generated so that isolated
# nodes survive a round trip:
#   "# mcn r=<r> n=<N>"              nodes are r+1 .. N
#   "# sf gamma=<g> n=<N> seed=<s>"  nodes are 1 .. N

_MCN_HEADER = re.compile(r"^# mcn r=(\d+) n=(\d+)\s*$")
_SF_HEADER = re.compile(r"^# sf gamma=(\S+) n=(\d+) seed=(\d+)\s*$")

FileOrPath = Union[str, "IO[str]"]


def layer_header(r: int, n: int) -> str:
    return f"# mcn r={r} n={n}"


def sf_header(gamma: float, n: int, seed: int) -> str:
    return f"# sf gamma={gamma:g} n={n} seed={seed}"


def write_edge_list(g: Digraph, file: FileOrPath, header: str | None = None) -> None:
    """Write the graph in the tab-separated edge-list format."""
    if hasattr(file, "write"):
        _write_edge_list(g, file, header)  # type: ignore[arg-type]
    else:
        with open(file, "w", encoding="utf-8") as fh:
            _write_edge_list(g, fh, header)


def _write_edge_list(g: Digraph, fh: IO[str], header: str | None) -> None:
    if header is not None:
        fh.write(header + "\n")
    for i, j in g.edges():
        fh.write(f"{i}\t{j}\n")


def read_edge_list(file: FileOrPath) -> Digraph:
    """Read a graph written by :func:`write_edge_list`.

    A recognised header line reconstructs the full node universe, including
    isolated nodes; without one, the node set is what the edges mention.
    """
    if hasattr(file, "read"):
        return _read_edge_list(file)  # type: ignore[arg-type]
    with open(file, "r", encoding="utf-8") as fh:
        return _read_edge_list(fh)


def _read_edge_list(fh: IO[str]) -> Digraph:
    nodes: set[int] = set()
    edges: list[tuple[int, int]] = []
    first = True
    for line in fh:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if first:
                m = _MCN_HEADER.match(line)
                if m:
                    r, n = int(m.group(1)), int(m.group(2))
                    nodes.update(range(r + 1, n + 1))
                else:
                    m = _SF_HEADER.match(line)
                    if m:
                        nodes.update(range(1, int(m.group(2)) + 1))
            first = False
            continue
        first = False
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"malformed edge-list line: {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"malformed edge-list line: {line!r}") from None
        nodes.add(i)
        nodes.add(j)
        edges.append((i, j))
    return Digraph.from_edges(nodes, edges)
