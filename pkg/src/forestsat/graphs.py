"""Graph values and basic structural queries.

Graphs are simple, undirected, on dense vertex indices ``0..order-1``, with
adjacency stored as one bit mask per vertex so a row fits a machine word.
Graph values are immutable; every operation here is a pure function, and
editing operations return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _kernels

#: Hard order cap: an adjacency row must fit one 64-bit word.
MAX_ORDER = 64


class Graph:
    """Simple undirected graph with bit-mask adjacency rows."""

    __slots__ = ("n", "adj", "_canon")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"order {n} outside 0..{MAX_ORDER}")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for order {n}")
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise ValueError(f"row {v} has bits beyond order {n}")
            if (m >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            rest = m
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                rest ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- basic queries -----------------------------------------------------

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        out = []
        m = self.adj[v]
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1)
            u = v + 1
            while m:
                if m & 1:
                    out.append((v, u))
                m >>= 1
                u += 1
        return out

    # -- editing (returns new graphs) --------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("self-loop")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image under the permutation mapping vertex v to perm[v]."""
        perm = tuple(perm)
        rows = [0] * self.n
        for v in range(self.n):
            m = self.adj[v]
            r = 0
            while m:
                low = m & -m
                r |= 1 << perm[low.bit_length() - 1]
                m ^= low
            rows[perm[v]] = r
        return Graph(self.n, rows)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"<Graph n={self.n} m={self.size}>"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Relabeling-invariant representative: the graph6 string of the
    canonically relabeled graph. Equal forms iff isomorphic graphs."""

    g6: str


def degree_vector(g: Graph) -> list[int]:
    """Degrees in non-increasing order."""
    return sorted((m.bit_count() for m in g.adj), reverse=True)


def components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertex set into maximal connected sets,
    ordered by smallest member."""
    out = []
    for mask in _kernels.components_masks(g.n, g.adj):
        verts = []
        while mask:
            low = mask & -mask
            verts.append(low.bit_length() - 1)
            mask ^= low
        out.append(frozenset(verts))
    return out


def component_masks(g: Graph) -> list[int]:
    """Connected components as vertex bit masks, ordered by lowest bit."""
    return _kernels.components_masks(g.n, g.adj)


def complement_edges(g: Graph) -> list[tuple[int, int]]:
    """Unordered non-adjacent vertex pairs, in lexicographic order."""
    out = []
    for v in range(g.n):
        m = ~g.adj[v] >> (v + 1)
        u = v + 1
        while u < g.n:
            if m & 1:
                out.append((v, u))
            m >>= 1
            u += 1
    return out


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted above g's."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise ValueError(f"combined order {n} exceeds cap {MAX_ORDER}")
    rows = list(g.adj) + [m << g.n for m in h.adj]
    return Graph(n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise ValueError(f"combined order {n} exceeds cap {MAX_ORDER}")
    gmask = (1 << g.n) - 1
    hmask = ((1 << n) - 1) ^ gmask
    rows = [m | hmask for m in g.adj] + [(m << g.n) | gmask for m in h.adj]
    return Graph(n, rows)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    rows, _, _ = _kernels.canon(g.n, g.adj)
    return Graph(g.n, rows)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form of g; cached on the graph value."""
    cached = g._canon
    if cached is None:
        from .graph6 import to_graph6

        cached = CanonicalForm(to_graph6(canonical_graph(g)))
        object.__setattr__(g, "_canon", cached)
    return cached


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Automorphisms discovered by the canonical search. Sound, but not
    guaranteed to generate the full group; use only for pruning."""
    _, _, gens = _kernels.canon(g.n, g.adj)
    return gens
