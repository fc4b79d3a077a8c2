"""Maximum matching and the deficiency formula.

The matching number alpha'(G) comes from a greedy seed plus augmenting-path
search with blossom contraction. Its correctness is gated by the exhaustive
cross-check against the deficiency formula
alpha'(G) = 1/2 min over S of (|G| + |S| - o(G-S)),
whose minimizer is found by scanning every vertex subset.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .graphs import Graph

#: Largest order accepted by the exhaustive subset scan.
SUBSET_SCAN_LIMIT = 20


@dataclass(frozen=True)
class Matching:
    """Pairwise disjoint edges of a host graph."""

    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class DeficiencyCertificate:
    """A minimizing set S with its odd-component count and the formula value."""

    witness_set: tuple[int, ...]
    odd_components: int
    value: int


def max_matching(g: Graph) -> Matching:
    """A maximum matching of g."""
    pairs = _kernels.max_matching(g.n, g.adj)
    return Matching(tuple(pairs))


def matching_number(g: Graph) -> int:
    return len(_kernels.max_matching(g.n, g.adj))


def berge_tutte_min(g: Graph, threshold: int = SUBSET_SCAN_LIMIT) -> DeficiencyCertificate:
    """Minimize (|G| + |S| - o(G-S)) / 2 over all vertex subsets S.

    Exhaustive over 2^n subsets; ties resolve to the smallest subset mask.
    Orders above `threshold` are rejected.
    """
    if g.n > threshold:
        raise ValueError(f"order {g.n} over subset-scan threshold {threshold}")
    mask, odd, value = _kernels.berge_tutte_scan(g.n, g.adj)
    verts = []
    m = mask
    while m:
        low = m & -m
        verts.append(low.bit_length() - 1)
        m ^= low
    return DeficiencyCertificate(tuple(verts), odd, value)


def verify_berge_tutte(g: Graph, threshold: int = SUBSET_SCAN_LIMIT) -> bool:
    """True iff the matching number equals the deficiency-formula minimum,
    both sides computed independently."""
    return matching_number(g) == berge_tutte_min(g, threshold).value
