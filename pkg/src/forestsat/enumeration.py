"""Isomorph-free exhaustive generation of small graphs.

Canonical augmentation: a graph on k+1 vertices is kept only when deleting
its new vertex yields the same isomorphism class as deleting the vertex in
the last canonical position, so every class has exactly one generating
parent; a transient per-parent set removes duplicate extensions. No global
seen-set is needed, the generation tree partitions by prefix, and the
stream order is a fixed depth-first order.
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import get_context
from typing import Callable, Iterable, Iterator

from . import _kernels
from .graph6 import Graph6Error, parse_graph6
from .graphs import Graph

#: Largest order the built-in enumerator accepts.
MAX_BUILTIN_ORDER = 10


@dataclass(frozen=True)
class EnumFilter:
    """Stream filters. `max_edges` prunes during generation (monotone);
    `min_degree` and `connected_only` apply to emitted graphs only."""

    max_edges: int | None = None
    min_degree: int | None = None
    connected_only: bool = False


def _passes_final(g: Graph, filt: EnumFilter) -> bool:
    if filt.min_degree is not None:
        for m in g.adj:
            if m.bit_count() < filt.min_degree:
                return False
    if filt.connected_only and len(_kernels.components_masks(g.n, g.adj)) > 1:
        return False
    return True


# A record is (k, adj, rows, gens): a k-vertex graph, its canonical rows and
# the automorphisms its canonical search discovered (used only to skip
# extension masks in the same orbit; completeness does not depend on them).


def _seed_record():
    rows, _, gens = _kernels.canon(1, (0,))
    return (1, (0,), rows, gens)


def _mask_orbit_reps(k: int, gens) -> list[int]:
    """Minimal representative of each orbit of extension masks under the
    parent's discovered automorphisms, ascending."""
    total = 1 << k
    if not gens:
        return list(range(total))
    seen = bytearray(total)
    reps = []
    for s in range(total):
        if seen[s]:
            continue
        reps.append(s)
        stack = [s]
        seen[s] = 1
        while stack:
            cur = stack.pop()
            for g in gens:
                img = 0
                m = cur
                while m:
                    low = m & -m
                    img |= 1 << g[low.bit_length() - 1]
                    m ^= low
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
    return reps


def _children(rec, max_edges, prune):
    k, adj, rows, gens = rec
    edges = sum(m.bit_count() for m in adj) // 2
    newbit = 1 << k
    seen: set[tuple[int, ...]] = set()
    for s in _mask_orbit_reps(k, gens):
        if max_edges is not None and edges + s.bit_count() > max_edges:
            continue
        cadj = tuple(
            (adj[v] | newbit) if (s >> v) & 1 else adj[v] for v in range(k)
        ) + (s,)
        if prune is not None and not prune(k + 1, cadj):
            continue
        crows, cperm, cgens = _kernels.canon(k + 1, cadj)
        if crows in seen:
            continue
        u = cperm[k]
        if u != k:
            padj = _kernels.delete_vertex(k + 1, cadj, u)
            prows, _, _ = _kernels.canon(k, padj)
            if prows != rows:
                continue
        seen.add(crows)
        yield (k + 1, cadj, crows, cgens)


def _descend(rec, n, max_edges, prune):
    if rec[0] == n:
        yield rec
        return
    for child in _children(rec, max_edges, prune):
        yield from _descend(child, n, max_edges, prune)


def prefix_records(n: int, depth: int, max_edges: int | None = None, prune=None) -> list:
    """All generation-tree records at order min(depth, n), in stream order.
    These partition the remaining work for parallel runs."""
    depth = min(depth, n)
    out = []
    stack_src = _descend(_seed_record(), depth, max_edges, prune)
    for rec in stack_src:
        out.append(rec)
    return out


def enumerate_graphs(
    n: int,
    filt: EnumFilter | None = None,
    prune: Callable[[int, tuple[int, ...]], bool] | None = None,
) -> Iterator[Graph]:
    """Exactly one representative per isomorphism class of order n passing
    the filter, in a deterministic depth-first order.

    `prune` is an optional extra cut applied to intermediate graphs as well;
    it must be hereditary (preserved by vertex deletion) or descendants may
    be lost.
    """
    if n < 0 or n > MAX_BUILTIN_ORDER:
        raise ValueError(f"built-in enumeration limited to order {MAX_BUILTIN_ORDER}")
    filt = filt or EnumFilter()
    if n == 0:
        g = Graph.empty(0)
        if _passes_final(g, filt):
            yield g
        return
    for rec in _descend(_seed_record(), n, filt.max_edges, prune):
        g = Graph(n, rec[1])
        if _passes_final(g, filt):
            yield g


def _map_chunk(args):
    records, n, filt, prune, mapper = args
    out = []
    for rec in records:
        for leaf in _descend(rec, n, filt.max_edges, prune):
            g = Graph(n, leaf[1])
            if _passes_final(g, filt):
                out.append(mapper(g) if mapper is not None else g)
    return out


def enumerate_map(
    n: int,
    mapper: Callable[[Graph], object] | None = None,
    filt: EnumFilter | None = None,
    prune=None,
    jobs: int = 1,
) -> list:
    """Enumerate order-n graphs and apply `mapper` to each, splitting the
    generation tree by prefix across `jobs` workers.

    The result list order depends on the worker count; callers that need
    jobs-independent output must aggregate or sort.
    """
    if n < 0 or n > MAX_BUILTIN_ORDER:
        raise ValueError(f"built-in enumeration limited to order {MAX_BUILTIN_ORDER}")
    filt = filt or EnumFilter()
    if jobs <= 1 or n < 3:
        return _map_chunk(([_seed_record()], n, filt, prune, mapper))
    roots = prefix_records(n, min(n - 1, 5), filt.max_edges, prune)
    chunks = [roots[i :: jobs * 4] for i in range(jobs * 4)]
    chunks = [c for c in chunks if c]
    ctx = get_context("fork")
    with ctx.Pool(jobs) as pool:
        parts = pool.map(
            _map_chunk, [(c, n, filt, prune, mapper) for c in chunks]
        )
    out = []
    for part in parts:
        out.extend(part)
    return out


def read_graph6_stream(source: Iterable[str]) -> Iterator[Graph]:
    """Graphs from graph6 lines, in input order, no dedup.

    Blank lines are skipped; a malformed line raises Graph6Error naming its
    1-based line number.
    """
    for lineno, line in enumerate(source, start=1):
        s = line.strip()
        if not s:
            continue
        try:
            yield parse_graph6(s)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
