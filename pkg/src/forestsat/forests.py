"""Linear-forest containment.

Decides whether a graph contains P_{k1}+...+P_{km} + t*P2 as a subgraph and
returns an embedding witness. Long paths are embedded by backtracking DFS;
the t disjoint edges of the residue are settled by a matching computation on
the unused vertices, which keeps large t cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _kernels
from .graphs import Graph


class ForestSpecError(ValueError):
    """Malformed linear-forest spec string; `column` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class LinearForestSpec:
    """A target linear forest: path orders (each >= 3) plus t disjoint edges."""

    paths: tuple[int, ...]
    t: int

    def __post_init__(self):
        paths = tuple(sorted(self.paths, reverse=True))
        object.__setattr__(self, "paths", paths)
        for k in paths:
            if k < 3:
                raise ValueError(f"path order {k} below 3; fold P2 terms into t")
        if self.t < 0:
            raise ValueError("t must be >= 0")
        if not paths and self.t == 0:
            raise ValueError("empty spec")

    @classmethod
    def of(cls, *path_orders: int, t: int = 0) -> "LinearForestSpec":
        """Build a spec, folding any order-2 paths into the t count."""
        ks = []
        for k in path_orders:
            if k == 2:
                t += 1
            else:
                ks.append(k)
        return cls(tuple(ks), t)

    @property
    def demand(self) -> int:
        """Total vertex demand."""
        return sum(self.paths) + 2 * self.t

    def __str__(self) -> str:
        parts = [f"P{k}" for k in self.paths]
        if self.t == 1:
            parts.append("P2")
        elif self.t > 1:
            parts.append(f"{self.t}P2")
        return "+".join(parts)


def parse_forest_spec(text: str) -> LinearForestSpec:
    """Parse the command-line mini-language: ``(P<k>)(+P<k>)*(+<t>P2)?``.

    Examples: ``P6+2P2``, ``P5+P2``, ``3P2``, ``P4``. Errors cite the
    1-based column of the offending token.
    """
    paths: list[int] = []
    t = 0
    saw_p2 = False
    col = 1
    if not text:
        raise ForestSpecError("empty spec", 1)
    for token in text.split("+"):
        if not token:
            raise ForestSpecError("empty term", col)
        if saw_p2:
            raise ForestSpecError("terms after the P2 term", col)
        mult = 1
        body = token
        i = 0
        while i < len(body) and body[i].isdigit():
            i += 1
        if i:
            mult = int(body[:i])
            body = body[i:]
        if not body or body[0] != "P" or not body[1:].isdigit():
            raise ForestSpecError(f"expected P<k>, got {token!r}", col)
        k = int(body[1:])
        if k < 2:
            raise ForestSpecError(f"path order {k} below 2", col)
        if k == 2:
            if mult < 1:
                raise ForestSpecError("P2 multiplier must be >= 1", col)
            t = mult
            saw_p2 = True
        else:
            if i:
                raise ForestSpecError("multipliers only allowed on P2", col)
            paths.append(k)
        col += len(token) + 1
    return LinearForestSpec(tuple(paths), t)


@dataclass(frozen=True)
class Embedding:
    """Witness of a linear-forest copy: one vertex sequence per path and one
    vertex pair per P2 component, all pairwise disjoint."""

    paths: tuple[tuple[int, ...], ...]
    pairs: tuple[tuple[int, int], ...]

    def vertices(self) -> frozenset[int]:
        out = set()
        for p in self.paths:
            out.update(p)
        for p in self.pairs:
            out.update(p)
        return frozenset(out)


def embedding_is_valid(g: Graph, spec: LinearForestSpec, emb: Embedding) -> bool:
    """Re-verify an embedding against its host graph and spec."""
    if sorted((len(p) for p in emb.paths), reverse=True) != list(spec.paths):
        return False
    if len(emb.pairs) != spec.t:
        return False
    seen: set[int] = set()
    for seq in list(emb.paths) + [tuple(p) for p in emb.pairs]:
        for v in seq:
            if v in seen or not 0 <= v < g.n:
                return False
            seen.add(v)
        for a, b in zip(seq, seq[1:]):
            if not g.has_edge(a, b):
                return False
    return True


def contains_path(g: Graph, k: int):
    """A k-vertex path in g as a vertex tuple, or None.

    k above the order is simply absent; k below 2 is rejected.
    """
    if k < 2:
        raise ValueError("path order below 2")
    if k > g.n:
        return None
    return _kernels.find_path(g.n, g.adj, k)


def contains_linear_forest(g: Graph, spec: LinearForestSpec):
    """An Embedding of the spec in g, or None."""
    res = _kernels.find_linear_forest(g.n, g.adj, spec.paths, spec.t)
    if res is None:
        return None
    paths, pairs = res
    return Embedding(paths, pairs)


def brute_force_contains(g: Graph, spec: LinearForestSpec) -> bool:
    """Ground-truth containment by exhaustive search over all injective
    component placements. Independent of the fast path."""
    if spec.demand > 12 or g.n > 10:
        raise ValueError("brute force limited to demand <= 12 and order <= 10")
    comps = list(spec.paths) + [2] * spec.t
    verts = list(range(g.n))

    def place(i: int, used: frozenset[int]) -> bool:
        if i == len(comps):
            return True
        k = comps[i]
        pool = [v for v in verts if v not in used]
        for seq in itertools.permutations(pool, k):
            if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                if place(i + 1, used | set(seq)):
                    return True
        return False

    return place(0, frozenset())


def iter_embeddings_brute(g: Graph, spec: LinearForestSpec):
    """Every copy of the spec in g, one Embedding per subgraph copy.

    Exhaustive and oblivious to the fast path; paths are normalized
    (first endpoint below last, equal-length paths ordered by head) and
    pairs are emitted as a sorted tuple.
    """
    comps = list(spec.paths) + [2] * spec.t
    verts = list(range(g.n))
    images: list[tuple[int, ...]] = []

    def place(i: int, used: frozenset[int]):
        if i == len(comps):
            npaths = len(spec.paths)
            yield Embedding(
                tuple(images[:npaths]),
                tuple(sorted((p[0], p[1]) for p in images[npaths:])),
            )
            return
        k = comps[i]
        pool = [v for v in verts if v not in used]
        for seq in itertools.permutations(pool, k):
            if seq[0] > seq[-1]:
                continue
            if i > 0 and comps[i - 1] == k and images[-1][0] > seq[0]:
                continue
            if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                images.append(seq)
                yield from place(i + 1, used | set(seq))
                images.pop()

    yield from place(0, frozenset())
