"""Pure-Python reference kernels.

These are the hot inner loops of the toolkit: canonical labeling, path and
linear-forest embedding, maximum matching, and the deficiency-formula subset
scan. The compiled twin in ``_fast`` mirrors this module function for
function; canonical rows, matchings and scan results must agree exactly,
which the backend equivalence tests enforce.

Graphs enter as ``(n, adj)`` where ``adj`` is a sequence of per-vertex
neighbor bit masks, vertices are ``0..n-1`` and ``n <= 64``.
"""

from __future__ import annotations

BACKEND = "pure"


def components_masks(n: int, adj, alive: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by `alive`, as bit masks."""
    if alive is None:
        alive = (1 << n) - 1
    comps = []
    rem = alive
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            nxt &= alive & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps


# ---------------------------------------------------------------------------
# Canonical labeling: equitable refinement + backtracking over target cells,
# with orbit pruning from automorphisms discovered along the way.
# ---------------------------------------------------------------------------


def _mask_of(cell) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(n: int, adj, cells, seed=None):
    """Coarsest equitable ordered partition refining `cells`.

    Cells are lists of vertices; pieces produced by a split replace their
    parent cell in place, ordered by the split key, so the cell order is an
    isomorphism invariant. `seed` restricts the initial splitter queue, for
    incremental refinement after individualizing a single vertex.
    """
    if seed is None:
        queue = [_mask_of(c) for c in cells]
    else:
        queue = list(seed)
    qi = 0
    while qi < len(queue):
        splitter = queue[qi]
        qi += 1
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                k = (adj[v] & splitter).bit_count()
                g = groups.get(k)
                if g is None:
                    groups[k] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                for k in sorted(groups):
                    piece = groups[k]
                    out.append(piece)
                    queue.append(_mask_of(piece))
        cells = out
    return cells


def _leaf_rows(n: int, adj, perm) -> tuple[int, ...]:
    """Adjacency rows of the graph relabeled so that position i holds perm[i]."""
    inv = [0] * n
    for i, v in enumerate(perm):
        inv[v] = i
    rows = []
    for i in range(n):
        m = adj[perm[i]]
        r = 0
        while m:
            low = m & -m
            r |= 1 << inv[low.bit_length() - 1]
            m ^= low
        rows.append(r)
    return tuple(rows)


def _uf_find(parent, x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _interchangeable(adj, cell) -> bool:
    """True when the cell is a clique or independent set whose members share
    the same external neighborhood: any permutation of it is an automorphism,
    so the search need not branch on it."""
    mask = _mask_of(cell)
    v0 = cell[0]
    outside = adj[v0] & ~mask
    inner = adj[v0] & mask
    if inner == 0:
        want_clique = False
    elif inner == mask ^ (1 << v0):
        want_clique = True
    else:
        return False
    for v in cell[1:]:
        if adj[v] & ~mask != outside:
            return False
        inner = adj[v] & mask
        if want_clique:
            if inner != mask ^ (1 << v):
                return False
        elif inner != 0:
            return False
    return True


def _canon_descend(n: int, adj, cells, base, state) -> None:
    ti = -1
    for i, c in enumerate(cells):
        if len(c) > 1:
            ti = i
            break
    while ti >= 0 and _interchangeable(adj, cells[ti]):
        # singletonize branch-free; no new splits can result
        cells = cells[:ti] + [[v] for v in cells[ti]] + cells[ti + 1 :]
        ti = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                ti = i
                break
    if ti < 0:
        perm = [c[0] for c in cells]
        rows = _leaf_rows(n, adj, perm)
        best = state[0]
        if best is None or rows < best:
            state[0] = rows
            state[1] = perm
        elif rows == best:
            bperm = state[1]
            theta = [0] * n
            diff = False
            for i in range(n):
                theta[bperm[i]] = perm[i]
                if bperm[i] != perm[i]:
                    diff = True
            if diff:
                state[2].append(tuple(theta))
        return
    cell = cells[ti]
    head = cells[:ti]
    tail = cells[ti + 1 :]
    gens = state[2]
    parent = list(range(n))  # orbit union-find under base-fixing gens
    seen_upto = 0
    tried: list[int] = []
    for v in cell:
        # absorb automorphisms discovered below earlier siblings
        while seen_upto < len(gens):
            g = gens[seen_upto]
            seen_upto += 1
            ok = True
            for b in base:
                if g[b] != b:
                    ok = False
                    break
            if ok:
                for x in range(n):
                    rx = _uf_find(parent, x)
                    ry = _uf_find(parent, g[x])
                    if rx != ry:
                        parent[ry] = rx
        if tried:
            rv = _uf_find(parent, v)
            if any(_uf_find(parent, u) == rv for u in tried):
                continue
        tried.append(v)
        rest = [u for u in cell if u != v]
        refined = _refine(n, adj, head + [[v], rest] + tail, seed=(1 << v,))
        base.append(v)
        _canon_descend(n, adj, refined, base, state)
        base.pop()


def canon(n: int, adj):
    """Canonical labeling of the graph (n, adj).

    Returns ``(rows, perm, gens)``: `rows` is the least relabeled adjacency
    over the invariant search tree (equal rows iff isomorphic), `perm` maps
    canonical position -> original vertex, and `gens` are automorphisms found
    during the search (sound but not necessarily a full generating set).
    """
    if n == 0:
        return (), (), ()
    cells = _refine(n, adj, [list(range(n))])
    state: list = [None, None, []]
    _canon_descend(n, adj, cells, [], state)
    return state[0], tuple(state[1]), tuple(state[2])


def delete_vertex(n: int, adj, v: int) -> list[int]:
    """Adjacency after removing v, with vertices above v shifted down by one."""
    low = (1 << v) - 1
    out = []
    for u in range(n):
        if u == v:
            continue
        m = adj[u]
        out.append((m & low) | ((m >> (v + 1)) << v))
    return out


# ---------------------------------------------------------------------------
# Path and linear-forest embedding.
# ---------------------------------------------------------------------------


def find_path(n: int, adj, k: int, avoid: int = 0):
    """First k-vertex path disjoint from the `avoid` mask, or None.

    The witness is normalized so its first endpoint index is below its last.
    """
    full = (1 << n) - 1
    free = full & ~avoid
    if k == 1:
        if free:
            return ((free & -free).bit_length() - 1,)
        return None
    if k > free.bit_count():
        return None
    path: list[int] = []

    def extend(v: int, used: int) -> bool:
        path.append(v)
        if len(path) == k:
            return True
        m = adj[v] & ~used
        while m:
            low = m & -m
            if extend(low.bit_length() - 1, used | low):
                return True
            m ^= low
        path.pop()
        return False

    m = free
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if extend(v, avoid | low):
            if path[0] > path[-1]:
                path.reverse()
            return tuple(path)
        m ^= low
    return None


def _iter_paths(n: int, adj, k: int, used: int, min_start: int):
    """Yield every k-vertex path avoiding `used`, normalized first < last,
    with first vertex index >= min_start."""
    path: list[int] = []

    def extend(mask: int):
        if len(path) == k:
            if path[0] < path[-1]:
                yield tuple(path)
            return
        m = adj[path[-1]] & ~mask
        while m:
            low = m & -m
            path.append(low.bit_length() - 1)
            yield from extend(mask | low)
            path.pop()
            m ^= low

    free = ((1 << n) - 1) & ~used
    free &= ~((1 << min_start) - 1)
    while free:
        low = free & -free
        path.append(low.bit_length() - 1)
        yield from extend(used | low)
        path.pop()
        free ^= low


def find_linear_forest(n: int, adj, path_orders, t: int):
    """Embed disjoint paths of the given orders plus t extra disjoint edges.

    Paths are placed longest-first by backtracking DFS; the t-edge residue is
    settled by a matching computation on the unused vertices. Returns
    ``(paths, pairs)`` or None.
    """
    full = (1 << n) - 1
    ks = sorted(path_orders, reverse=True)
    if sum(ks) + 2 * t > n:
        return None
    chosen: list[tuple[int, ...]] = []

    def place(i: int, used: int):
        if i == len(ks):
            if t == 0:
                return ()
            alive = full & ~used
            if alive.bit_count() < 2 * t:
                return None
            return matching_at_least(n, adj, alive, t)
        # identical path lengths are placed with increasing first vertex
        ms = 0
        if i > 0 and ks[i] == ks[i - 1]:
            ms = chosen[i - 1][0] + 1
        for path in _iter_paths(n, adj, ks[i], used, ms):
            m = 0
            for v in path:
                m |= 1 << v
            chosen.append(path)
            res = place(i + 1, used | m)
            if res is not None:
                return res
            chosen.pop()
        return None

    pairs = place(0, 0)
    if pairs is None:
        return None
    return tuple(chosen), tuple(pairs)


# ---------------------------------------------------------------------------
# Maximum matching (Edmonds blossom) and the deficiency subset scan.
# ---------------------------------------------------------------------------


def _blossom_matching(n: int, adj, alive: int, target: int):
    """Greedy seed plus augmenting-path phases with blossom contraction.

    Stops as soon as `target` edges are matched; pass an unreachable target
    for a maximum matching. Returns (match array, size).
    """
    match = [-1] * n
    size = 0
    for v in range(n):
        if (alive >> v) & 1 and match[v] < 0:
            m = adj[v] & alive
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if match[u] < 0:
                    match[u] = v
                    match[v] = u
                    size += 1
                    break
                m ^= low
    if size >= target:
        return match, size

    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    blossom = [False] * n
    q: list[int] = []

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] < 0:
                break
            x = p[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = p[match[y]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_aug(root: int) -> bool:
        for i in range(n):
            used[i] = False
            p[i] = -1
            base[i] = i
        used[root] = True
        q.clear()
        q.append(root)
        qi = 0
        while qi < len(q):
            v = q[qi]
            qi += 1
            m = adj[v] & alive
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                if base[v] == base[u] or match[v] == u:
                    continue
                if u == root or (match[u] >= 0 and p[match[u]] >= 0):
                    cur = lca(v, u)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, cur, u)
                    mark_path(u, cur, v)
                    for i in range(n):
                        if (alive >> i) & 1 and blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[u] < 0:
                    p[u] = v
                    if match[u] < 0:
                        w = u
                        while w >= 0:
                            pv = p[w]
                            nxt = match[pv]
                            match[w] = pv
                            match[pv] = w
                            w = nxt
                        return True
                    used[match[u]] = True
                    q.append(match[u])
        return False

    for v in range(n):
        if size >= target:
            break
        if (alive >> v) & 1 and match[v] < 0:
            if find_aug(v):
                size += 1
    return match, size


def max_matching(n: int, adj, alive: int | None = None) -> list[tuple[int, int]]:
    """Maximum matching of the subgraph induced by `alive`, as sorted pairs."""
    if alive is None:
        alive = (1 << n) - 1
    match, _ = _blossom_matching(n, adj, alive, n + 1)
    pairs = []
    for v in range(n):
        u = match[v]
        if u > v:
            pairs.append((v, u))
    return pairs


def matching_at_least(n: int, adj, alive: int, t: int):
    """First t edges of a matching of size >= t in the induced subgraph,
    or None if the matching number falls short."""
    if t == 0:
        return ()
    match, size = _blossom_matching(n, adj, alive, t)
    if size < t:
        return None
    pairs = []
    for v in range(n):
        u = match[v]
        if u > v:
            pairs.append((v, u))
            if len(pairs) == t:
                break
    return tuple(pairs)


def berge_tutte_scan(n: int, adj) -> tuple[int, int, int]:
    """Exhaustive deficiency scan over all vertex subsets S.

    Returns ``(mask, odd, value)`` minimizing (n + |S| - o(G-S)) / 2; ties
    resolve to the smallest subset mask.
    """
    full = (1 << n) - 1
    best_val = -1
    best_mask = 0
    best_odd = 0
    for s in range(full + 1):
        alive = full & ~s
        odd = 0
        rem = alive
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    low = m & -m
                    nxt |= adj[low.bit_length() - 1]
                    m ^= low
                nxt &= alive & ~comp
                comp |= nxt
                frontier = nxt
            odd += comp.bit_count() & 1
            rem &= ~comp
        val = (n + s.bit_count() - odd) // 2
        if best_val < 0 or val < best_val:
            best_val = val
            best_mask = s
            best_odd = odd
    return best_mask, best_odd, best_val
