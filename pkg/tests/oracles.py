"""Independent brute-force oracles for cross-checking the library.

Everything here deliberately avoids the code paths it is used to check:
isomorphism is a direct backtracking vertex matching (no refinement, no
canonical forms), minor containment enumerates connected-block partitions,
and planarity searches for subdivisions of the two forbidden graphs.
"""

from __future__ import annotations

from itertools import combinations

from minorbounds.graphs import Graph, bits


# -- permutation-based isomorphism -------------------------------------------


def perm_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking adjacency-preserving bijection search."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    image = [-1] * n
    used = [False] * n

    def assign(v: int) -> bool:
        if v == n:
            return True
        dv = g.degree(v)
        for w in range(n):
            if used[w] or h.degree(w) != dv:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != h.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if assign(v + 1):
                    return True
                used[w] = False
        return False

    return assign(0)


def labeled_class_count(n: int, predicate=None) -> int:
    """Number of isomorphism classes of n-vertex graphs (optionally of
    those satisfying ``predicate``), by labeled enumeration with
    permutation-based rejection."""
    pairs = list(combinations(range(n), 2))
    buckets: dict[tuple, list[Graph]] = {}
    count = 0
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph(n, edges)
        if predicate is not None and not predicate(g):
            continue
        nbr_degs = tuple(
            sorted(tuple(sorted(g.degree(w) for w in g.neighbors(v))) for v in range(n))
        )
        key = (tuple(sorted(g.degrees())), g.triangle_count(), nbr_degs)
        reps = buckets.setdefault(key, [])
        if not any(perm_isomorphic(g, r) for r in reps):
            reps.append(g)
            count += 1
    return count


# -- partition-based minor oracle ---------------------------------------------


def _connected_block_partitions(g: Graph, block_count: int):
    """All partitions of vertex subsets of g into ``block_count`` connected
    blocks (as tuples of masks)."""
    n = g.n
    out = []

    def rec(v: int, blocks: list[int]) -> None:
        if v == n:
            if len(blocks) == block_count:
                out.append(tuple(blocks))
            return
        rec(v + 1, blocks)
        for i in range(len(blocks)):
            old = blocks[i]
            blocks[i] = old | (1 << v)
            rec(v + 1, blocks)
            blocks[i] = old
        if len(blocks) < block_count:
            blocks.append(1 << v)
            rec(v + 1, blocks)
            blocks.pop()

    rec(0, [])
    good = []
    for blocks in out:
        if all(g.component_of(b & -b, b) == b for b in blocks):
            good.append(blocks)
    return good


_subgraph_memo: dict[tuple, bool] = {}


def _contains_subgraph(quotient_adj: tuple[int, ...], h: Graph) -> bool:
    """Does a graph with adjacency masks ``quotient_adj`` (same order as h)
    contain h as a (spanning) subgraph under some vertex bijection?"""
    key = (quotient_adj, h)
    cached = _subgraph_memo.get(key)
    if cached is not None:
        return cached
    n = h.n
    image = [-1] * n
    used = [False] * n

    def assign(v: int) -> bool:
        if v == n:
            return True
        hv = h.adjacency_mask(v)
        for w in range(n):
            if used[w]:
                continue
            if quotient_adj[w].bit_count() < h.degree(v):
                continue
            ok = True
            for u in range(v):
                if hv >> u & 1 and not quotient_adj[w] >> image[u] & 1:
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if assign(v + 1):
                    return True
                used[w] = False
        return False

    result = assign(0)
    _subgraph_memo[key] = result
    return result


def oracle_has_minor(g: Graph, h: Graph) -> bool:
    """Exhaustive: h is a minor of g iff some partition of a vertex subset
    into |V(h)| connected blocks has h as a subgraph of its quotient."""
    if h.n == 0:
        return True
    if h.n > g.n or h.edge_count > g.edge_count:
        return False
    seen_quotients: set[tuple[int, ...]] = set()
    for blocks in _connected_block_partitions(g, h.n):
        nbhd = []
        for b in blocks:
            m = 0
            for v in bits(b):
                m |= g.adjacency_mask(v)
            nbhd.append(m)
        quotient = []
        for i in range(h.n):
            row = 0
            for j in range(h.n):
                if i != j and nbhd[i] & blocks[j]:
                    row |= 1 << j
            quotient.append(row)
        q = tuple(quotient)
        if q in seen_quotients:
            continue
        seen_quotients.add(q)
        if _contains_subgraph(q, h):
            return True
    return False


# -- Kuratowski subdivision planarity oracle ----------------------------------


def _has_subdivision(g: Graph, branch_pairs, branch: tuple[int, ...]) -> bool:
    """Can the required pairs of ``branch`` be joined by internally disjoint
    paths through the non-branch vertices?  Exhaustive over assignments of
    each free vertex to one required pair (or unused)."""
    free = [v for v in range(g.n) if v not in branch]
    req = list(branch_pairs)

    def path_ok(a: int, b: int, interior: list[int]) -> bool:
        if not interior:
            return g.has_edge(a, b)
        if len(interior) == 1:
            x = interior[0]
            return g.has_edge(a, x) and g.has_edge(x, b)
        x, y = interior
        return (
            g.has_edge(a, x) and g.has_edge(x, y) and g.has_edge(y, b)
        ) or (g.has_edge(a, y) and g.has_edge(y, x) and g.has_edge(x, b))

    def assign(i: int, usage: dict[int, list[int]]) -> bool:
        if i == len(free):
            return all(path_ok(a, b, usage.get(k, [])) for k, (a, b) in enumerate(req))
        v = free[i]
        if assign(i + 1, usage):
            return True
        for k in range(len(req)):
            usage.setdefault(k, []).append(v)
            if len(usage[k]) <= 2 and assign(i + 1, usage):
                return True
            usage[k].pop()
            if not usage[k]:
                del usage[k]
        return False

    return assign(0, {})


def oracle_is_planar(g: Graph) -> bool:
    """Kuratowski: planar iff no subdivision of K_5 or K_{3,3}.  Only valid
    for n <= 7 (subdivision paths then have at most two interior vertices).
    """
    if g.n > 7:
        raise ValueError("subdivision oracle supports n <= 7 only")
    # K_5 subdivisions
    for branch in combinations(range(g.n), 5):
        pairs = list(combinations(branch, 2))
        if _has_subdivision(g, pairs, branch):
            return False
    # K_{3,3} subdivisions
    for six in combinations(range(g.n), 6):
        for left in combinations(six, 3):
            if six[0] not in left:
                continue  # fix the smallest vertex on the left side
            right = tuple(v for v in six if v not in left)
            pairs = [(a, b) for a in left for b in right]
            if _has_subdivision(g, pairs, six):
                return False
    return True


# -- rotation-system enumeration ----------------------------------------------


def all_rotation_systems(g: Graph):
    """Every rotation system of g (first neighbor pinned per vertex)."""
    from itertools import permutations

    per_vertex: list[list[tuple[int, ...]]] = []
    for v in range(g.n):
        nb = list(g.neighbors(v))
        if len(nb) <= 2:
            per_vertex.append([tuple(nb)])
        else:
            head, rest = nb[0], nb[1:]
            per_vertex.append([(head,) + p for p in permutations(rest)])

    def rec(v: int, acc: list[tuple[int, ...]]):
        if v == g.n:
            yield tuple(acc)
            return
        for rot in per_vertex[v]:
            acc.append(rot)
            yield from rec(v + 1, acc)
            acc.pop()

    yield from rec(0, [])
