"""Immutable simple graphs on dense integer vertices, with a graph6 codec.

Vertices are always 0..n-1.  Adjacency is stored as one bitmask per vertex,
so the neighborhood algebra used by the counting and search code
(intersection, union, popcount) stays cheap.  Every "mutating" operation
returns a new graph; instances are hashable values and safe to share
across workers.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "bits",
    "complete_graph",
    "empty_graph",
    "cycle_graph",
    "path_graph",
    "complete_bipartite",
    "complete_multipartite",
    "join",
    "disjoint_union",
    "graph6_encode",
    "graph6_decode",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph: no loops, no parallel edges, vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._hash = hash((n, self._adj))

    @classmethod
    def _from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Trusted constructor: caller guarantees symmetry and no loops."""
        g = object.__new__(cls)
        g.n = len(masks)
        g._adj = tuple(masks)
        g._hash = hash((g.n, g._adj))
        return g

    # -- basic accessors ---------------------------------------------------

    @property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitmasks, one per vertex."""
        return self._adj

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as ordered pairs (u, v) with u < v, lexicographic."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1) << (u + 1)
            for v in bits(rest):
                out.append((u, v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"

    # -- copy-with-change operations ---------------------------------------

    def with_vertex(self, neighbor_mask: int = 0) -> "Graph":
        """New graph with an extra vertex n adjacent to ``neighbor_mask``."""
        if neighbor_mask >> self.n:
            raise ValueError("neighbor mask out of range")
        v = self.n
        masks = [m | ((neighbor_mask >> i & 1) << v) for i, m in enumerate(self._adj)]
        masks.append(neighbor_mask)
        return Graph._from_masks(masks)

    def delete_vertex(self, v: int) -> "Graph":
        """Delete v; remaining vertices are recompacted preserving order."""
        if not 0 <= v < self.n:
            raise ValueError(f"no vertex {v}")
        low = (1 << v) - 1
        masks = []
        for u, m in enumerate(self._adj):
            if u == v:
                continue
            masks.append((m & low) | ((m >> (v + 1)) << v))
        return Graph._from_masks(masks)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        masks = list(self._adj)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph._from_masks(masks)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"invalid edge ({u},{v})")
        masks = list(self._adj)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return Graph._from_masks(masks)

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Contract edge uv onto the smaller endpoint; result stays simple."""
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        keep, drop = min(u, v), max(u, v)
        merged = (self._adj[keep] | self._adj[drop]) & ~(1 << keep) & ~(1 << drop)
        masks = list(self._adj)
        masks[keep] = merged
        for w in range(self.n):
            if w != keep:
                masks[w] = masks[w] & ~(1 << keep) | ((merged >> w & 1) << keep)
        g = Graph._from_masks(masks)
        return g.delete_vertex(drop)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply permutation perm (old vertex -> new vertex)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        masks = [0] * self.n
        for u in range(self.n):
            m = 0
            for w in bits(self._adj[u]):
                m |= 1 << perm[w]
            masks[perm[u]] = m
        return Graph._from_masks(masks)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled in ascending order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        masks = [0] * len(vs)
        for v in vs:
            for w in bits(self._adj[v]):
                if w in index:
                    masks[index[v]] |= 1 << index[w]
        return Graph._from_masks(masks)

    def complement(self) -> "Graph":
        full = self.vertex_mask
        masks = [full & ~m & ~(1 << v) for v, m in enumerate(self._adj)]
        return Graph._from_masks(masks)

    # -- counting and structure --------------------------------------------

    def triangle_count(self) -> int:
        """Number of 3-cliques."""
        total = 0
        for u in range(self.n):
            above_u = self._adj[u] >> (u + 1) << (u + 1)
            for v in bits(above_u):
                above_v = self._adj[v] >> (v + 1) << (v + 1)
                total += (self._adj[u] & above_v).bit_count()
        return total

    def triangles_through(self, v: int) -> int:
        """Number of triangles containing vertex v."""
        if not 0 <= v < self.n:
            raise ValueError(f"no vertex {v}")
        nb = self._adj[v]
        total = 0
        for x in bits(nb):
            total += (self._adj[x] & nb >> (x + 1) << (x + 1)).bit_count()
        return total

    def is_triangle_free(self) -> bool:
        for u in range(self.n):
            for v in bits(self._adj[u] >> (u + 1) << (u + 1)):
                if self._adj[u] & self._adj[v]:
                    return False
        return True

    def component_of(self, start_mask: int, within: int | None = None) -> int:
        """Vertices reachable from ``start_mask`` inside the mask ``within``."""
        allowed = self.vertex_mask if within is None else within
        reach = start_mask & allowed
        frontier = reach
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self._adj[v]
            nxt &= allowed & ~reach
            reach |= nxt
            frontier = nxt
        return reach

    def components(self) -> list[int]:
        """Connected components as vertex masks, ordered by smallest vertex."""
        remaining = self.vertex_mask
        out = []
        while remaining:
            seed = remaining & -remaining
            comp = self.component_of(seed)
            out.append(comp)
            remaining &= ~comp
        return out

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.component_of(1) == self.vertex_mask

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in bits(self._adj[u]):
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        stack.append(w)
                    elif color[w] == color[u]:
                        return False
        return True

    def girth(self) -> int | None:
        """Length of a shortest cycle, or None for a forest."""
        best: int | None = None
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = [s]
            while queue:
                nxt_queue = []
                for u in queue:
                    for w in bits(self._adj[u]):
                        if w not in dist:
                            dist[w] = dist[u] + 1
                            parent[w] = u
                            nxt_queue.append(w)
                        elif parent[u] != w:
                            cyc = dist[u] + dist[w] + 1
                            if best is None or cyc < best:
                                best = cyc
                queue = nxt_queue
        return best

    def blocks(self) -> list[list[int]]:
        """Biconnected components as sorted vertex lists (DFS lowpoint);
        an isolated vertex forms its own block."""
        visit = [0] * self.n
        low = [0] * self.n
        clock = [0]
        edge_stack: list[tuple[int, int]] = []
        out: list[list[int]] = []

        def dfs(v: int, parent: int) -> None:
            clock[0] += 1
            visit[v] = low[v] = clock[0]
            for w in bits(self._adj[v]):
                if visit[w] == 0:
                    edge_stack.append((v, w))
                    dfs(w, v)
                    if low[w] < low[v]:
                        low[v] = low[w]
                    if low[w] >= visit[v]:
                        comp: set[int] = set()
                        while True:
                            e = edge_stack.pop()
                            comp.update(e)
                            if e == (v, w):
                                break
                        out.append(sorted(comp))
                elif w != parent and visit[w] < visit[v]:
                    edge_stack.append((v, w))
                    if visit[w] < low[v]:
                        low[v] = visit[w]

        for v in range(self.n):
            if visit[v] == 0:
                dfs(v, -1)
                if self._adj[v] == 0:
                    out.append([v])
        out.sort()
        return out

    def cliques(self, k: int) -> Iterator[tuple[int, ...]]:
        """All k-cliques in lexicographic order."""
        if k < 0:
            raise ValueError("k must be non-negative")
        if k == 0:
            yield ()
            return

        def grow(prefix: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
            if len(prefix) == k:
                yield prefix
                return
            need = k - len(prefix)
            for v in bits(cand):
                rest = cand & self._adj[v] & ~((1 << (v + 1)) - 1)
                if rest.bit_count() >= need - 1:
                    yield from grow(prefix + (v,), rest)
                elif need == 1:
                    yield from grow(prefix + (v,), rest)

        yield from grow((), self.vertex_mask)

    def clique_number(self) -> int:
        """Size of a largest clique (branch and bound)."""
        best = 0
        order = sorted(range(self.n), key=lambda v: -self._adj[v].bit_count())

        def grow(size: int, cand: int) -> None:
            nonlocal best
            if size + cand.bit_count() <= best:
                return
            if not cand:
                best = max(best, size)
                return
            for v in bits(cand):
                grow(size + 1, cand & self._adj[v])
                cand &= ~(1 << v)
                if size + cand.bit_count() <= best:
                    return

        grow(0, self.vertex_mask)
        return best


# -- named constructions ----------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(p: int) -> Graph:
    if p < 0:
        raise ValueError("order must be non-negative")
    return Graph(p, combinations(range(p), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("paths need at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts occupy consecutive vertex ranges."""
    if not part_sizes:
        raise ValueError("at least one part is required")
    if any(s < 1 for s in part_sizes):
        raise ValueError("every part size must be positive")
    n = sum(part_sizes)
    part = []
    for i, s in enumerate(part_sizes):
        part.extend([i] * s)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]
    ]
    return Graph(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted up by g.n."""
    masks = list(g.adj) + [m << g.n for m in h.adj]
    return Graph._from_masks(masks)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    gmask = g.vertex_mask
    hmask = ((1 << h.n) - 1) << g.n
    masks = [m | hmask for m in g.adj]
    masks += [(m << g.n) | gmask for m in h.adj]
    return Graph._from_masks(masks)


# -- graph6 codec (short form, n <= 62) --------------------------------------


def graph6_encode(g: Graph) -> bytes:
    """Standard graph6 byte string (short form only)."""
    n = g.n
    if n > 62:
        raise ValueError("only the short graph6 form (n <= 62) is supported")
    out = bytearray([n + 63])
    buf = 0
    nbits = 0
    for v in range(1, n):
        col = g.adjacency_mask(v)
        for u in range(v):
            buf = (buf << 1) | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(buf + 63)
                buf = 0
                nbits = 0
    if nbits:
        out.append((buf << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    """Decode a short-form graph6 byte string; strict about padding."""
    if isinstance(data, str):
        data = data.encode("ascii")
    if not data:
        raise ValueError("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise ValueError(f"byte {b} outside graph6 range 63..126")
    if data[0] == 126:
        raise ValueError("long graph6 forms (n >= 63) are not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise ValueError(
            f"graph6 length mismatch: n={n} needs {nbytes} body bytes, got {len(body)}"
        )
    bitstream = 0
    for b in body:
        bitstream = (bitstream << 6) | (b - 63)
    pad = 6 * nbytes - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise ValueError("nonzero padding bits in graph6 string")
    bitstream >>= pad
    edges = []
    pos = nbits
    for v in range(1, n):
        for u in range(v):
            pos -= 1
            if bitstream >> pos & 1:
                edges.append((u, v))
    return Graph(n, edges)
