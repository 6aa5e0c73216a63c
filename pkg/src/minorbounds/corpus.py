"""Isomorphism-class plumbing: canonical forms, exhaustive enumeration, corpora.

The canonical form is exact: equitable color refinement, individualization
with re-refinement, and a lexicographic-minimum adjacency key over the
leaves of the search tree.  Twin vertices and discovered automorphisms
prune the symmetric worst cases (complete multipartite graphs, regular
graphs) without giving up exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graphs import Graph, bits, graph6_decode, graph6_encode

__all__ = [
    "canonical_labeling",
    "canonical_form",
    "canonical_graph",
    "is_isomorphic",
    "Filter",
    "parse_filter",
    "enumerate_graphs",
    "ingest",
    "emit",
    "MAX_ENUM_VERTICES",
]

MAX_ENUM_VERTICES = 10


# -- canonical labeling -------------------------------------------------------


def _refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    """Equitable refinement; class ids are assigned in sorted signature order."""
    n = len(adj)
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[w] for w in bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _are_twins(adj: Sequence[int], u: int, v: int) -> bool:
    """True if swapping u and v is an automorphism (equal or closed neighborhoods)."""
    return (adj[u] ^ adj[v]) & ~((1 << u) | (1 << v)) == 0


def _order_key(
    adj: Sequence[int], order: list[int], init_colors: Sequence[int]
) -> tuple:
    """Comparable key of a vertex order: color sequence, then adjacency columns."""
    cols = []
    for j in range(1, len(order)):
        col = 0
        aj = adj[order[j]]
        for i in range(j):
            col = (col << 1) | (aj >> order[i] & 1)
        cols.append(col)
    return (tuple(init_colors[v] for v in order), tuple(cols))


def _canonical_order(
    adj: Sequence[int], init_colors: Sequence[int]
) -> list[int]:
    """Vertex order (position -> original vertex) giving the minimum key."""
    n = len(adj)
    if n == 0:
        return []
    best_key: tuple | None = None
    best_order: list[int] | None = None
    generators: list[tuple[int, ...]] = []

    def search(colors: list[int], fixed: list[int]) -> None:
        nonlocal best_key, best_order
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            key = _order_key(adj, order, init_colors)
            if best_key is None or key < best_key:
                best_key, best_order = key, order
            elif key == best_key and len(generators) < 64:
                gamma = [0] * n
                for i in range(n):
                    gamma[best_order[i]] = order[i]
                generators.append(tuple(gamma))
            return
        tried: list[int] = []
        for v in target:
            if any(_are_twins(adj, u, v) for u in tried):
                continue
            if any(
                g[u] == v and all(g[f] == f for f in fixed)
                for g in generators
                for u in tried
            ):
                continue
            child = [2 * c + (0 if w == v else 1) for w, c in enumerate(colors)]
            search(_refine(adj, child), fixed + [v])
            tried.append(v)

    search(_refine(adj, list(init_colors)), [])
    assert best_order is not None
    return best_order


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> tuple[int, ...]:
    """Permutation (old vertex -> new position) onto the canonical labeling.

    With ``colors``, the relabeling is restricted to color-preserving maps,
    so two colored graphs agree on (canonical colors, canonical form) iff
    they are isomorphic by a color-preserving map.
    """
    init = tuple(colors) if colors is not None else (0,) * g.n
    if len(init) != g.n:
        raise ValueError("color sequence length must match vertex count")
    order = _canonical_order(g.adj, init)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return tuple(perm)


_canon_cache: dict[Graph, bytes] = {}


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: graph6 of the canonically relabelled graph."""
    cached = _canon_cache.get(g)
    if cached is not None:
        return cached
    form = graph6_encode(g.relabel(canonical_labeling(g)))
    if len(_canon_cache) < 400_000:
        _canon_cache[g] = form
    return form


def canonical_graph(g: Graph) -> Graph:
    return graph6_decode(canonical_form(g))


def _colored_key(g: Graph, colors: Sequence[int]) -> bytes:
    perm = canonical_labeling(g, colors)
    relabelled = g.relabel(perm)
    inv = [0] * g.n
    for v, pos in enumerate(perm):
        inv[pos] = v
    color_part = bytes(colors[v] % 256 for v in inv)
    return color_part + b"|" + graph6_encode(relabelled)


def is_isomorphic(
    g: Graph,
    h: Graph,
    colors_g: Sequence[int] | None = None,
    colors_h: Sequence[int] | None = None,
) -> bool:
    """Exact isomorphism test, optionally color (e.g. apex) preserving."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if (colors_g is None) != (colors_h is None):
        raise ValueError("provide colors for both graphs or neither")
    if colors_g is None:
        return canonical_form(g) == canonical_form(h)
    if sorted(colors_g) != sorted(colors_h):
        return False
    return _colored_key(g, colors_g) == _colored_key(h, colors_h)


# -- filters ------------------------------------------------------------------


@dataclass(frozen=True)
class Filter:
    """Pure predicate on graphs, nameable from the command line.

    Supported names: ``all``, ``triangle-free``, ``connected``,
    ``min-vertices`` (param k), ``no-minor`` (param p, excluding a
    K_p-minor; the test is delegated to the minor engine).
    """

    name: str
    param: int | None = None

    def __call__(self, g: Graph) -> bool:
        if self.name == "all":
            return True
        if self.name == "triangle-free":
            return g.is_triangle_free()
        if self.name == "connected":
            return g.is_connected()
        if self.name == "min-vertices":
            return g.n >= int(self.param or 0)
        if self.name == "no-minor":
            from .minors import find_minor
            from .graphs import complete_graph

            return find_minor(g, complete_graph(int(self.param or 0))) is None
        raise ValueError(f"unknown filter {self.name!r}")


def parse_filter(text: str) -> Filter:
    """Parse a stable CLI filter string, e.g. ``triangle-free``, ``no-K6-minor``."""
    t = text.strip()
    if t in ("all", "triangle-free", "connected"):
        return Filter(t)
    if t.startswith("min-vertices="):
        return Filter("min-vertices", int(t.split("=", 1)[1]))
    if t.startswith("no-K") and t.endswith("-minor"):
        return Filter("no-minor", int(t[4:-6]))
    raise ValueError(f"unknown filter {text!r}")


# -- exhaustive enumeration ---------------------------------------------------


def _independent_masks(g: Graph) -> list[int]:
    """All vertex masks that induce no edge in g (new-vertex attachments
    that keep a triangle-free parent triangle-free)."""
    out = []
    for mask in range(1 << g.n):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if g.adjacency_mask(v) & mask:
                ok = False
                break
            m ^= low
        if ok:
            out.append(mask)
    return out


def enumerate_graphs(n: int, filters: Iterable[Filter] = ()) -> Iterator[Graph]:
    """One representative per isomorphism class of n-vertex graphs passing
    all filters, in a deterministic order.

    Generation extends each (k-1)-vertex class by a new vertex with every
    possible attachment, deduplicating by canonical form.  Hereditary
    filters (triangle-free, connected) prune during generation; all
    filters are re-applied to the output, so the result set is independent
    of filter order.
    """
    filters = list(filters)
    if not 1 <= n <= MAX_ENUM_VERTICES:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_VERTICES}")
    trifree = any(f.name == "triangle-free" for f in filters)
    connected = any(f.name == "connected" for f in filters)

    level = [Graph(1)]
    for k in range(2, n + 1):
        seen: set[bytes] = set()
        nxt: list[Graph] = []
        for parent in level:
            if trifree:
                masks: Iterable[int] = _independent_masks(parent)
            else:
                masks = range(1 << parent.n)
            for mask in masks:
                if connected and mask == 0:
                    continue
                child = parent.with_vertex(mask)
                form = canonical_form(child)
                if form not in seen:
                    seen.add(form)
                    nxt.append(child)
        level = nxt
    for g in level:
        if all(f(g) for f in filters):
            yield g


# -- corpus files -------------------------------------------------------------


def ingest(path: str) -> Iterator[Graph]:
    """Decode a newline-separated graph6 file in file order."""
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield graph6_decode(line)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc


def emit(graphs: Iterable[Graph], path: str) -> int:
    """Write graphs as graph6 lines; returns the number written."""
    count = 0
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + b"\n")
            count += 1
    return count
