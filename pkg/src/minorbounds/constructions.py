"""Generators and recognizers for the named extremal families: cockades,
the exceptional near-bipartite apex family, the tight complete bipartite
family, and the catalog of conjectured extremal graphs above 8V - 36.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .corpus import canonical_form, is_isomorphic
from .graphs import (
    Graph,
    bits,
    complete_multipartite,
    cycle_graph,
    join,
)

__all__ = [
    "GlueStep",
    "CockadeRecipe",
    "build_cockade",
    "cockade",
    "random_cockade_recipe",
    "is_cockade",
    "exceptional_graph",
    "is_exceptional",
    "extremal_bipartite",
    "k10_catalog",
]


# -- cockades -----------------------------------------------------------------


@dataclass(frozen=True)
class GlueStep:
    """Identify ``piece_clique`` of a fresh base copy with ``host_clique``
    of the graph built so far (positionally: piece_clique[i] lands on
    host_clique[i])."""

    host_clique: tuple[int, ...]
    piece_clique: tuple[int, ...]


@dataclass(frozen=True)
class CockadeRecipe:
    """Reproducible left-deep gluing plan: start from ``base`` and glue one
    fresh copy of ``base`` per step onto a clique of the current graph.
    Selectors run against the current graph, so gluing onto cliques that
    span earlier glue boundaries is allowed."""

    base: Graph
    clique_size: int
    steps: tuple[GlueStep, ...] = ()


def _is_clique(g: Graph, vs: tuple[int, ...]) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def _glue_step(current: Graph, base: Graph, k: int, step: GlueStep) -> Graph:
    host, piece = tuple(step.host_clique), tuple(step.piece_clique)
    if len(host) != k or len(piece) != k:
        raise ValueError(f"selectors must name {k} vertices")
    if len(set(host)) != k or len(set(piece)) != k:
        raise ValueError("selector vertices must be distinct")
    if not all(0 <= v < current.n for v in host):
        raise ValueError("host selector out of range")
    if not all(0 <= v < base.n for v in piece):
        raise ValueError("piece selector out of range")
    if not _is_clique(current, host):
        raise ValueError(f"host selector {host} is not a clique")
    if not _is_clique(base, piece):
        raise ValueError(f"piece selector {piece} is not a clique")
    mapping = {}
    fresh = current.n
    for v in range(base.n):
        if v in piece:
            mapping[v] = host[piece.index(v)]
        else:
            mapping[v] = fresh
            fresh += 1
    edges = set(current.edges())
    for u, v in base.edges():
        a, b = mapping[u], mapping[v]
        edges.add((min(a, b), max(a, b)))
    return Graph(fresh, sorted(edges))


def build_cockade(recipe: CockadeRecipe) -> Graph:
    """Build the glued graph; with c pieces it has c|V| - (c-1)k vertices
    and c|E| - (c-1)C(k,2) edges."""
    base, k = recipe.base, recipe.clique_size
    if not 0 <= k <= base.n:
        raise ValueError("clique size must be between 0 and |V(base)|")
    current = base
    for step in recipe.steps:
        current = _glue_step(current, base, k, step)
    return current


def cockade(base: Graph, k: int, pieces: int) -> Graph:
    """Deterministic cockade with the given number of pieces: every piece
    is glued onto the lexicographically first k-clique."""
    if pieces < 1:
        raise ValueError("at least one piece")
    first = next(base.cliques(k), None)
    if first is None:
        raise ValueError(f"base has no {k}-clique")
    recipe = CockadeRecipe(base, k, tuple(GlueStep(first, first) for _ in range(pieces - 1)))
    return build_cockade(recipe)


def random_cockade_recipe(
    base: Graph, k: int, pieces: int, seed: int | None = None
) -> CockadeRecipe:
    """Random valid recipe: each piece glues onto a uniformly chosen
    k-clique of the current graph with a random identification."""
    rng = random.Random(seed)
    piece_cliques = list(base.cliques(k))
    if not piece_cliques:
        raise ValueError(f"base has no {k}-clique")
    steps = []
    current = base
    for _ in range(pieces - 1):
        host = list(rng.choice(list(current.cliques(k))))
        piece = list(rng.choice(piece_cliques))
        rng.shuffle(host)
        step = GlueStep(tuple(host), tuple(piece))
        steps.append(step)
        current = _glue_step(current, base, k, step)
    return CockadeRecipe(base, k, tuple(steps))


_cockade_memo: dict[tuple[bytes, bytes, int], bool] = {}


def is_cockade(g: Graph, base: Graph, k: int) -> bool:
    """True iff g decomposes along k-clique cutsets into base copies."""
    if base.n <= k:
        raise ValueError("base must have more vertices than the glue clique")
    # piece count c satisfies |V(g)| = c|V(base)| - (c-1)k
    over = g.n - base.n
    step = base.n - k
    if over < 0 or over % step != 0:
        return False
    key = (canonical_form(g), canonical_form(base), k)
    cached = _cockade_memo.get(key)
    if cached is not None:
        return cached
    result = _is_cockade_search(g, base, k)
    _cockade_memo[key] = result
    return result


def _is_cockade_search(g: Graph, base: Graph, k: int) -> bool:
    if g.n == base.n:
        return is_isomorphic(g, base)
    for clique in g.cliques(k):
        cut = 0
        for v in clique:
            cut |= 1 << v
        rest = g.vertex_mask & ~cut
        comps = []
        remaining = rest
        while remaining:
            comp = g.component_of(remaining & -remaining, rest)
            comps.append(comp)
            remaining &= ~comp
        if len(comps) < 2:
            continue
        # split the components across the two sides in every nontrivial way
        m = len(comps)
        for split in range(1, 1 << (m - 1)):
            side_a = 0
            for i in range(m):
                if split >> i & 1:
                    side_a |= comps[i]
            side_b = rest & ~side_a
            ga = g.induced_subgraph(bits(side_a | cut))
            gb = g.induced_subgraph(bits(side_b | cut))
            if is_cockade(ga, base, k) and is_cockade(gb, base, k):
                return True
    return False


# -- exceptional apex family --------------------------------------------------


def _exceptional_any_order(v_count: int, path_edges) -> Graph:
    idx = sorted(set(path_edges))
    if idx and not (1 <= idx[0] and idx[-1] <= v_count - 4):
        raise ValueError(f"path edge indices must lie in 1..{v_count - 4}")
    edges = [(a, b) for a in range(3) for b in range(3, v_count)]
    edges.append((1, 2))
    edges.extend((i + 2, i + 3) for i in idx)
    return Graph(v_count, edges)


def exceptional_graph(v_count: int, path_edges: tuple[int, ...] | frozenset[int] = ()) -> Graph:
    """K_{3,V-3} on ({0,1,2}, {3..V-1}) plus the edge 1-2 plus the chosen
    subset of consecutive pairs on the big side (index i joins vertices
    i+2 and i+3).  Vertex 0 is the designated apex."""
    if v_count < 5:
        raise ValueError("exceptional graphs need at least 5 vertices")
    return _exceptional_any_order(v_count, path_edges)


@lru_cache(maxsize=None)
def _exceptional_keys(v_count: int) -> frozenset[bytes]:
    from .corpus import _colored_key

    keys = set()
    for r in range(max(v_count - 3, 1)):
        for subset in combinations(range(1, v_count - 3), r):
            g = _exceptional_any_order(v_count, subset)
            colors = tuple(1 if v == 0 else 0 for v in range(v_count))
            keys.add(_colored_key(g, colors))
    return frozenset(keys)


def is_exceptional(g: Graph, a: int) -> bool:
    """True iff (g, a) is apex-preserving isomorphic to a member of the
    exceptional family.

    The family is recognized down to its degenerate small orders (V = 3:
    the apex isolated beside a single edge; V = 4: a triangle with one
    pendant vertex joined to the apex), where the defining equality
    E = 3V - 9 + phi + 1/3 still holds exactly.
    """
    if g.n < 3 or not 0 <= a < g.n:
        return False
    if g.degree(a) != g.n - 3:
        return False
    from .corpus import _colored_key

    colors = tuple(1 if v == a else 0 for v in range(g.n))
    return _colored_key(g, colors) in _exceptional_keys(g.n)


# -- tight bipartite family ---------------------------------------------------


def extremal_bipartite(p: int, v_count: int) -> Graph:
    """K_{p-2, V-p+2}: triangle-free with (p-2)V - (p-2)^2 edges."""
    if p < 3:
        raise ValueError("p must be at least 3")
    if v_count < 2 * p - 5:
        raise ValueError(f"need at least {2 * p - 5} vertices for p={p}")
    if v_count - p + 2 < 1:
        raise ValueError("second side would be empty")
    return complete_multipartite([p - 2, v_count - p + 2])


# -- conjectured extremal catalog above 8V - 36 -------------------------------


def _minus_largest_parts_edge(sizes: list[int]) -> Graph:
    """Complete multipartite graph minus one edge between the two largest
    parts (first vertex of each; deterministic choice)."""
    g = complete_multipartite(sizes)
    starts = []
    off = 0
    for s in sizes:
        starts.append(off)
        off += s
    order = sorted(range(len(sizes)), key=lambda i: (-sizes[i], i))
    u, v = starts[order[0]], starts[order[1]]
    return g.delete_edge(min(u, v), max(u, v))


def k10_catalog() -> list[tuple[str, Graph]]:
    """Smallest representative of each conjectured extremal family whose
    members exceed 8V - 36 edges."""
    return [
        ("cockade(K_{1,1,2,2,2,2,2},7)", complete_multipartite([1, 1, 2, 2, 2, 2, 2])),
        ("K_{1,2,2,2,3,3}", complete_multipartite([1, 2, 2, 2, 3, 3])),
        ("K_{2,2,2,2,2,3}", complete_multipartite([2, 2, 2, 2, 2, 3])),
        ("K_{2,2,2,2,2,3}-e", _minus_largest_parts_edge([2, 2, 2, 2, 2, 3])),
        ("K_{2,3,3,3,3}", complete_multipartite([2, 3, 3, 3, 3])),
        ("K_{2,3,3,3,3}-e", _minus_largest_parts_edge([2, 3, 3, 3, 3])),
        ("K_{2,2,3,3,4}", complete_multipartite([2, 2, 3, 3, 4])),
        ("join(K_{2,2,2,2},C_5)", join(complete_multipartite([2, 2, 2, 2]), cycle_graph(5))),
    ]
