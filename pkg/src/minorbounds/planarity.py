"""Planarity with combinatorial embeddings, apex detection, face potentials.

An embedding is a rotation system (cyclic neighbor order at each vertex)
together with the face walks it induces.  Faces are traced so that every
directed edge side lies on exactly one walk; a bridge therefore appears
twice on one walk, and an isolated vertex contributes a walk of length 0.
When the graph is disconnected the components share a single outer face:
one walk per component is designated outer and the outer walks are pooled
into one face, so V - E + F = 1 + c holds with c components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .graphs import Graph, bits

__all__ = [
    "Embedding",
    "embedding_from_rotation",
    "is_planar",
    "planar_embedding",
    "apex_vertices",
    "apex_embedding",
    "face_sizes",
    "psi",
    "phi",
]

Walk = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Embedding:
    """A planar combinatorial embedding of ``graph``.

    ``faces`` lists each face as a tuple of directed edge sides; the outer
    face of a disconnected embedding is the concatenation of one walk per
    component (its length is still the number of edge sides on it).
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[Walk, ...]

    def face_sizes(self) -> list[int]:
        return sorted(len(f) for f in self.faces)

    def to_rotation_dict(self) -> dict[str, list[int]]:
        """JSON-friendly rotation system: vertex -> cyclic neighbor list."""
        return {str(v): list(rot) for v, rot in enumerate(self.rotation)}


def _trace_walks(g: Graph, rotation: tuple[tuple[int, ...], ...]) -> list[Walk]:
    """Face walks of a rotation system: successor of side (u,v) is (v,w)
    where w follows u in the rotation at v."""
    succ_index = [
        {u: i for i, u in enumerate(rot)} for rot in rotation
    ]
    walks: list[Walk] = []
    seen: set[tuple[int, int]] = set()
    for u in range(g.n):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            edge = (u, v)
            while edge not in seen:
                seen.add(edge)
                walk.append(edge)
                x, y = edge
                rot = rotation[y]
                edge = (y, rot[(succ_index[y][x] + 1) % len(rot)])
            walks.append(tuple(walk))
    return walks


def embedding_from_rotation(
    g: Graph, rotation: tuple[tuple[int, ...], ...]
) -> Embedding:
    """Build and validate an Embedding; raises ValueError if the rotation
    system is not planar (some component has positive genus)."""
    if len(rotation) != g.n:
        raise ValueError("rotation must name every vertex")
    for v, rot in enumerate(rotation):
        if sorted(rot) != sorted(g.neighbors(v)):
            raise ValueError(f"rotation at {v} is not a cyclic order of its neighbors")

    walks = _trace_walks(g, rotation)
    comps = g.components()
    comp_index = {}
    for i, comp in enumerate(comps):
        for v in bits(comp):
            comp_index[v] = i

    walks_by_comp: list[list[Walk]] = [[] for _ in comps]
    for walk in walks:
        walks_by_comp[comp_index[walk[0][0]]].append(walk)

    outer_parts: list[Walk] = []
    inner: list[Walk] = []
    for i, comp in enumerate(comps):
        cn = comp.bit_count()
        ce = g.induced_subgraph(bits(comp)).edge_count
        cw = walks_by_comp[i]
        if not cw:
            # edgeless component: a single empty walk is its only face
            cw = [()]
        if cn - ce + len(cw) != 2:
            raise ValueError("rotation system is not planar")
        # deterministic outer choice: the walk holding the smallest edge side
        outer = min(cw, key=lambda w: w[0] if w else (-1, -1))
        outer_parts.append(outer)
        inner.extend(w for w in cw if w is not outer)

    outer_face: Walk = tuple(side for part in outer_parts for side in part)
    faces = (outer_face,) + tuple(inner)

    if sum(len(f) for f in faces) != 2 * g.edge_count:
        raise AssertionError("face walks must cover every edge side once")
    if g.n - g.edge_count + len(faces) != 1 + len(comps) and g.n > 0:
        raise AssertionError("Euler count failed for merged embedding")
    return Embedding(graph=g, rotation=tuple(tuple(r) for r in rotation), faces=faces)


def is_planar(g: Graph) -> tuple[bool, Embedding | None]:
    """Planarity test; on success also returns a validated embedding."""
    if g.n == 0:
        return True, Embedding(graph=g, rotation=(), faces=((),))
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ok, emb = nx.check_planarity(nxg, counterexample=False)
    if not ok:
        return False, None
    rotation = tuple(tuple(emb.neighbors_cw_order(v)) for v in range(g.n))
    return True, embedding_from_rotation(g, rotation)


def planar_embedding(g: Graph) -> Embedding:
    ok, emb = is_planar(g)
    if not ok or emb is None:
        raise ValueError("graph is not planar")
    return emb


def face_sizes(emb: Embedding) -> list[int]:
    """Multiset of face boundary-walk lengths, as a sorted list."""
    return emb.face_sizes()


def apex_vertices(g: Graph) -> list[int]:
    """All vertices whose deletion leaves a planar graph."""
    return [v for v in range(g.n) if is_planar(g.delete_vertex(v))[0]]


def apex_embedding(g: Graph, a: int) -> Embedding:
    """Embedding of g - a; raises ValueError if g - a is not planar."""
    if not 0 <= a < g.n:
        raise ValueError(f"no vertex {a}")
    return planar_embedding(g.delete_vertex(a))


def psi(v_count: int) -> int:
    """Small-order slack term (7 - V)^+ + (5 - V)^+."""
    return max(7 - v_count, 0) + max(5 - v_count, 0)


def phi(g: Graph, a: int, emb: Embedding) -> Fraction:
    """Exact face potential of the apex pair (g, a) under ``emb``:
    (triangles through a)/3 - sum over faces of (|f| - 4)/3.

    ``emb`` must be an embedding of g - a under the standard relabeling.
    """
    if not 0 <= a < g.n:
        raise ValueError(f"no vertex {a}")
    if emb.graph != g.delete_vertex(a):
        raise ValueError("embedding does not match g - a")
    t_a = g.triangles_through(a)
    total = Fraction(t_a, 3)
    for f in emb.faces:
        total -= Fraction(len(f) - 4, 3)
    return total
