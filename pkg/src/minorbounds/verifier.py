"""Executable forms of the extremal edge-bound statements, checked over
graph corpora with exact arithmetic, plus the triangle-transversal and
contraction-preimage tests used by the triangle-free reduction.

Every check recomputes its predicate from scratch (triangle counts,
minor searches, apex sets); corpus labels are never trusted.  Reports are
deterministic given the corpus order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable

from .constructions import is_cockade, is_exceptional
from .corpus import Filter, canonical_form, enumerate_graphs
from .graphs import Graph, bits, complete_multipartite, graph6_encode
from .minors import find_minor, is_linkless
from .planarity import apex_embedding, apex_vertices, is_planar, phi, psi

__all__ = [
    "mader_bound",
    "trifree_bound",
    "apex_bound",
    "mantel_bound",
    "BoundSpec",
    "BoundReport",
    "check_bound",
    "theorem_spec",
    "THEOREM_IDS",
    "builtin_corpus",
    "run_theorem",
    "check_strengthened_apex",
    "triangle_transversal_exceeds",
    "exists_triangle_free_preimage",
    "verify_min_degree_claim",
]


# -- extremal bound functions -------------------------------------------------


def mader_bound(p: int, v_count: int) -> int:
    """(p-2)V - C(p-1,2): edge maximum without a K_p-minor, p = 2..7."""
    if p < 2 or v_count < 0:
        raise ValueError("need p >= 2 and V >= 0")
    return (p - 2) * v_count - math.comb(p - 1, 2)


def trifree_bound(p: int, v_count: int) -> int:
    """(p-2)V - (p-2)^2: triangle-free edge maximum without a K_p-minor."""
    if p < 2 or v_count < 0:
        raise ValueError("need p >= 2 and V >= 0")
    return (p - 2) * v_count - (p - 2) ** 2


def apex_bound(v_count: int, triangles: int) -> Fraction:
    """3V - 9 + t/3: edge maximum for apex graphs on V >= 7 vertices."""
    if v_count < 0 or triangles < 0:
        raise ValueError("need V >= 0 and t >= 0")
    return Fraction(3 * v_count - 9) + Fraction(triangles, 3)


def mantel_bound(n: int) -> int:
    """floor(n^2/4): triangle-free edge maximum."""
    if n < 0:
        raise ValueError("need n >= 0")
    return n * n // 4


# -- bound sweeps -------------------------------------------------------------


@dataclass(frozen=True)
class BoundSpec:
    """One theorem statement as an executable check.

    ``predicate`` selects the graphs the statement speaks about, ``bound``
    gives the exact edge maximum, and ``exception`` recognizes the graphs
    the statement explicitly exempts.
    """

    theorem: str
    kind: str  # "theorem" | "conjecture"
    predicate: Callable[[Graph], bool]
    bound: Callable[[Graph], int | Fraction]
    exception: Callable[[Graph], bool] | None = None
    witness: Callable[[Graph], dict] | None = None


@dataclass
class BoundReport:
    theorem: str
    kind: str
    corpus: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    tight: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "kind": self.kind,
            "corpus": self.corpus,
            "checked": self.checked,
            "violations": self.violations,
            "tight": self.tight,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _bound_str(b: int | Fraction) -> str:
    if isinstance(b, Fraction) and b.denominator != 1:
        return f"{b.numerator}/{b.denominator}"
    return str(int(b))


def check_bound(
    spec: BoundSpec, graphs: Iterable[Graph], corpus: str = ""
) -> BoundReport:
    """Compare every selected graph's edge count against the bound.

    Graphs matched by the exception recognizer are exempt from the bound;
    non-exempt graphs attaining it exactly are recorded as tight.
    """
    report = BoundReport(theorem=spec.theorem, kind=spec.kind, corpus=corpus)
    for g in graphs:
        if not spec.predicate(g):
            continue
        report.checked += 1
        e = g.edge_count
        b = spec.bound(g)
        if e > b:
            if spec.exception is not None and spec.exception(g):
                continue
            entry = {
                "graph6": graph6_encode(g).decode("ascii"),
                "E": e,
                "bound": _bound_str(b),
            }
            entry["witness"] = spec.witness(g) if spec.witness is not None else {}
            report.violations.append(entry)
        elif e == b:
            report.tight.append(graph6_encode(g).decode("ascii"))
    return report


# -- theorem registry ---------------------------------------------------------


def _no_complete_minor(g: Graph, p: int) -> bool:
    from .graphs import complete_graph

    return find_minor(g, complete_graph(p)) is None


def _is_apex(g: Graph) -> bool:
    return len(apex_vertices(g)) > 0


def _is_big_side_bipartite_star(g: Graph) -> bool:
    """Isomorphic to K_{3,V-3} (the exempt graph of the 3V-10 bounds)."""
    if g.n < 5:
        return False
    return canonical_form(g) == canonical_form(complete_multipartite([3, g.n - 3]))


THEOREM_IDS = (
    "thm1.1",
    "thm1.2",
    "thm1.3",
    "conj1.4",
    "thm1.5",
    "conj1.6",
    "conj1.7",
    "conj1.8",
    "thm1.8",
    "thm1.8a",
    "thm1.8b",
    "thm1.9",
    "thm2",
)


def theorem_spec(theorem: str, p: int | None = None) -> BoundSpec:
    """Executable spec for a stable theorem id.

    thm1.1  no K_p-minor, V >= p-1:            E <= (p-2)V - C(p-1,2)   (p=2..7)
    thm1.2  no K_8-minor, V >= 7:              E <= 6V - 21, unless a
            (K_{2,2,2,2,2},5)-cockade
    thm1.3  no K_9-minor, V >= 8:              E <= 7V - 28, unless a
            (K_{1,2,2,2,2,2},6)-cockade or K_{2,2,2,3,3}
    conj1.4 no K_10-minor, V >= 9:             E <= 8V - 36, unless in the
            eight-family catalog
    thm1.5  bipartite linkless, V >= 5:        E <= 3V - 10, unless K_{3,V-3}
    conj1.6 triangle-free linkless, V >= 5:    E <= 3V - 10, unless K_{3,V-3}
    conj1.7 linkless, V >= 7:                  E <= 3V - 9 + t/3
    conj1.8 bipartite, no K_p-minor, V>=2p-5:  E <= (p-2)V - (p-2)^2  (p=2..8)
    thm1.8a triangle-free apex, V >= 5:        E <= 3V - 10, unless K_{3,V-3}
    thm1.8b apex, V >= 7:                      E <= 3V - 9 + t/3
    thm1.9  triangle-free, no K_p-minor,
            V >= 2p-5:                         E <= (p-2)V - (p-2)^2  (p=2..9)
    thm2    strengthened apex statement, via check_strengthened_apex
    """
    if theorem == "thm1.1":
        pp = 5 if p is None else p
        if not 2 <= pp <= 7:
            raise ValueError("thm1.1 covers p = 2..7")
        return BoundSpec(
            theorem=f"thm1.1[p={pp}]",
            kind="theorem",
            predicate=lambda g: g.n >= pp - 1 and _no_complete_minor(g, pp),
            bound=lambda g: mader_bound(pp, g.n),
        )
    if theorem == "thm1.2":
        base = complete_multipartite([2, 2, 2, 2, 2])
        return BoundSpec(
            theorem="thm1.2",
            kind="theorem",
            predicate=lambda g: g.n >= 7 and _no_complete_minor(g, 8),
            bound=lambda g: 6 * g.n - 21,
            exception=lambda g: is_cockade(g, base, 5),
        )
    if theorem == "thm1.3":
        base = complete_multipartite([1, 2, 2, 2, 2, 2])
        other = complete_multipartite([2, 2, 2, 3, 3])
        return BoundSpec(
            theorem="thm1.3",
            kind="theorem",
            predicate=lambda g: g.n >= 8 and _no_complete_minor(g, 9),
            bound=lambda g: 7 * g.n - 28,
            exception=lambda g: is_cockade(g, base, 6)
            or canonical_form(g) == canonical_form(other),
        )
    if theorem == "conj1.4":
        from .constructions import k10_catalog

        base = complete_multipartite([1, 1, 2, 2, 2, 2, 2])
        catalog_forms = {canonical_form(g) for _, g in k10_catalog()}

        def _in_catalog(g: Graph) -> bool:
            return canonical_form(g) in catalog_forms or is_cockade(g, base, 7)

        return BoundSpec(
            theorem="conj1.4",
            kind="conjecture",
            predicate=lambda g: g.n >= 9 and _no_complete_minor(g, 10),
            bound=lambda g: 8 * g.n - 36,
            exception=_in_catalog,
        )
    if theorem == "thm1.5":
        return BoundSpec(
            theorem="thm1.5",
            kind="theorem",
            predicate=lambda g: g.n >= 5 and g.is_bipartite() and is_linkless(g),
            bound=lambda g: 3 * g.n - 10,
            exception=_is_big_side_bipartite_star,
        )
    if theorem == "conj1.6":
        return BoundSpec(
            theorem="conj1.6",
            kind="conjecture",
            predicate=lambda g: g.n >= 5 and g.is_triangle_free() and is_linkless(g),
            bound=lambda g: 3 * g.n - 10,
            exception=_is_big_side_bipartite_star,
        )
    if theorem == "conj1.7":
        return BoundSpec(
            theorem="conj1.7",
            kind="conjecture",
            predicate=lambda g: g.n >= 7 and is_linkless(g),
            bound=lambda g: apex_bound(g.n, g.triangle_count()),
            witness=lambda g: {"t": g.triangle_count()},
        )
    if theorem == "conj1.8":
        pp = 5 if p is None else p
        if not 2 <= pp <= 8:
            raise ValueError("conj1.8 covers p = 2..8")
        return BoundSpec(
            theorem=f"conj1.8[p={pp}]",
            kind="conjecture",
            predicate=lambda g: g.n >= 2 * pp - 5
            and g.is_bipartite()
            and _no_complete_minor(g, pp),
            bound=lambda g: trifree_bound(pp, g.n),
        )
    if theorem in ("thm1.8", "thm1.8a"):
        return BoundSpec(
            theorem="thm1.8a",
            kind="theorem",
            predicate=lambda g: g.n >= 5 and g.is_triangle_free() and _is_apex(g),
            bound=lambda g: 3 * g.n - 10,
            exception=_is_big_side_bipartite_star,
        )
    if theorem == "thm1.8b":
        return BoundSpec(
            theorem="thm1.8b",
            kind="theorem",
            predicate=lambda g: g.n >= 7 and _is_apex(g),
            bound=lambda g: apex_bound(g.n, g.triangle_count()),
            witness=lambda g: {"t": g.triangle_count()},
        )
    if theorem == "thm1.9":
        pp = 5 if p is None else p
        if not 2 <= pp <= 9:
            raise ValueError("thm1.9 covers p = 2..9")
        return BoundSpec(
            theorem=f"thm1.9[p={pp}]",
            kind="theorem",
            predicate=lambda g: g.n >= 2 * pp - 5
            and g.is_triangle_free()
            and _no_complete_minor(g, pp),
            bound=lambda g: trifree_bound(pp, g.n),
        )
    if theorem == "thm2":
        raise ValueError("thm2 is case-based; use run_theorem('thm2', ...)")
    raise ValueError(f"unknown theorem id {theorem!r}")


def _strengthened_apex_cap(g: Graph, a: int) -> Fraction:
    """Edge cap of the applicable case for apex choice a."""
    emb = apex_embedding(g, a)
    base = Fraction(3 * g.n - 9) + phi(g, a, emb)
    if is_exceptional(g, a):
        return base + Fraction(1, 3)
    non_neighbors = (g.n - 1) - g.degree(a)
    if non_neighbors == 0:
        return base + Fraction(psi(g.n), 3)
    if non_neighbors == 1:
        return base + Fraction(max(7 - g.n, 0), 3)
    return base


def check_strengthened_apex(g: Graph, a: int) -> bool:
    """Case-by-case check of the strengthened apex statement for apex a:
    exceptional graphs must attain E = 3V - 9 + phi + 1/3 exactly, all
    others must satisfy the psi-corrected inequality for their number of
    non-neighbors of a."""
    if g.n < 2:
        raise ValueError("statement needs V >= 2")
    emb = apex_embedding(g, a)
    e = Fraction(g.edge_count)
    base = Fraction(3 * g.n - 9) + phi(g, a, emb)
    if is_exceptional(g, a):
        return e == base + Fraction(1, 3)
    return e <= _strengthened_apex_cap(g, a)


# -- triangle transversals and contraction preimages --------------------------


def triangle_transversal_exceeds(g: Graph, k: int) -> bool:
    """True iff every k-subset of vertices misses some triangle, i.e. the
    minimum triangle transversal has more than k vertices."""
    if k < 0:
        raise ValueError("k must be non-negative")
    tris = []
    for u in range(g.n):
        for v in bits(g.adjacency_mask(u) >> (u + 1) << (u + 1)):
            both = g.adjacency_mask(u) & g.adjacency_mask(v)
            for w in bits(both >> (v + 1) << (v + 1)):
                tris.append((1 << u) | (1 << v) | (1 << w))

    def hittable(remaining: list[int], budget: int) -> bool:
        if not remaining:
            return True
        if budget == 0:
            return False
        tri = remaining[0]
        for x in bits(tri):
            rest = [t for t in remaining if not t >> x & 1]
            if hittable(rest, budget - 1):
                return True
        return False

    return not hittable(tris, k)


def exists_triangle_free_preimage(g: Graph, k: int, size_guard: int = 9) -> bool:
    """True iff some triangle-free graph yields g by contracting k edges
    with pairwise distinct endpoints (each contraction splits one vertex
    of g into an adjacent pair, dividing its neighbors between the halves).

    Exact search; refuses instances with |V| + k above ``size_guard``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.n + k > size_guard:
        raise ValueError(
            f"size guard exceeded: |V| + k = {g.n + k} > {size_guard}"
        )
    if k == 0:
        return g.is_triangle_free()
    if g.n == 0:
        return False

    for split in combinations(range(g.n), k):
        if _splittable_triangle_free(g, split):
            return True
    return False


def _splittable_triangle_free(g: Graph, split: tuple[int, ...]) -> bool:
    """Can the chosen vertices be split (neighbors divided between two
    adjacent halves, one preimage edge per original edge) so the result is
    triangle-free?"""
    split_index = {v: i for i, v in enumerate(split)}
    # preimage vertex ids: unsplit v -> v; halves of split v -> (n + 2i, n + 2i + 1)
    n0 = g.n

    def half(v: int, side: int) -> int:
        i = split_index.get(v)
        return v if i is None else n0 + 2 * i + side

    choices: list[tuple[int, int]] = []  # (vertex, neighbor) pairs needing a side
    for v in split:
        nbrs = list(bits(g.adjacency_mask(v)))
        for j, w in enumerate(nbrs):
            if j > 0:  # first neighbor pinned to side 0 (halves are symmetric)
                choices.append((v, w))

    total = len(choices)

    def assemble(assign: dict[tuple[int, int], int]) -> bool:
        edges = []
        for i in range(len(split)):
            edges.append((n0 + 2 * i, n0 + 2 * i + 1))
        for u, v in g.edges():
            su = assign.get((u, v), 0) if u in split_index else 0
            sv = assign.get((v, u), 0) if v in split_index else 0
            edges.append((half(u, su), half(v, sv)))
        pre = Graph(n0 + 2 * len(split), edges)
        keep = [v for v in range(n0) if v not in split_index]
        pre = pre.induced_subgraph(keep + list(range(n0, n0 + 2 * len(split))))
        return pre.is_triangle_free()

    def rec(idx: int, assign: dict[tuple[int, int], int]) -> bool:
        if idx == total:
            return assemble(assign)
        v, w = choices[idx]
        for side in (0, 1):
            assign[(v, w)] = side
            if rec(idx + 1, assign):
                return True
        del assign[(v, w)]
        return False

    return rec(0, {})


def verify_min_degree_claim(graphs: Iterable[Graph], p: int) -> BoundReport:
    """Sweep asserting no triangle-free K_p-minor-free graph beats the
    (p-2)V - (p-2)^2 bound (so the minimum-degree consequence for minimal
    counterexamples is never exercised)."""
    return check_bound(theorem_spec("thm1.9", p), graphs, corpus=f"min-degree[p={p}]")


# -- builtin corpora ----------------------------------------------------------


def builtin_corpus(theorem: str, n_max: int, n_min: int = 1) -> Iterable[Graph]:
    """Enumerated corpus appropriate for a theorem id (triangle-free
    enumeration where the predicate implies it; everything else full)."""
    trifree = theorem in ("thm1.9", "conj1.6", "conj1.8", "thm1.5")
    filters = [Filter("triangle-free")] if trifree else []
    for n in range(max(1, n_min), n_max + 1):
        yield from enumerate_graphs(n, filters)


def check_strengthened_apex_all(graphs: Iterable[Graph], corpus: str = "") -> BoundReport:
    """Sweep of the strengthened apex statement: every apex graph with
    V >= 2 must satisfy the case check for every apex choice."""
    report = BoundReport(theorem="thm2", kind="theorem", corpus=corpus)
    for g in graphs:
        if g.n < 2:
            continue
        apexes = apex_vertices(g)
        if not apexes:
            continue
        report.checked += 1
        failing = [a for a in apexes if not check_strengthened_apex(g, a)]
        if failing:
            report.violations.append(
                {
                    "graph6": graph6_encode(g).decode("ascii"),
                    "E": g.edge_count,
                    "bound": "case-by-case",
                    "witness": {"failing_apex": failing},
                }
            )
    return report


# worker state for parallel sweeps: specs hold closures, so workers rebuild
# them from the (theorem, p) pair instead of unpickling
_worker_spec: BoundSpec | None = None
_worker_thm: str | None = None


def _sweep_worker_init(theorem: str, p: int | None) -> None:
    global _worker_spec, _worker_thm
    _worker_thm = theorem
    _worker_spec = None if theorem == "thm2" else theorem_spec(theorem, p)


def _sweep_worker_eval(g6: bytes) -> tuple[str, dict | str | None]:
    from .graphs import graph6_decode

    g = graph6_decode(g6)
    if _worker_thm == "thm2":
        if g.n < 2:
            return ("skip", None)
        apexes = apex_vertices(g)
        if not apexes:
            return ("skip", None)
        failing = [a for a in apexes if not check_strengthened_apex(g, a)]
        if failing:
            return (
                "violation",
                {
                    "graph6": g6.decode("ascii"),
                    "E": g.edge_count,
                    "bound": "case-by-case",
                    "witness": {"failing_apex": failing},
                },
            )
        return ("ok", None)
    spec = _worker_spec
    assert spec is not None
    if not spec.predicate(g):
        return ("skip", None)
    e = g.edge_count
    b = spec.bound(g)
    if e > b:
        if spec.exception is not None and spec.exception(g):
            return ("ok", None)
        entry = {
            "graph6": g6.decode("ascii"),
            "E": e,
            "bound": _bound_str(b),
            "witness": spec.witness(g) if spec.witness is not None else {},
        }
        return ("violation", entry)
    if e == b:
        return ("tight", g6.decode("ascii"))
    return ("ok", None)


def _check_bound_parallel(
    theorem: str, p: int | None, graphs: Iterable[Graph], corpus: str, jobs: int
) -> BoundReport:
    import multiprocessing as mp

    spec_name = theorem if theorem == "thm2" else theorem_spec(theorem, p).theorem
    kind = "theorem" if theorem.startswith("thm") else "conjecture"
    report = BoundReport(theorem=spec_name, kind=kind, corpus=corpus)
    payload = [graph6_encode(g) for g in graphs]
    ctx = mp.get_context("fork") if hasattr(mp, "get_context") else mp
    with ctx.Pool(jobs, initializer=_sweep_worker_init, initargs=(theorem, p)) as pool:
        for status, data in pool.imap(_sweep_worker_eval, payload, chunksize=16):
            if status == "skip":
                continue
            report.checked += 1
            if status == "violation":
                report.violations.append(data)  # type: ignore[arg-type]
            elif status == "tight":
                report.tight.append(data)  # type: ignore[arg-type]
    return report


def run_theorem(
    theorem: str,
    p: int | None = None,
    n_max: int = 7,
    n_min: int = 1,
    graphs: Iterable[Graph] | None = None,
    corpus: str | None = None,
    jobs: int = 1,
) -> BoundReport:
    """Build the spec, choose the corpus, and run the sweep.

    ``jobs`` > 1 fans the per-graph evaluation over processes; results are
    merged in corpus order, so the report is identical to a serial run.
    """
    if graphs is None:
        graphs = builtin_corpus(theorem, n_max, n_min)
        corpus = corpus or f"builtin n<={n_max}"
    if jobs > 1:
        return _check_bound_parallel(theorem, p, graphs, corpus or "custom", jobs)
    if theorem == "thm2":
        return check_strengthened_apex_all(graphs, corpus=corpus or "custom")
    spec = theorem_spec(theorem, p)
    return check_bound(spec, graphs, corpus=corpus or "custom")
