"""Exact minor containment with certificates, plus the derived machinery:
Hadwiger number, delta-wye transformations, the Petersen family, and the
minor-obstruction test for linkless embeddability.

The search assigns host vertices in ascending index order to branch sets
(or skips them), pruning on branch-set reachability, realizability of the
still-missing pattern edges, twin symmetry, and, for complete patterns,
a canonical set-opening order.  It is exact: a "no" answer means no model
exists.  An optional node budget turns runaway searches into a distinct
error instead of a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, bits, complete_graph

__all__ = [
    "MinorModel",
    "SearchBudgetExceeded",
    "verify_model",
    "find_minor",
    "hadwiger_number",
    "delta_y",
    "y_delta",
    "petersen_family",
    "petersen_graph",
    "is_linkless",
]


class SearchBudgetExceeded(RuntimeError):
    """Raised when a minor search exceeds its node-expansion budget."""


@dataclass(frozen=True)
class MinorModel:
    """Branch sets certifying a minor: branch_sets[i] hosts pattern vertex i."""

    branch_sets: tuple[frozenset[int], ...]

    def to_dict(self) -> dict[str, list[int]]:
        return {str(i): sorted(s) for i, s in enumerate(self.branch_sets)}


def verify_model(g: Graph, h: Graph, model: MinorModel) -> bool:
    """Check every branch-set invariant; False for any malformed model."""
    sets = model.branch_sets
    if len(sets) != h.n:
        return False
    masks = []
    used = 0
    for s in sets:
        if not s or any(not 0 <= v < g.n for v in s):
            return False
        mask = 0
        for v in s:
            mask |= 1 << v
        if mask & used:
            return False
        used |= mask
        if g.component_of(mask & -mask, mask) != mask:
            return False
        masks.append(mask)
    for u in range(h.n):
        for v in bits(h.adjacency_mask(u) >> (u + 1) << (u + 1)):
            if not any(g.adjacency_mask(x) & masks[v] for x in bits(masks[u])):
                return False
    return True


class _Search:
    """Branch-set search over one connected host graph.

    Complete patterns get two extra layers on top of the shared pruning
    battery: branch sets are opened in canonical ascending order, and
    failed states are memoized.  A state is summarized by what the future
    can still see of each branch set: the neighborhoods of its components
    inside the unprocessed suffix, plus the realized-pair relation.  Two
    partial assignments with equal summaries admit exactly the same
    completions, so one refutation retires them all.

    Non-complete patterns instead canonicalize via host twins (vertices
    whose transposition is an automorphism): twin rules reference earlier
    assignments, which a state summary deliberately forgets, so the two
    techniques are kept apart.
    """

    def __init__(self, g: Graph, h: Graph, budget: int | None):
        self.g = g
        self.h = h
        self.n = g.n
        self.hn = h.n
        self.adj = g.adj
        self.hadj = h.adj
        self.budget = budget
        self.nodes = 0
        self.full = g.vertex_mask
        self.complete = h.edge_count == h.n * (h.n - 1) // 2
        self.failed: set[tuple] = set()
        self.memo_cap = 4_000_000
        # Memoization pays for itself on large symmetric hosts; on small
        # hosts the per-node state keys cost more than they save, and twin
        # pruning covers the symmetry instead.
        self.use_memo = self.complete and g.n > 11
        if self.use_memo:
            self.twins_before: list[list[int]] = [[] for _ in range(g.n)]
        else:
            self.twins_before = [
                [
                    u
                    for u in range(v)
                    if (self.adj[u] ^ self.adj[v]) & ~((1 << u) | (1 << v)) == 0
                ]
                for v in range(g.n)
            ]

    def _neighborhood(self, mask: int) -> int:
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def _flood(self, seed: int, allowed: int) -> int:
        reach = seed & allowed
        frontier = reach
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            nxt &= allowed & ~reach
            reach |= nxt
            frontier = nxt
        return reach

    def run(self) -> list[int] | None:
        sets = [0] * self.hn
        labels = [-1] * self.n
        return self._extend(0, sets, [0] * self.hn, labels, 0)

    def _components_of(self, mask: int) -> list[int]:
        comps = []
        remaining = mask
        while remaining:
            comp = self._flood(remaining & -remaining, mask)
            comps.append(comp)
            remaining &= ~comp
        return comps

    def _state_key(self, v: int, sets: list[int], realized: list[int]) -> tuple:
        """Summary of what completions can still see of this partial model."""
        free = self.full >> v << v
        subkeys: list[tuple] = []
        for i in range(self.hn):
            m = sets[i]
            if not m:
                subkeys.append(((), i))
            else:
                comps = tuple(
                    sorted(self._neighborhood(c) & free for c in self._components_of(m))
                )
                subkeys.append((comps, i))
        order = sorted(range(self.hn), key=lambda i: subkeys[i][0])
        rank = [0] * self.hn
        for pos, i in enumerate(order):
            rank[i] = pos
        remapped = [0] * self.hn
        for i in range(self.hn):
            mask = 0
            for j in bits(realized[i]):
                mask |= 1 << rank[j]
            remapped[rank[i]] = mask
        return (
            v,
            tuple(subkeys[i][0] for i in order),
            tuple(remapped),
        )

    def _check_done(self, sets: list[int], realized: list[int]) -> bool:
        for i in range(self.hn):
            if not sets[i]:
                return False
            if realized[i] != self.hadj[i]:
                return False
            if self._flood(sets[i] & -sets[i], sets[i]) != sets[i]:
                return False
        return True

    def _prune(self, v: int, sets: list[int], realized: list[int]) -> bool:
        """True if the current partial assignment cannot be completed."""
        free = self.full >> v << v
        empty = sum(1 for m in sets if not m)
        if empty > free.bit_count():
            return True
        reach: list[int] = [0] * self.hn
        hull: list[int] = [0] * self.hn
        for i, m in enumerate(sets):
            if not m:
                reach[i] = free
                hull[i] = free
                continue
            r = self._flood(m & -m, m | free)
            if m & ~r:
                return True
            reach[i] = r
            hull[i] = r | self._neighborhood(r)
        edge_in_free = -1  # computed lazily
        for i in range(self.hn):
            missing = self.hadj[i] & ~realized[i]
            for j in bits(missing >> (i + 1) << (i + 1)):
                if sets[i] and sets[j]:
                    if not (hull[i] & reach[j]):
                        return True
                elif sets[i] or sets[j]:
                    k = i if sets[i] else j
                    if not (hull[k] & free):
                        return True
                else:
                    if edge_in_free == -1:
                        edge_in_free = 0
                        for x in bits(free):
                            if self.adj[x] & free:
                                edge_in_free = 1
                                break
                    if not edge_in_free:
                        return True
        return False

    def _extend(
        self,
        v: int,
        sets: list[int],
        realized: list[int],
        labels: list[int],
        skipped: int,
    ) -> list[int] | None:
        if self._check_done(sets, realized):
            return sets[:]
        if v == self.n:
            return None
        if self._prune(v, sets, realized):
            return None
        key: tuple | None = None
        if self.use_memo:
            key = self._state_key(v, sets, realized)
            if key in self.failed:
                return None

        bit = 1 << v
        # twin symmetry: swapping twin vertices is a host automorphism, so
        # models are canonicalized by (a) never assigning v when an earlier
        # twin was skipped, (b) keeping labels non-decreasing along twins
        twin_floor = -1
        twin_skip_blocked = False
        for u in self.twins_before[v]:
            if skipped & (1 << u):
                twin_skip_blocked = True
                break
            if labels[u] > twin_floor:
                twin_floor = labels[u]

        if not twin_skip_blocked:
            first_empty = next((i for i in range(self.hn) if not sets[i]), None)
            for i in range(self.hn):
                if i < twin_floor:
                    continue
                if not sets[i] and self.complete and i != first_empty:
                    # complete patterns: branch sets are interchangeable,
                    # so open them in ascending order only
                    continue
                self.nodes += 1
                if self.budget is not None and self.nodes > self.budget:
                    raise SearchBudgetExceeded(
                        f"minor search exceeded {self.budget} node expansions"
                    )
                new_sets = sets[:]
                new_sets[i] |= bit
                new_realized = realized[:]
                nb = self.adj[v]
                for j in bits(self.hadj[i] & ~realized[i]):
                    if nb & sets[j]:
                        new_realized[i] |= 1 << j
                        new_realized[j] |= 1 << i
                labels[v] = i
                found = self._extend(v + 1, new_sets, new_realized, labels, skipped)
                labels[v] = -1
                if found is not None:
                    return found

        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(
                f"minor search exceeded {self.budget} node expansions"
            )
        found = self._extend(v + 1, sets, realized, labels, skipped | bit)
        if found is None and key is not None and len(self.failed) < self.memo_cap:
            self.failed.add(key)
        return found


def find_minor(g: Graph, h: Graph, budget: int | None = None) -> MinorModel | None:
    """A branch-set model of h in g, or None.  Exact and deterministic.

    ``budget`` caps node expansions; exceeding it raises
    SearchBudgetExceeded rather than returning a wrong answer.
    """
    if h.n == 0:
        return MinorModel(())
    if h.n > g.n or h.edge_count > g.edge_count:
        return None
    if h.n == g.n and h.edge_count == g.edge_count == 0:
        return MinorModel(tuple(frozenset([v]) for v in range(g.n)))

    complete = h.edge_count == h.n * (h.n - 1) // 2
    hosts: list[tuple[Graph, list[int]]] = []
    if complete and h.n >= 3 and len(blocks := g.blocks()) > 1:
        # a complete minor of order >= 3 is 2-connected, so it lives inside
        # one biconnected block (clique-cutset lemma at cutvertices)
        for vs in blocks:
            if len(vs) >= h.n:
                hosts.append((g.induced_subgraph(vs), vs))
    elif h.is_connected() and not g.is_connected():
        # a connected pattern lives inside one host component
        for comp in g.components():
            vs = list(bits(comp))
            if len(vs) >= h.n:
                hosts.append((g.induced_subgraph(vs), vs))
    else:
        hosts.append((g, list(range(g.n))))

    for host, names in hosts:
        if host.n < h.n or host.edge_count < h.edge_count:
            continue
        search = _Search(host, h, budget)
        found = search.run()
        if found is not None:
            sets = tuple(frozenset(names[v] for v in bits(m)) for m in found)
            model = MinorModel(sets)
            assert verify_model(g, h, model)
            return model
    return None


def hadwiger_number(g: Graph, budget: int | None = None) -> int:
    """Largest p such that g has a complete minor of order p."""
    if g.n < 1:
        raise ValueError("hadwiger number needs at least one vertex")
    p = g.clique_number()
    while p < g.n and find_minor(g, complete_graph(p + 1), budget) is not None:
        p += 1
    return p


# -- delta-wye machinery ------------------------------------------------------


def delta_y(g: Graph, triangle: tuple[int, int, int]) -> Graph:
    """Replace a triangle by a new degree-3 vertex on its corners."""
    a, b, c = sorted(triangle)
    if len({a, b, c}) != 3 or not (
        g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    ):
        raise ValueError(f"{triangle} is not a triangle")
    out = g.delete_edge(a, b).delete_edge(a, c).delete_edge(b, c)
    return out.with_vertex((1 << a) | (1 << b) | (1 << c))


def y_delta(g: Graph, v: int) -> Graph:
    """Replace a degree-3 vertex by a triangle on its neighbors (edges merge)."""
    if not 0 <= v < g.n or g.degree(v) != 3:
        raise ValueError(f"vertex {v} does not have degree 3")
    a, b, c = g.neighbors(v)
    masks = list(g.adj)
    for x, y in ((a, b), (a, c), (b, c)):
        masks[x] |= 1 << y
        masks[y] |= 1 << x
    return Graph._from_masks(masks).delete_vertex(v)


@lru_cache(maxsize=1)
def petersen_family() -> tuple[Graph, ...]:
    """Closure of K_6 under delta-wye and wye-delta moves, up to isomorphism."""
    from .corpus import canonical_form, canonical_graph

    seen = {canonical_form(complete_graph(6))}
    frontier = [complete_graph(6)]
    members = [complete_graph(6)]
    while frontier:
        g = frontier.pop()
        nexts = []
        for tri in g.cliques(3):
            nexts.append(delta_y(g, tri))
        for v in range(g.n):
            if g.degree(v) == 3:
                nexts.append(y_delta(g, v))
        for nx_ in nexts:
            form = canonical_form(nx_)
            if form not in seen:
                seen.add(form)
                frontier.append(nx_)
                members.append(nx_)
    members = [canonical_graph(m) for m in members]
    members.sort(key=lambda m: (m.n, canonical_form(m)))
    return tuple(members)


def petersen_graph() -> Graph:
    """The 3-regular girth-5 member of the family."""
    for g in petersen_family():
        if g.n == 10:
            return g
    raise AssertionError("family closure lost the 10-vertex member")


def is_linkless(g: Graph, budget: int | None = None) -> bool:
    """Linklessly embeddable iff no member of the Petersen family is a minor."""
    return all(find_minor(g, p, budget) is None for p in petersen_family())
