import math
import random

import pytest

from minorbounds.constructions import (
    CockadeRecipe,
    GlueStep,
    build_cockade,
    cockade,
    exceptional_graph,
    extremal_bipartite,
    is_cockade,
    is_exceptional,
    k10_catalog,
    random_cockade_recipe,
)
from minorbounds.corpus import canonical_form, is_isomorphic
from minorbounds.graphs import (
    complete_bipartite,
    complete_graph,
    complete_multipartite,
)
from minorbounds.minors import hadwiger_number
from minorbounds.planarity import is_planar


K22222 = complete_multipartite([2, 2, 2, 2, 2])
K122222 = complete_multipartite([1, 2, 2, 2, 2, 2])


class TestBuildCockade:
    def test_single_piece_is_base(self):
        assert build_cockade(CockadeRecipe(K22222, 5)) == K22222

    def test_two_piece_counts(self):
        g = cockade(K22222, 5, 2)
        assert (g.n, g.edge_count) == (15, 70)
        assert g.edge_count == 6 * g.n - 20  # one above the 6V-21 bound

    def test_k122222_counts(self):
        # base has (121-21)/2 = 50 edges; gluing formula gives 85 = 7V-28+1
        assert K122222.edge_count == 50
        g = cockade(K122222, 6, 2)
        assert (g.n, g.edge_count) == (16, 85)
        assert g.edge_count == 7 * g.n - 28 + 1

    def test_gluing_formulas_random(self):
        rng = random.Random(0)
        bases = [K22222, K122222, complete_graph(5)]
        for _ in range(12):
            base = rng.choice(bases)
            k = rng.choice([3, 4, 5])
            pieces = rng.randrange(1, 5)
            recipe = random_cockade_recipe(base, k, pieces, seed=rng.randrange(10**6))
            g = build_cockade(recipe)
            c = pieces
            assert g.n == c * base.n - (c - 1) * k
            assert g.edge_count == c * base.edge_count - (c - 1) * math.comb(k, 2)

    def test_rejects_non_clique_selector(self):
        bad = CockadeRecipe(K22222, 5, (GlueStep((0, 1, 2, 4, 6), (0, 2, 4, 6, 8)),))
        with pytest.raises(ValueError):
            build_cockade(bad)

    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            build_cockade(CockadeRecipe(K22222, 5, (GlueStep((0, 2, 4), (0, 2, 4)),)))


class TestIsCockade:
    def test_base_itself(self):
        assert is_cockade(K22222, K22222, 5)

    def test_round_trip_random(self):
        rng = random.Random(1)
        for _ in range(6):
            pieces = rng.randrange(2, 5)
            recipe = random_cockade_recipe(complete_graph(5), 4, pieces, seed=rng.randrange(10**6))
            assert is_cockade(build_cockade(recipe), complete_graph(5), 4)

    def test_round_trip_multipartite(self):
        for pieces in (2, 3):
            assert is_cockade(cockade(K22222, 5, pieces), K22222, 5)

    def test_k22233_is_not_a_k122222_cockade(self):
        assert not is_cockade(complete_multipartite([2, 2, 2, 3, 3]), K122222, 6)

    def test_wrong_vertex_count(self):
        assert not is_cockade(complete_graph(11), K22222, 5)

    def test_near_miss_rejected(self):
        g = cockade(K22222, 5, 2).delete_edge(0, 2)
        assert not is_cockade(g, K22222, 5)


class TestExceptional:
    def test_counts(self):
        g = exceptional_graph(6)
        assert (g.n, g.edge_count) == (6, 10)
        g5 = exceptional_graph(5)
        assert g5.edge_count - (3 * 5 - 9) == 1

    def test_apex_side_planar(self):
        for v in range(5, 10):
            for subset in ((), (1,), tuple(range(1, v - 3))):
                g = exceptional_graph(v, subset)
                assert is_planar(g.delete_vertex(0))[0]

    def test_constructor_recognizer_round_trip(self):
        rng = random.Random(2)
        for v in range(5, 10):
            for _ in range(4):
                subset = tuple(
                    i for i in range(1, v - 3) if rng.random() < 0.5
                )
                g = exceptional_graph(v, subset)
                assert is_exceptional(g, 0)
                perm = list(range(v))
                rng.shuffle(perm)
                assert is_exceptional(g.relabel(perm), perm[0])

    def test_rejects_k34(self):
        assert not is_exceptional(complete_bipartite(3, 4), 0)

    def test_rejects_octahedron(self):
        octa = complete_multipartite([2, 2, 2])
        assert not any(is_exceptional(octa, a) for a in range(6))

    def test_rejects_wrong_apex(self):
        g = exceptional_graph(7, (2,))
        # vertices b, c have degree V-2; the apex must have degree V-3
        assert not is_exceptional(g, 1)

    def test_validation(self):
        with pytest.raises(ValueError):
            exceptional_graph(4)
        with pytest.raises(ValueError):
            exceptional_graph(6, (5,))


class TestExtremalBipartite:
    def test_examples(self):
        assert extremal_bipartite(4, 6) == complete_multipartite([2, 4])
        assert extremal_bipartite(4, 6).edge_count == 2 * 6 - 4
        assert extremal_bipartite(5, 6).edge_count == 3 * 6 - 9
        assert extremal_bipartite(3, 4).edge_count == 3

    def test_edge_count_is_bound(self):
        from minorbounds.verifier import trifree_bound

        for p in range(3, 7):
            for v in range(max(2 * p - 5, p - 1), 11):
                g = extremal_bipartite(p, v)
                assert g.is_triangle_free()
                assert g.edge_count == trifree_bound(p, v)

    def test_hadwiger_number(self):
        # K_{p-2, V-p+2} has Hadwiger number exactly p-1 once the larger
        # side is at least as big (V >= 2p-4); at V = 2p-5 it drops to p-2
        for p in range(3, 7):
            for v in range(2 * p - 4, 11):
                assert hadwiger_number(extremal_bipartite(p, v)) == p - 1
        for p in range(4, 7):
            v = 2 * p - 5
            assert hadwiger_number(extremal_bipartite(p, v)) == p - 2

    def test_range_validation(self):
        with pytest.raises(ValueError):
            extremal_bipartite(2, 5)
        with pytest.raises(ValueError):
            extremal_bipartite(5, 4)


class TestK10Catalog:
    def test_eight_named_members(self):
        cat = k10_catalog()
        assert len(cat) == 8
        assert len({name for name, _ in cat}) == 8

    def test_counts_and_excess(self):
        expected = {
            "cockade(K_{1,1,2,2,2,2,2},7)": (12, 61),
            "K_{1,2,2,2,3,3}": (13, 69),
            "K_{2,2,2,2,2,3}": (13, 70),
            "K_{2,2,2,2,2,3}-e": (13, 69),
            "K_{2,3,3,3,3}": (14, 78),
            "K_{2,3,3,3,3}-e": (14, 77),
            "K_{2,2,3,3,4}": (14, 77),
            "join(K_{2,2,2,2},C_5)": (13, 69),
        }
        for name, g in k10_catalog():
            assert (g.n, g.edge_count) == expected[name]
            assert g.edge_count > 8 * g.n - 36

    def test_members_distinct(self):
        forms = {canonical_form(g) for _, g in k10_catalog()}
        assert len(forms) == 8

    def test_deleted_edge_choice_canonical_within_largest_parts(self):
        # all edges between the two largest parts give isomorphic deletions
        for sizes in ([2, 2, 2, 2, 2, 3], [2, 3, 3, 3, 3]):
            g = complete_multipartite(sizes)
            starts, off = [], 0
            for s in sizes:
                starts.append(off)
                off += s
            order = sorted(range(len(sizes)), key=lambda i: (-sizes[i], i))
            a_part = range(starts[order[0]], starts[order[0]] + sizes[order[0]])
            b_part = range(starts[order[1]], starts[order[1]] + sizes[order[1]])
            forms = {
                canonical_form(g.delete_edge(min(u, v), max(u, v)))
                for u in a_part
                for v in b_part
            }
            assert len(forms) == 1

    def test_cockade_member_is_single_piece(self):
        cat = dict(k10_catalog())
        g = cat["cockade(K_{1,1,2,2,2,2,2},7)"]
        assert is_isomorphic(g, complete_multipartite([1, 1, 2, 2, 2, 2, 2]))
        assert is_cockade(g, complete_multipartite([1, 1, 2, 2, 2, 2, 2]), 7)
