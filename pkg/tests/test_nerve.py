import random

from plspines.core import SimplicialMap, from_facets, isomorphic
from plspines.homology import betti
from plspines.models import named_triangulation
from plspines.nerve import (
    nerve,
    nerve_checks,
    nerve_of_pair,
    prenerve,
    prenerve_of_pair,
    rainbow_top_chain_count,
    stein,
    stein_checks,
)
from plspines.partitions import discrete
from plspines.recognize import is_closed_curve
from plspines.spine import vertex_count
from helpers import random_simplicial_map


class TestStein:
    def test_identity_middle_is_derived_source(self):
        from plspines.core import derived

        cx = from_facets([["a", "b", "c"]])
        f = SimplicialMap(cx, cx, {v: v for v in cx.vertices})
        sf = stein(f)
        assert isomorphic(sf.middle, derived(cx).complex)
        assert stein_checks(sf) == []

    def test_hexagon_fold_middle_is_circle(self):
        hexa = from_facets([[f"h{i}", f"h{(i + 1) % 6}"] for i in range(6)])
        seg = from_facets([["x", "y"]])
        fold = SimplicialMap(
            hexa, seg, {f"h{i}": ("x" if i % 2 == 0 else "y") for i in range(6)}
        )
        sf = stein(fold)
        assert is_closed_curve(sf.middle)
        assert sf.middle.f_vector() == (12, 12)
        # g identifies opposite arcs: derived target has 3 vertices, with
        # computed fiber sizes 3 + 3 + 6
        from collections import Counter

        sizes = sorted(Counter(sf.g.assignment.values()).values())
        assert sizes == [3, 3, 6]
        assert stein_checks(sf) == []

    def test_disjoint_triangles_identified(self):
        two = from_facets([["a1", "b1", "c1"], ["a2", "b2", "c2"]])
        one = from_facets([["a", "b", "c"]])
        f = SimplicialMap(
            two, one, {f"{x}{i}": x for x in "abc" for i in (1, 2)}
        )
        sf = stein(f)
        # fibers are already connected per component: two derived triangles
        assert len(sf.middle.faces_of_dim(2)) == 12
        assert stein_checks(sf) == []
        from plspines.core import connected_components

        assert len(connected_components(sf.middle)) == 2

    def test_random_maps_have_stein_properties(self):
        # acceptance-grade property: connected h-fibers, dimension-preserving g
        rng = random.Random(2024)
        for _ in range(100):
            f = random_simplicial_map(rng, max_source_faces=40)
            sf = stein(f)
            assert stein_checks(sf) == []


class TestPrenerve:
    def test_circle_point_pair_is_segment(self):
        s1 = named_triangulation("S1_triangle")
        pt = from_facets([["a"]])
        np_ = prenerve_of_pair(s1, pt)
        assert np_.prenerve.f_vector() == (2, 1)

    def test_equator_prenerve_is_path(self, sphere2, equator_partition):
        np_ = prenerve(sphere2, equator_partition)
        assert np_.prenerve.f_vector() == (3, 2)
        from plspines.recognize import is_arc

        assert is_arc(np_.prenerve)

    def test_k4_prenerve_has_full_chains(self, sphere2):
        np_ = prenerve(sphere2, discrete(sphere2))
        assert np_.prenerve.dim == 2
        assert len(np_.prenerve.faces_of_dim(2)) > 0


class TestNerve:
    def test_circle_point_nerve_is_circle(self):
        s1 = named_triangulation("S1_triangle")
        pt = from_facets([["a"]])
        np_ = nerve_of_pair(s1, pt)
        assert is_closed_curve(np_.nerve)
        assert betti(np_.nerve, 1) == 1

    def test_equator_nerve_is_subdivided_path(self, sphere2, equator_partition):
        np_ = nerve(sphere2, equator_partition)
        assert np_.nerve.dim == 1
        assert betti(np_.nerve, 1) == 0

    def test_k4_nerve_dim_two(self, sphere2):
        np_ = nerve(sphere2, discrete(sphere2))
        assert np_.nerve.dim == 2
        # for the discrete partition the nerve reproduces T''
        from plspines.core import derived

        t2 = derived(derived(sphere2).complex).complex
        assert np_.nerve.f_vector() == t2.f_vector()

    def test_nerve_map_surjective_with_connected_fibers(self, sphere2):
        np_ = nerve(sphere2, discrete(sphere2))
        assert set(np_.nerve_map.assignment.values()) == set(np_.nerve.vertices)
        assert stein_checks(np_.stein) == []


class TestNerveChecks:
    def test_equator_report(self, sphere2, equator_partition):
        np_ = nerve(sphere2, equator_partition)
        rep = nerve_checks(np_, 0, 2)
        assert rep.ok
        assert rep.nerve_dim == 1

    def test_k4_report(self, sphere2):
        np_ = nerve(sphere2, discrete(sphere2))
        rep = nerve_checks(np_, 4, 2)
        assert rep.ok
        assert rep.nerve_dim == 2

    def test_torus_best_spine_report(self, torus7):
        from plspines.partitions import vertex_partition

        p = vertex_partition(
            torus7, [["t0"], ["t1", "t2", "t4"], ["t3", "t5", "t6"]]
        )
        np_ = nerve(torus7, p)
        rep = nerve_checks(np_, vertex_count(torus7, p), 2)
        assert rep.ok
        assert rep.nerve_dim == 2


class TestSingularSimplexCount:
    def test_k4_top_nerve_simplex_count(self, sphere2):
        np_ = nerve(sphere2, discrete(sphere2))
        tops = len(np_.nerve.faces_of_dim(2))
        # one singular simplex per spine vertex, each contributing the 36
        # triangles of a twice-subdivided triangle
        assert tops == 4 * 36
        assert rainbow_top_chain_count(sphere2, np_.poset) == tops
