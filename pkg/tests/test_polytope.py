import itertools
import json
import random
from fractions import Fraction

import pytest

from conftest import D9, TRAPEZOID, TRAPEZOID_VERTICES
from schubitope import Diagram
from schubitope.checks import random_diagram
from schubitope.diagrams import rothe, skyline
from schubitope.fillings import rank_diagram, vertex_vector
from schubitope.perms import vertex_compositions
from schubitope.polytope import (
    HRep,
    certify_vertices,
    column_word,
    edmonds_vertex,
    hrep,
    hrep_from_json_dict,
    hrep_to_hform,
    hrep_to_json_dict,
    member,
    schubert_matroid_bases,
    theta,
    theta_columns,
    vertex_set_from_json_dict,
    vertex_set_to_json_dict,
    vertices,
)


def subsets(n):
    for mask in range(2 ** n):
        yield frozenset(i for i in range(1, n + 1) if (mask >> (i - 1)) & 1)


class TestColumnWord:
    def test_intro_figure_words(self):
        s = {1, 3}
        assert [column_word(D9, j, s) for j in range(1, 6)] == ["★())", "(★", "(()", "()★)", "()("]

    def test_empty_subset_has_only_closers(self):
        for j in range(1, 6):
            assert set(column_word(D9, j, set())) <= {")"}

    def test_column_out_of_range(self):
        with pytest.raises(ValueError, match="column"):
            column_word(D9, 6, {1})

    def test_subset_out_of_range(self):
        with pytest.raises(ValueError, match="subset"):
            column_word(D9, 1, {0})


class TestTheta:
    def test_intro_figure_values(self):
        assert theta_columns(D9, {1, 3}) == [2, 1, 1, 2, 1]
        assert theta(D9, {1, 3}) == 7

    def test_empty_diagram(self):
        assert theta(Diagram(3, frozenset()), {1, 2}) == 0

    def test_skyline_example(self):
        # frozen from the per-column word computation; equals the matroid rank
        assert theta(skyline((1, 0, 3)), {2, 3}) == 3
        assert theta(skyline((1, 0, 3)), {2, 3}) == rank_diagram(skyline((1, 0, 3)), {2, 3})

    def test_full_subset_counts_boxes(self):
        rng = random.Random(3)
        for _ in range(5):
            d = random_diagram(rng, 4)
            assert theta(d, {1, 2, 3, 4}) == d.size


class TestHRep:
    def test_trapezoid_bounds(self):
        h = hrep(skyline((1, 0, 3)))
        assert h.total == 4
        assert {tuple(sorted(s)): b for s, b in h.bounds.items()} == {
            (1,): 3, (2,): 3, (3,): 3, (1, 2): 4, (1, 3): 4, (2, 3): 3,
        }

    def test_empty_diagram(self):
        h = hrep(Diagram(2, frozenset()))
        assert h.total == 0 and all(b == 0 for b in h.bounds.values())

    def test_single_box(self):
        h = hrep(Diagram(2, frozenset({(1, 1)})))
        assert h.total == 1
        assert h.bounds[frozenset({1})] == 1
        assert h.bounds[frozenset({2})] == 0

    def test_requires_all_proper_subsets(self):
        with pytest.raises(ValueError, match="proper nonempty"):
            HRep(2, 1, {frozenset({1}): 1})

    def test_rejects_negative_bound(self):
        with pytest.raises(ValueError, match="non-negative"):
            HRep(2, 1, {frozenset({1}): -1, frozenset({2}): 0})

    def test_dimension_cap(self):
        with pytest.raises(ValueError, match="cap"):
            hrep(Diagram(13, frozenset()))


class TestMember:
    def test_inside_point(self):
        assert member(hrep(skyline((1, 0, 3))), (2, 1, 1))

    def test_violates_singleton_bound(self):
        assert not member(hrep(skyline((1, 0, 3))), (4, 0, 0))

    def test_all_sweep_vectors_are_members(self):
        rng = random.Random(5)
        for _ in range(5):
            d = random_diagram(rng, 4)
            h = hrep(d)
            for w in itertools.permutations(range(1, 5)):
                assert member(h, vertex_vector(d, w))

    def test_rational_point(self):
        h = hrep(Diagram(2, frozenset({(2, 1)})))
        assert member(h, (Fraction(1, 2), Fraction(1, 2)))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            member(hrep(TRAPEZOID), (1, 1))


class TestSchubertMatroidBases:
    def test_two_element_example(self):
        assert schubert_matroid_bases({1, 3}, 3) == {frozenset({1, 2}), frozenset({1, 3})}

    def test_top_singleton(self):
        assert schubert_matroid_bases({4}, 4) == {frozenset({i}) for i in range(1, 5)}

    def test_empty_set(self):
        assert schubert_matroid_bases(set(), 3) == {frozenset()}

    def test_counts_against_gale_definition(self):
        for s in subsets(5):
            bases = schubert_matroid_bases(s, 5)
            expect = {
                frozenset(t)
                for t in itertools.combinations(range(1, 6), len(s))
                if all(a <= b for a, b in zip(t, sorted(s)))
            }
            assert bases == expect


class TestEdmondsVertex:
    def test_matches_intro_vector(self):
        d = skyline((1, 0, 3))
        assert edmonds_vertex(lambda s: rank_diagram(d, s), (2, 1, 3)) == (1, 3, 0)

    def test_zero_function(self):
        assert edmonds_vertex(lambda s: 0, (3, 1, 2)) == (0, 0, 0)

    def test_modular_function(self):
        c = (5, 2, 7)
        f = lambda s: sum(c[i - 1] for i in s)
        for w in itertools.permutations(range(1, 4)):
            assert edmonds_vertex(f, w) == c

    def test_agrees_with_filling_on_random_diagrams(self):
        rng = random.Random(9)
        for _ in range(10):
            d = random_diagram(rng, 4)
            f = lambda s: rank_diagram(d, s)
            for w in itertools.permutations(range(1, 5)):
                assert edmonds_vertex(f, w) == vertex_vector(d, w)

    def test_prefix_tightness(self):
        rng = random.Random(13)
        for _ in range(5):
            d = random_diagram(rng, 4)
            for w in itertools.permutations(range(1, 5)):
                x = vertex_vector(d, w)
                prefix = set()
                for k in w:
                    prefix.add(k)
                    assert sum(x[i - 1] for i in prefix) == rank_diagram(d, prefix) == theta(d, prefix)


class TestVertices:
    def test_trapezoid(self):
        assert vertices(TRAPEZOID) == TRAPEZOID_VERTICES

    def test_point_polytope(self):
        assert vertices(Diagram(3, frozenset({(1, 1)}))) == {(1, 0, 0)}

    def test_skylines_match_lower_intervals(self):
        for n in range(1, 4):
            for alpha in itertools.product(range(min(n, 3) + 1), repeat=n):
                assert vertices(skyline(alpha)) == set(vertex_compositions(alpha)), alpha

    def test_rothe_1432_matches_exponent_hull(self):
        from schubitope.lp import hull_vertices
        from schubitope.polyoracle import newton_exponents, schubert_polynomial

        swept = vertices(rothe((1, 4, 3, 2)))
        support = newton_exponents(schubert_polynomial((1, 4, 3, 2)))
        assert hull_vertices(support) == swept

    def test_sweep_cap(self):
        with pytest.raises(ValueError, match="budget"):
            vertices(Diagram(9, frozenset()))


class TestCertify:
    def test_trapezoid_passes(self):
        cert = certify_vertices(hrep(TRAPEZOID), TRAPEZOID_VERTICES)
        assert cert.ok and cert.method == "greedy" and cert.failures == ()

    def test_segment_passes(self):
        h = hrep(Diagram(2, frozenset({(2, 1)})))
        assert certify_vertices(h, {(1, 0), (0, 1)}).ok

    def test_missing_vertex_fails_with_witness(self):
        cert = certify_vertices(hrep(TRAPEZOID), TRAPEZOID_VERTICES - {(3, 1, 0)})
        assert not cert.ok
        assert any("(3, 1, 0)" in f and "missing" in f for f in cert.failures)

    def test_interior_point_fails_as_non_vertex(self):
        cert = certify_vertices(hrep(TRAPEZOID), TRAPEZOID_VERTICES | {(2, 1, 1)})
        assert not cert.ok
        assert any("(2, 1, 1)" in f and "not a vertex" in f for f in cert.failures)

    def test_outside_point_fails_membership(self):
        cert = certify_vertices(hrep(TRAPEZOID), TRAPEZOID_VERTICES | {(4, 0, 0)})
        assert not cert.ok
        assert any("violates" in f for f in cert.failures)

    def test_non_submodular_bounds_use_intersection_fallback(self):
        # f({1}) + f({2}) < f({1,2}) + f({}) breaks submodularity; the only
        # feasible point is (0, 0, 1)
        bounds = {
            frozenset({1}): 0, frozenset({2}): 0, frozenset({3}): 1,
            frozenset({1, 2}): 1, frozenset({1, 3}): 1, frozenset({2, 3}): 1,
        }
        h = HRep(3, 1, bounds)
        cert = certify_vertices(h, {(0, 0, 1)})
        assert cert.ok and cert.method == "intersection"
        missing = certify_vertices(h, set())
        assert not missing.ok

    def test_single_column_polytopes_have_basis_vertices(self):
        for n in range(1, 6):
            for rows in subsets(n):
                d = Diagram(n, frozenset((r, 1) for r in rows))
                expect = {
                    tuple(int(i in b) for i in range(1, n + 1))
                    for b in schubert_matroid_bases(rows, n)
                }
                got = vertices(d)
                assert got == expect, rows
                assert certify_vertices(hrep(d), got).ok

    def test_dimension_cap(self):
        with pytest.raises(ValueError, match="cap"):
            certify_vertices(HRep(7, 0, {s: 0 for s in subsets(7) if 0 < len(s) < 7}), set())


class TestThetaRankIdentity:
    def test_exhaustive_small(self):
        for n in range(1, 4):
            grid = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
            for bits in range(2 ** len(grid)):
                d = Diagram(n, frozenset(b for k, b in enumerate(grid) if (bits >> k) & 1))
                for s in subsets(n):
                    assert theta(d, s) == rank_diagram(d, s), (d, s)

    def test_sampled_n4(self):
        rng = random.Random(17)
        for _ in range(25):
            d = random_diagram(rng, 4)
            for s in subsets(4):
                assert theta(d, s) == rank_diagram(d, s)


class TestMinkowskiDecomposition:
    def test_vertices_decompose_into_column_vertices(self):
        rng = random.Random(23)
        for _ in range(5):
            d = random_diagram(rng, 3)
            h = hrep(d)
            per_column = [
                [tuple(int(i in b) for i in range(1, 4)) for b in schubert_matroid_bases(col, 3)]
                for col in d.columns
            ]
            sums = set()
            for combo in itertools.product(*per_column):
                point = tuple(map(sum, zip(*combo)))
                sums.add(point)
                assert member(h, point)
            assert vertices(d) <= sums


class TestSerialization:
    def test_hrep_json_golden(self):
        doc = hrep_to_json_dict(hrep(Diagram(2, frozenset({(1, 1)}))))
        assert doc == {"n": 2, "total": 1, "bounds": [{"S": [1], "b": 1}, {"S": [2], "b": 0}]}

    def test_hrep_json_round_trip_bit_identical(self):
        doc = json.dumps(hrep_to_json_dict(hrep(TRAPEZOID)))
        again = json.dumps(hrep_to_json_dict(hrep_from_json_dict(json.loads(doc))))
        assert doc == again

    def test_hrep_json_errors(self):
        with pytest.raises(ValueError, match="missing field 'total'"):
            hrep_from_json_dict({"n": 2, "bounds": []})
        with pytest.raises(ValueError, match="duplicate"):
            hrep_from_json_dict({"n": 2, "total": 1, "bounds": [
                {"S": [1], "b": 1}, {"S": [1], "b": 2}]})

    def test_hform_golden(self):
        text = hrep_to_hform(hrep(skyline((1, 0, 3))))
        assert text == "3 4\n1 3\n2 3\n3 4\n4 3\n5 4\n6 3"

    def test_vertex_set_json_sorted(self):
        doc = vertex_set_to_json_dict(TRAPEZOID_VERTICES)
        assert doc == {"vertices": [[1, 0, 3], [1, 3, 0], [3, 0, 1], [3, 1, 0]]}
        assert vertex_set_from_json_dict(doc) == TRAPEZOID_VERTICES
