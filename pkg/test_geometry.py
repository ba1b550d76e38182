#!/usr/bin/env python3
"""
Tests for figures, minimal-figure sites, skeleta, dimension, depth and the
dimension theorem verifier.
"""

import json
import os
import sys
from itertools import product

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from model.errors import HypothesisFailed  # noqa: E402
from model.geometry import (EQUIVALENT, ONE_WAY_ONLY, DimensionReport, SkeletonMethod, depth, dim,  # noqa: E402
                            heights_bound_figures, is_minimal_element, is_non_singular,
                            is_preterminal_by_coequalizers, is_preterminal_element, is_strongly_regular,
                            min_site, minimal_cover, minimal_elements, preterminal_elements, regularity_report,
                            skeleta_agree, skeleton, subpreterminal_violations, verify_dimension_theorem)
from model.logic import ibd_sieve_char  # noqa: E402
from model.order import INF, NEG_INF  # noqa: E402
from model.presheaf import coproduct, empty_presheaf, terminal_presheaf, yoneda  # noqa: E402
from model.sites import boundary, build_delta, build_finset, build_idempotent_monoid, collapsed_z, loop_y  # noqa: E402

DELTA1 = build_delta(1)
DELTA2 = build_delta(2)

Y = loop_y(DELTA2)
Z = collapsed_z(DELTA2)
TRIANGLE = yoneda(DELTA2, "[2]")


def _triangle_of(X):
    (index,) = [i for i in range(X.size("[2]")) if is_minimal_element(X, "[2]", i)]
    return X.elements["[2]"][index]


class TestFigures:
    def test_representable_figures(self):
        minimal = minimal_elements(TRIANGLE)
        assert len(minimal) == 7
        assert sorted(c for _, c in minimal) == ["[0]"] * 3 + ["[1]"] * 3 + ["[2]"]
        assert preterminal_elements(TRIANGLE) == minimal

    def test_loop_figures(self):
        assert [c for _, c in minimal_elements(Y)] == ["[0]", "[1]"]
        assert [c for _, c in preterminal_elements(Y)] == ["[0]"]

    def test_regularity_of_examples(self):
        assert is_strongly_regular(Y) and not is_non_singular(Y)
        assert not is_strongly_regular(Z)
        assert is_strongly_regular(TRIANGLE) and is_non_singular(TRIANGLE)

    def test_witnesses(self):
        report = regularity_report(Z)
        morphism, domain, codomain = report.strong_regularity_witness
        assert domain.endswith("@[1]") and codomain.endswith("@[2]")
        assert regularity_report(Y).singularity_witness[0].endswith("@[1]")

    @pytest.mark.parametrize("X", [Y, Z, TRIANGLE, boundary(DELTA2, "[2]")], ids=lambda X: X.name)
    def test_coequaliser_criterion_matches_definition(self, X):
        for c, i in X.iter_elements():
            assert is_preterminal_by_coequalizers(X, c, i) == is_preterminal_element(X, c, i)

    @pytest.mark.parametrize("X", [Y, Z, TRIANGLE], ids=lambda X: X.name)
    def test_subpreterminal_stability(self, X):
        assert subpreterminal_violations(X) == []


class TestMinSite:
    def test_loop_site_is_not_a_preorder(self):
        site = min_site(loop_y(DELTA1))
        assert len(site) == 2
        assert not site.localic
        assert site.etendue
        parallel = site.site.hom(*site.site.objects)
        assert len(parallel) == 2

    def test_collapsed_triangle_reflects_to_a_chain(self):
        site = min_site(Z)
        assert len(site) == 2
        assert not site.localic
        point, triangle = site.site.objects
        assert site.poset_reflection() == {point: [point, triangle], triangle: [triangle]}

    def test_collapsed_triangle_site_has_three_parallel_arrows(self):
        cat = min_site(Z).site
        point, triangle = cat.objects
        assert len(cat.hom(point, triangle)) == 3
        assert len(cat.hom(triangle, point)) == 0
        assert len(cat.hom(point, point)) == len(cat.hom(triangle, triangle)) == 1
        assert cat.n_morphisms == 5

    def test_face_poset(self):
        site = min_site(TRIANGLE)
        assert len(site) == 7
        assert site.localic

    def test_labels_point_back_to_elements(self):
        site = min_site(Y)
        for name, (x, c) in site.labels.items():
            assert name == f"{x}@{c}"


class TestSkeleton:
    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_dimension_of_representables(self, n):
        assert dim(yoneda(DELTA2, f"[{n}]")) == n

    def test_extended_arguments(self):
        assert skeleton(Z, NEG_INF).is_bottom()
        assert skeleton(Z, INF).is_top()

    def test_skeleta_of_collapsed_triangle(self):
        assert skeleton(Z, 0).sizes() == (1, 1, 1)
        assert skeleton(Z, 1).sizes() == (1, 1, 1)
        assert skeleton(Z, 2).is_top()
        assert dim(Z) == 2

    @pytest.mark.parametrize("X", [Y, Z, TRIANGLE], ids=lambda X: X.name)
    def test_methods_agree(self, X):
        for n in range(3):
            assert skeleta_agree(X, n)
            assert skeleton(X, n, "strong_epi") == skeleton(X, n, SkeletonMethod.GENERAL)

    @pytest.mark.parametrize("X", [Y, Z, TRIANGLE], ids=lambda X: X.name)
    def test_skeleta_are_nested_subpresheaves(self, X):
        for n in range(2):
            assert skeleton(X, n).is_closed()
            assert skeleton(X, n).leq(skeleton(X, n + 1))
        assert skeleton(X, 2).leq(skeleton(X, INF))

    @pytest.mark.parametrize("X", [Y, Z, TRIANGLE], ids=lambda X: X.name)
    def test_skeleton_of_a_skeleton(self, X):
        for n, m in product(range(3), repeat=2):
            inner, _ = skeleton(X, m).as_presheaf()
            twice = skeleton(inner, n)
            once = skeleton(X, min(n, m))
            for c in DELTA2.objects:
                assert {inner.elements[c][i] for i in twice.at(c)} == set(once.ids_at(c))

    def test_empty_presheaf(self):
        assert dim(empty_presheaf(DELTA2)) == NEG_INF

    def test_strong_epi_form_needs_factorization(self):
        X = terminal_presheaf(build_idempotent_monoid())
        with pytest.raises(HypothesisFailed):
            skeleton(X, 0, SkeletonMethod.STRONG_EPI)


class TestDepth:
    def test_depths(self):
        assert depth(Z) == 1
        assert depth(Y) == 1
        assert depth(TRIANGLE) == 2
        assert depth(empty_presheaf(DELTA2)) == NEG_INF

    def test_height_form_fails_without_strong_regularity(self):
        assert not heights_bound_figures(Z, 1)
        assert heights_bound_figures(Z, 2)
        assert ibd_sieve_char(min_site(Z).site, 1).covers_all()

    def test_minimal_cover_of_degenerate_edge(self):
        edge = Z.elements["[1]"][0]
        point = Z.elements["[0]"][0]
        assert minimal_cover(Z, "[1]", edge) == ("d0:00", (point, "[0]"))

    def test_minimal_cover_of_minimal_element(self):
        triangle = _triangle_of(Z)
        assert minimal_cover(Z, "[2]", triangle) == ("d2:012", (triangle, "[2]"))

    def test_minimal_cover_of_degenerate_simplex(self):
        X = yoneda(DELTA2, "[1]")
        e, (y, d) = minimal_cover(X, "[2]", "d1:001")
        assert d == "[1]"
        assert X.act(y, e) == "d1:001"

    def test_minimal_cover_needs_factorization(self):
        X = terminal_presheaf(build_idempotent_monoid())
        with pytest.raises(HypothesisFailed):
            minimal_cover(X, "*", "*")


class TestDimensionTheorem:
    def test_loop_is_equivalent(self):
        report = verify_dimension_theorem(Y)
        assert report.theorem_status == EQUIVALENT
        assert (report.dim, report.depth) == (1, 1)
        assert report.strongly_regular and not report.non_singular
        assert not report.localic

    def test_collapsed_triangle_is_one_way(self):
        report = verify_dimension_theorem(Z)
        assert report.theorem_status == ONE_WAY_ONLY
        assert (report.dim, report.depth) == (2, 1)
        assert "strong_regularity" in report.witnesses
        row = next(row for row in report.table if row["n"] == 1)
        assert row == {"n": 1, "dim_le_n": False, "ibd_n": True}

    def test_empty_presheaf(self):
        report = verify_dimension_theorem(empty_presheaf(DELTA2))
        assert report.theorem_status == EQUIVALENT
        assert report.dim == report.depth == NEG_INF

    def test_table_covers_extended_rows(self):
        report = verify_dimension_theorem(TRIANGLE, n_max=3)
        assert [row["n"] for row in report.table] == [NEG_INF, 0, 1, 2, 3, INF]
        assert report.table[0] == {"n": NEG_INF, "dim_le_n": False, "ibd_n": False}
        assert report.theorem_status == EQUIVALENT

    def test_coproducts_and_finset(self):
        total, _, _ = coproduct(Y, TRIANGLE)
        report = verify_dimension_theorem(total)
        assert (report.dim, report.depth) == (2, 2)
        finset = build_finset(2)
        assert verify_dimension_theorem(yoneda(finset, "2")).dim == 1

    def test_json_round_trip(self):
        report = verify_dimension_theorem(Z)
        raw = json.loads(json.dumps(report.to_dict()))
        assert raw["table"][0]["n"] == "-inf"
        assert DimensionReport.from_dict(raw) == report

    def test_hypotheses_are_required(self):
        with pytest.raises(HypothesisFailed):
            verify_dimension_theorem(terminal_presheaf(build_idempotent_monoid()))
