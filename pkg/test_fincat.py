#!/usr/bin/env python3
"""
Tests for the finite-category core: composition tables, classification,
factorisation, heights, hypotheses and levels.
"""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from model.errors import AxiomViolation, BudgetExceeded, MalformedInput, UnknownMorphism, UnknownObject  # noqa: E402
from model.fincat import (FactorizationMode, category_to_dict, check_hypotheses, classify_morphism,  # noqa: E402
                          enumerate_levels, extreme_objects, factorize, height, heights, is_extreme, is_iso,
                          is_minimal_object, is_mono, is_preorder, level_e, min_full_subcategory, minimal_objects,
                          poset_reflection, slice_category, terminal_object, validate_category)
from model.fincat.levels import DEFAULT_LEVEL_BUDGET  # noqa: E402
from model.geometry import level_e_site  # noqa: E402
from model.order import (INF, NEG_INF, format_extended, from_json_extended, parse_extended,  # noqa: E402
                         to_json_extended)
from model.sites import (build_cyclic_group, build_delta, build_finset, build_idempotent_monoid,  # noqa: E402
                         build_iso_pair, build_parallel_arrows)


@pytest.fixture(scope="module")
def delta1():
    return build_delta(1)


@pytest.fixture(scope="module")
def delta2():
    return build_delta(2)


def _two_object_raw(compose):
    return {
        "name": "broken",
        "objects": ["a", "b"],
        "morphisms": [{"id": "1a", "dom": "a", "cod": "a"}, {"id": "1b", "dom": "b", "cod": "b"},
                      {"id": "f", "dom": "a", "cod": "b"}, {"id": "g", "dom": "b", "cod": "a"}],
        "identities": {"a": "1a", "b": "1b"},
        "compose": compose,
    }


class TestComposition:
    def test_morphism_counts(self):
        assert build_delta(1).n_morphisms == 7
        assert build_delta(2).n_morphisms == 31
        assert build_delta(3).n_morphisms == 121
        assert build_finset(2).n_morphisms == 8

    def test_compose_monotone_maps(self, delta1):
        face, degeneracy = delta1.index("d1:0"), delta1.index("d0:00")
        assert delta1.compose(degeneracy, face) == delta1.identity("[0]")
        assert delta1.label(delta1.compose(face, degeneracy)) == "d1:00"

    def test_compose_rejects_non_composable(self, delta1):
        with pytest.raises(MalformedInput):
            delta1.compose(delta1.index("d1:0"), delta1.index("d1:1"))

    def test_unknown_ids(self, delta1):
        with pytest.raises(UnknownMorphism):
            delta1.index("d7:0")
        with pytest.raises(UnknownObject):
            delta1.hom("[0]", "[5]")

    def test_hom_sets_follow_id_order(self, delta1):
        assert [delta1.label(f) for f in delta1.out_of("[1]")] == ["d0:00", "d1:00", "d1:01", "d1:11"]
        assert [delta1.label(f) for f in delta1.hom("[0]", "[1]")] == ["d1:0", "d1:1"]


class TestValidation:
    def test_round_trip_through_dict(self, delta2):
        again = validate_category(category_to_dict(delta2))
        assert again.name == "delta:2"
        assert [m.id for m in again.morphisms] == [m.id for m in delta2.morphisms]
        assert np.array_equal(again.table, delta2.table)

    def test_missing_identity(self):
        raw = _two_object_raw([])
        del raw["identities"]["b"]
        with pytest.raises(AxiomViolation) as info:
            validate_category(raw)
        assert info.value.violations[0] == ("missing identity", ("b",))

    def test_missing_composite_is_reported(self):
        with pytest.raises(AxiomViolation) as info:
            validate_category(_two_object_raw([]))
        assert any(kind == "missing composite" for kind, _ in info.value.violations)

    def test_composite_with_wrong_endpoints(self):
        raw = _two_object_raw([["g", "f", "1a"], ["f", "g", "1b"], ["1a", "g", "1a"]])
        with pytest.raises(AxiomViolation):
            validate_category(raw)

    def test_isomorphic_pair_is_valid(self):
        cat = validate_category(_two_object_raw([["g", "f", "1a"], ["f", "g", "1b"]]))
        assert cat.n_morphisms == 4
        assert is_preorder(cat)

    def test_unknown_object_in_morphism(self):
        raw = _two_object_raw([])
        raw["morphisms"].append({"id": "h", "dom": "a", "cod": "c"})
        with pytest.raises(MalformedInput):
            validate_category(raw)

    def test_empty_category(self):
        cat = validate_category({"objects": [], "morphisms": [], "identities": {}})
        assert cat.n_morphisms == 0
        assert terminal_object(cat) is None


class TestClassification:
    def test_face_and_degeneracy(self, delta1):
        face = classify_morphism(delta1, "d1:0")
        assert face.mono and face.split_mono and not face.epi and not face.iso
        degeneracy = classify_morphism(delta1, "d0:00")
        assert degeneracy.epi and degeneracy.split_epi and degeneracy.strong_epi and not degeneracy.mono

    def test_audit_agrees_with_split_shortcut(self, delta2):
        for f in range(delta2.n_morphisms):
            assert classify_morphism(delta2, f).strong_epi == classify_morphism(delta2, f, audit=True).strong_epi

    def test_groupoid_morphisms_are_isos(self):
        cat = build_cyclic_group(4)
        assert all(classify_morphism(cat, f).iso for f in range(cat.n_morphisms))

    def test_factorize_constant_map(self, delta1):
        e, m = factorize(delta1, "d1:00")
        assert (delta1.label(e), delta1.label(m)) == ("d0:00", "d1:0")
        assert delta1.compose(m, e) == delta1.index("d1:00")

    def test_strong_epi_mode_matches_in_delta(self, delta2):
        for f in range(delta2.n_morphisms):
            assert factorize(delta2, f, FactorizationMode.STRONG_EPI) == factorize(delta2, f, "split_epi")


class TestStructure:
    def test_heights_in_delta(self):
        cat = build_delta(4)
        assert heights(cat) == {f"[{m}]": m for m in range(5)}

    def test_heights_in_finset(self):
        cat = build_finset(4)
        assert all(height(cat, str(m)) == m - 1 for m in range(1, 5))

    @pytest.mark.parametrize("builder", [lambda: build_delta(3), lambda: build_finset(3), build_parallel_arrows,
                                         build_iso_pair, lambda: build_cyclic_group(4)])
    def test_heights_grow_along_monos(self, builder):
        cat = builder()
        hs = heights(cat)
        for f in range(cat.n_morphisms):
            if not is_mono(cat, f):
                continue
            if is_iso(cat, f):
                assert hs[cat.dom(f)] == hs[cat.cod(f)]
            else:
                assert hs[cat.dom(f)] < hs[cat.cod(f)]

    def test_minimal_and_extreme_objects(self, delta2):
        assert minimal_objects(delta2) == ["[0]"]
        assert is_minimal_object(delta2, "[0]")
        assert not is_extreme(delta2, "[0]")
        assert not is_minimal_object(delta2, "[1]")
        assert extreme_objects(build_iso_pair()) == ["a", "b"]

    def test_min_full_subcategory(self, delta2):
        sub = min_full_subcategory(delta2)
        assert sub.objects == ("[0]",)
        assert sub.n_morphisms == 1
        groupoid = build_iso_pair()
        assert min_full_subcategory(groupoid).objects == groupoid.objects

    def test_terminal_object(self, delta2):
        assert terminal_object(delta2) == "[0]"
        assert terminal_object(build_parallel_arrows()) is None

    def test_preorder_and_reflection(self):
        arrows = build_parallel_arrows()
        assert not is_preorder(arrows)
        assert poset_reflection(arrows) == {"a": ["a", "b"], "b": ["b"]}

    def test_slice_of_representable(self, delta1):
        assert len(slice_category(delta1, "[1]").objects) == 5


class TestHypotheses:
    @pytest.mark.parametrize("builder", [lambda: build_delta(2), lambda: build_finset(2), build_parallel_arrows,
                                         build_cyclic_group, build_iso_pair])
    def test_bundled_sites_satisfy_hypotheses(self, builder):
        report = check_hypotheses(builder())
        assert report.all_hold
        assert report.failed() == []

    def test_idempotent_monoid_fails_factorization(self):
        report = check_hypotheses(build_idempotent_monoid())
        assert not report.split_epi_mono_factorization
        assert report.witnesses["split_epi_mono_factorization"] == ["e"]
        assert "split_epi_mono_factorization" in report.to_dict()["witnesses"]


class TestLevels:
    def test_truncation_levels_of_delta2(self, delta2):
        levels = enumerate_levels(delta2)
        assert len(levels) == 4
        subcategories = sorted(len(level.full_subcategory) for level in levels)
        assert subcategories == [0, 1, 2, 3]
        assert level_e(levels).full_subcategory == frozenset({"[0]"})

    def test_level_e_sites(self, delta2):
        assert level_e_site(delta2).objects == ("[0]",)
        assert level_e_site(build_finset(2)).objects == ("1",)
        assert level_e_site(build_iso_pair()).objects == ("a", "b")

    def test_level_json(self, delta2):
        level = level_e(enumerate_levels(delta2))
        raw = level.to_dict(delta2)
        assert raw["full_subcategory"] == ["[0]"]
        assert raw["level_e"] and raw["all_monic"]

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_levels(build_delta(3), DEFAULT_LEVEL_BUDGET)

    def test_empty_category_has_one_level(self):
        empty = validate_category({"objects": [], "morphisms": [], "identities": {}})
        levels = enumerate_levels(empty)
        assert len(levels) == 1
        assert levels[0].ideal == frozenset()
        assert levels[0].full_subcategory == frozenset()
        assert level_e(levels) is levels[0]

    def test_group_has_two_levels(self):
        levels = enumerate_levels(build_cyclic_group(4))
        assert [len(level.ideal) for level in levels] == [0, 4]
        assert [level.full_subcategory for level in levels] == [frozenset(), frozenset({"*"})]
        assert level_e(levels).full_subcategory == frozenset({"*"})


class TestExtendedNaturals:
    @pytest.mark.parametrize("value,text", [(NEG_INF, "-inf"), (INF, "inf"), (0, "0"), (3, "3")])
    def test_format_and_parse(self, value, text):
        assert format_extended(value) == text
        assert parse_extended(text) == value
        assert from_json_extended(to_json_extended(value)) == value

    def test_negative_numbers_are_rejected(self):
        with pytest.raises(ValueError):
            parse_extended("-2")
