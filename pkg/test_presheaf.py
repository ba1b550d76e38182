#!/usr/bin/env python3
"""
Tests for finite presheaves: Yoneda, maps, colimits, the category of
elements, subobject lattices and the subobject classifier.
"""

import os
import sys
from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from model.errors import (AxiomViolation, BudgetExceeded, MalformedInput, NotInLattice, NotNatural,  # noqa: E402
                          ParentMismatch, UnknownElement)
from model.presheaf import (SubobjectLattice, boundary, bottom, characteristic, classified_subobject,  # noqa: E402
                            classifying_point, coequalizer, compose_maps, coproduct, elements_category,
                            empty_presheaf, gamma, generated, global_element, heyting, image_of_element, implies,
                            is_isomorphic, join, make_map, make_presheaf, meet, negate, object_sieves, omega,
                            point_to_object_sieve, presheaf_from_dict, pushout, sieves_on, subtract,
                            terminal_presheaf, to_terminal, top, yoneda)
from model.sites import build_chain2, build_delta, build_finset, loop_y  # noqa: E402

DELTA1 = build_delta(1)
DELTA2 = build_delta(2)
FINSET2 = build_finset(2)

LATTICES = [SubobjectLattice(yoneda(DELTA1, "[1]")), SubobjectLattice(yoneda(FINSET2, "2"))]
TARGETS = [loop_y(DELTA1), yoneda(DELTA1, "[1]"), terminal_presheaf(DELTA1)]


def natural_maps(source, target):
    """Every natural map source → target, by trying all component tables."""
    objects = source.base.objects
    tables = [product(range(target.size(c)), repeat=source.size(c)) for c in objects]
    found = []
    for combo in product(*tables):
        try:
            found.append(make_map(source, target, dict(zip(objects, combo))))
        except NotNatural:
            continue
    return found


def key(m):
    return tuple(m.components[c] for c in m.source.base.objects)


class TestPresheaf:
    def test_representable_sizes(self):
        Y = yoneda(DELTA1, "[1]")
        assert Y.sizes() == (2, 3)
        assert Y.at("[0]") == ("d1:0", "d1:1")
        assert yoneda(DELTA2, "[2]").sizes() == (3, 6, 10)

    def test_action_is_precomposition(self):
        Y = yoneda(DELTA1, "[1]")
        assert Y.act("d1:01", "d1:0") == "d1:0"
        assert Y.act("d1:11", "d1:0") == "d1:1"
        assert Y.act("d1:00", "d1:1") == "d1:0"

    def test_unknown_element(self):
        with pytest.raises(UnknownElement):
            yoneda(DELTA1, "[1]").position("[0]", "d1:01")

    def test_identity_law_is_checked(self):
        chain = build_chain2()
        with pytest.raises(AxiomViolation):
            make_presheaf(chain, {"0": ["a", "b"], "1": ["c"]}, [(1, 0), (0,), (0,)])

    def test_action_out_of_range(self):
        chain = build_chain2()
        with pytest.raises(MalformedInput):
            make_presheaf(chain, {"0": ["a"], "1": ["c"]}, [(0,), (0,), (3,)])

    def test_dict_round_trip(self):
        Y = yoneda(DELTA2, "[1]")
        again = presheaf_from_dict(DELTA2, Y.to_dict())
        assert again.elements == Y.elements
        assert again.action == Y.action
        assert again.name == "y([1])"

    def test_missing_action(self):
        raw = yoneda(DELTA1, "[1]").to_dict()
        del raw["action"]["d1:0"]
        with pytest.raises(MalformedInput):
            presheaf_from_dict(DELTA1, raw)

    def test_terminal_and_empty(self):
        assert terminal_presheaf(DELTA2).sizes() == (1, 1, 1)
        assert empty_presheaf(DELTA2).is_empty()


class TestMaps:
    def test_naturality(self):
        one, Y = terminal_presheaf(DELTA1), yoneda(DELTA1, "[1]")
        make_map(one, Y, {"[0]": [0], "[1]": [0]})
        with pytest.raises(NotNatural) as info:
            make_map(one, Y, {"[0]": [0], "[1]": [2]})
        assert info.value.square[0] == "d1:0"

    def test_global_element_and_terminal_map(self):
        one, Y = terminal_presheaf(DELTA1), yoneda(DELTA1, "[1]")
        point = global_element(Y, one, "[0]", "d1:1")
        assert point.is_natural()
        assert Y.element_id("[1]", point.apply("[1]", 0)) == "d1:11"
        assert to_terminal(Y, one).is_natural()

    def test_maps_need_a_common_base(self):
        with pytest.raises(MalformedInput):
            make_map(terminal_presheaf(DELTA1), terminal_presheaf(DELTA2), {})


class TestColimits:
    def test_coproduct(self):
        X, Y = yoneda(DELTA1, "[0]"), yoneda(DELTA1, "[1]")
        total, left, right = coproduct(X, Y, name="sum")
        assert total.sizes() == (3, 4)
        assert total.at("[0]")[0] == "0.d0:0"
        assert left.is_natural() and right.is_natural() and left.is_mono()
        assert is_isomorphic(total, coproduct(Y, X)[0])

    def test_coequalizer_of_two_points(self):
        one, Y = terminal_presheaf(DELTA1), yoneda(DELTA1, "[1]")
        p = global_element(Y, one, "[0]", "d1:0")
        q = global_element(Y, one, "[0]", "d1:1")
        quotient, projection = coequalizer(p, q, name="loop")
        assert quotient.sizes() == (1, 2)
        assert projection.is_natural()
        assert projection.image_sizes() == (1, 2)

    def test_pushout_collapsing_the_boundary(self):
        Y2 = yoneda(DELTA2, "[2]")
        faces = generated(Y2, [("[1]", Y2.position("[1]", label)) for label in ("d2:01", "d2:02", "d2:12")])
        B, inclusion = faces.as_presheaf(name="B")
        assert B.sizes() == (3, 6, 9)
        Z, from_point, from_triangle = pushout(to_terminal(B, terminal_presheaf(DELTA2)), inclusion)
        assert Z.sizes() == (1, 1, 2)
        assert from_point.is_natural() and from_triangle.is_natural()

    def test_coequalizer_needs_parallel_maps(self):
        one, Y = terminal_presheaf(DELTA1), yoneda(DELTA1, "[1]")
        p = global_element(Y, one, "[0]", "d1:0")
        with pytest.raises(MalformedInput):
            coequalizer(p, to_terminal(Y, one))

    @pytest.mark.parametrize("target", TARGETS, ids=lambda T: T.name)
    def test_coproduct_is_universal(self, target):
        X, Y = yoneda(DELTA1, "[0]"), yoneda(DELTA1, "[1]")
        total, left, right = coproduct(X, Y)
        factored = Counter((key(compose_maps(m, left)), key(compose_maps(m, right)))
                           for m in natural_maps(total, target))
        cocones = {(key(a), key(b)) for a in natural_maps(X, target) for b in natural_maps(Y, target)}
        assert cocones
        assert set(factored) == cocones
        assert set(factored.values()) == {1}

    @pytest.mark.parametrize("target", TARGETS, ids=lambda T: T.name)
    def test_coequalizer_is_universal(self, target):
        one, Y = terminal_presheaf(DELTA1), yoneda(DELTA1, "[1]")
        p = global_element(Y, one, "[0]", "d1:0")
        q = global_element(Y, one, "[0]", "d1:1")
        quotient, projection = coequalizer(p, q)
        factored = Counter(key(compose_maps(m, projection)) for m in natural_maps(quotient, target))
        cocones = {key(g) for g in natural_maps(Y, target) if key(compose_maps(g, p)) == key(compose_maps(g, q))}
        assert cocones
        assert set(factored) == cocones
        assert set(factored.values()) == {1}

    @pytest.mark.parametrize("target", TARGETS, ids=lambda T: T.name)
    def test_pushout_is_universal(self, target):
        one, Y = terminal_presheaf(DELTA1), yoneda(DELTA1, "[1]")
        ends, inclusion = generated(Y, [("[0]", 0), ("[0]", 1)]).as_presheaf(name="ends")
        collapse = to_terminal(ends, one)
        P, from_point, from_edge = pushout(collapse, inclusion)
        assert P.sizes() == (1, 2)
        factored = Counter((key(compose_maps(m, from_point)), key(compose_maps(m, from_edge)))
                           for m in natural_maps(P, target))
        cocones = {(key(a), key(b)) for a in natural_maps(one, target) for b in natural_maps(Y, target)
                   if key(compose_maps(a, collapse)) == key(compose_maps(b, inclusion))}
        assert cocones
        assert set(factored) == cocones
        assert set(factored.values()) == {1}


class TestElements:
    def test_elements_of_representable(self):
        el = elements_category(yoneda(DELTA1, "[1]"))
        assert len(el.objects) == 5
        assert "d1:01@[1]" in el.objects

    def test_elements_of_terminal_is_base(self):
        el = elements_category(terminal_presheaf(DELTA2))
        assert el.n_morphisms == DELTA2.n_morphisms

    @pytest.mark.parametrize("x", ["a@b", "a|b", "a->b"])
    def test_separators_in_element_ids_are_rejected(self, x):
        X = make_presheaf(build_chain2(), {"0": [x], "1": ["c"]}, [(0,), (0,), (0,)])
        with pytest.raises(MalformedInput):
            elements_category(X)


class TestLattice:
    def test_lattice_sizes(self):
        assert [len(lattice) for lattice in LATTICES] == [10, 10]
        assert len(SubobjectLattice(terminal_presheaf(DELTA1))) == 3

    def test_members_are_closed(self):
        for lattice in LATTICES:
            assert all(member.is_closed() for member in lattice)

    @pytest.mark.parametrize("lattice", LATTICES)
    def test_implication_matches_adjunction(self, lattice):
        for u, w in product(lattice, repeat=2):
            assert implies(u, w) == lattice.implies_by_adjunction(u, w)

    @pytest.mark.parametrize("lattice", LATTICES)
    def test_subtraction_matches_adjunction(self, lattice):
        for a, b in product(lattice, repeat=2):
            assert subtract(a, b) == lattice.subtract_by_adjunction(a, b)

    @pytest.mark.parametrize("lattice", LATTICES)
    def test_boundary_law(self, lattice):
        for a, b in product(lattice, repeat=2):
            assert gamma(a, b).is_top() == boundary(a).leq(b)

    def test_representable_lattice_is_not_boolean(self):
        assert not LATTICES[0].is_boolean()
        assert SubobjectLattice(terminal_presheaf(build_finset(1))).is_boolean()

    def test_image_of_element(self):
        Y = yoneda(DELTA1, "[1]")
        vertex = image_of_element(Y, "d1:0", "[0]")
        assert vertex.ids_at("[0]") == ["d1:0"]
        assert vertex.ids_at("[1]") == ["d1:00"]
        assert image_of_element(Y, "d1:01", "[1]").is_top()

    def test_parent_mismatch(self):
        with pytest.raises(ParentMismatch):
            meet(top(yoneda(DELTA1, "[1]")), top(yoneda(DELTA1, "[0]")))

    def test_not_in_lattice(self):
        lattice = LATTICES[0]
        with pytest.raises(NotInLattice):
            lattice.check(top(yoneda(DELTA1, "[1]")))

    def test_heyting_dispatch(self):
        u, w = LATTICES[0].members[1], LATTICES[0].members[2]
        assert heyting("implies", u, w) == implies(u, w)
        assert heyting("not", u) == negate(u)
        assert heyting("boundary", u) == boundary(u)


pairs = st.sampled_from(LATTICES).flatmap(
    lambda lattice: st.tuples(st.sampled_from(lattice.members), st.sampled_from(lattice.members),
                              st.sampled_from(lattice.members)))


class TestHeytingLaws:
    @settings(max_examples=150, deadline=None)
    @given(pairs)
    def test_implication_is_right_adjoint(self, triple):
        a, b, c = triple
        assert meet(a, b).leq(c) == a.leq(implies(b, c))

    @settings(max_examples=150, deadline=None)
    @given(pairs)
    def test_subtraction_is_left_adjoint(self, triple):
        a, b, c = triple
        assert subtract(a, b).leq(c) == a.leq(join(b, c))

    @settings(max_examples=150, deadline=None)
    @given(pairs)
    def test_distributivity(self, triple):
        a, b, c = triple
        assert meet(a, join(b, c)) == join(meet(a, b), meet(a, c))

    @settings(max_examples=100, deadline=None)
    @given(pairs)
    def test_negation_and_boundary(self, triple):
        a, _, _ = triple
        assert meet(a, negate(a)) == bottom(a.parent)
        assert boundary(a).leq(a)


class TestSubobjectClassifier:
    def test_omega_sizes(self):
        assert omega(DELTA1).size("[0]") == 3
        assert omega(build_chain2()).sizes() == (2, 3)

    @pytest.mark.parametrize("lattice", LATTICES)
    def test_characteristic_round_trip(self, lattice):
        for u in lattice:
            chi = characteristic(u)
            assert chi.is_natural()
            assert classified_subobject(chi) == u

    def test_points_of_omega(self):
        for u in object_sieves(DELTA2):
            point = classifying_point(u)
            assert point.is_natural()
            assert point_to_object_sieve(point) == u

    def test_cached_sieves_still_respect_budget(self):
        cat = build_delta(2)
        assert len(sieves_on(cat, "[2]")) > 2
        with pytest.raises(BudgetExceeded):
            sieves_on(cat, "[2]", budget=2)
        omega(cat)
        with pytest.raises(BudgetExceeded):
            omega(cat, budget=2)
