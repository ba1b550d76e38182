#!/usr/bin/env python3
"""
Tests for the exhaustive simplicial presheaf generator.
"""

import json
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from data.generators.simplicial_generator import SimplicialGenerator, generate_presheaves  # noqa: E402
from model.errors import MalformedInput  # noqa: E402
from model.presheaf import is_isomorphic  # noqa: E402
from model.sites import loop_y  # noqa: E402


@pytest.fixture(scope="module")
def one_dimensional():
    generator = SimplicialGenerator(max_dim=1, max_per_stage=2)
    return generator, generator.generate()


def test_one_dimensional_presheaves(one_dimensional):
    generator, presheaves = one_dimensional
    assert [X.name for X in presheaves] == ["v0e0#0", "v1e0#1", "v1e1#2", "v2e0#3"]
    assert [X.sizes() for X in presheaves] == [(0, 0), (1, 1), (1, 2), (2, 2)]
    assert generator.metrics['kept'] == 4
    assert generator.metrics['duplicates'] == 0
    assert not generator.metrics['capped']


def test_loop_is_generated(one_dimensional):
    generator, presheaves = one_dimensional
    loop = next(X for X in presheaves if X.name.startswith("v1e1"))
    assert is_isomorphic(loop, loop_y(generator.base))


def test_generated_presheaves_are_pairwise_distinct(one_dimensional):
    _, presheaves = one_dimensional
    for k, X in enumerate(presheaves):
        assert not any(is_isomorphic(X, Y) for Y in presheaves[k + 1:])


def test_stage_bound():
    presheaves = generate_presheaves(max_dim=2, max_per_stage=1)
    assert [X.sizes() for X in presheaves] == [(0, 0, 0), (1, 1, 1)]


def test_cap():
    generator = SimplicialGenerator(max_dim=1, max_per_stage=2, cap=2)
    assert len(generator.generate()) == 2
    assert generator.metrics['capped']


def test_dimension_guard():
    with pytest.raises(MalformedInput):
        SimplicialGenerator(max_dim=3)


def test_save(one_dimensional, tmp_path):
    generator, presheaves = one_dimensional
    path = generator.save(presheaves, str(tmp_path))
    assert path.name == "simplicial_delta1_n2.json"
    raw = json.loads(path.read_text(encoding="utf-8"))
    assert [entry["name"] for entry in raw] == [X.name for X in presheaves]
    assert raw[0]["base"] == "delta:1"
