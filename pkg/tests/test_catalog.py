"""Unit tests for the named quivers."""

import pytest

from errors import ConfigurationError
from quivers.catalog import (
    catalog_description,
    dynkin_quiver,
    kronecker_quiver,
    kronecker_stability,
    parse_dynkin_type,
    single_vertex_quiver,
)
from quivers.quiver import Stability, load_quiver


def test_single_vertex_quiver():
    quiver = single_vertex_quiver()
    assert quiver.rank == 1
    assert quiver.arrows == ()


def test_kronecker_quiver_and_stability():
    quiver = kronecker_quiver(2)
    assert quiver.vertices == ("i", "j")
    assert quiver.arrows == ((1, 0), (1, 0))
    assert kronecker_stability(quiver) == Stability((0, 1))
    with pytest.raises(ConfigurationError):
        kronecker_quiver(-1)


def test_alternating_orientation_has_a_source_in_the_middle():
    quiver = dynkin_quiver("A3", "alternating")
    assert quiver.vertices == ("1", "3", "2")
    assert {quiver.vertices[s] for s, _ in quiver.arrows} == {"2"}


def test_dynkin_types():
    assert parse_dynkin_type(" d5 ") == ("D", 5)
    assert dynkin_quiver("E6").rank == 6
    assert len(dynkin_quiver("D4").arrows) == 3
    with pytest.raises(ConfigurationError):
        parse_dynkin_type("B3")
    with pytest.raises(ConfigurationError):
        dynkin_quiver("E9")
    with pytest.raises(ConfigurationError):
        dynkin_quiver("A3", "zigzag")


def test_description_round_trip(a3_alternating):
    assert load_quiver(catalog_description(a3_alternating)) == a3_alternating
