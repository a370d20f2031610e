"""Closed forms and graph-count routes for both Euler characteristics."""

from __future__ import annotations

import pytest

from rmfchi.enumerator import GammaMode, WorkLimitExceeded, WorkMeter
from rmfchi.euler import (
    AdmitsExtensionError,
    Route,
    chi_compactification,
    chi_component,
)
from rmfchi.topotype import NonExistentTypeError, nonsep, sep, sepext


def test_component_closed_form():
    r = chi_component(sep(0, 2, (2,)))
    assert (r.value, r.route) == (1, Route.COMPONENT_G0)
    r = chi_component(nonsep(0, 4, ()))
    assert (r.value, r.route) == (1, Route.COMPONENT_G0)
    r = chi_component(nonsep(1, 3, (1,)))
    assert (r.value, r.route) == (0, Route.COMPONENT_ZERO)
    r = chi_component(sep(1, 2, (0, 0)))
    assert (r.value, r.route) == (0, Route.COMPONENT_ZERO)
    r = chi_component(sepext(3, 4, (-1, 1), 0))
    assert (r.value, r.route) == (0, Route.COMPONENT_ZERO)
    assert r.graph_count is None


def test_compactification_full_degree():
    r = chi_compactification(sep(0, 2, (2,)))
    assert (r.value, r.route, r.graph_count) \
        == (1, Route.SEP_FULL_DEGREE, None)
    # forcing the enumerator must reproduce the closed form
    r = chi_compactification(sep(0, 2, (2,)), short_circuit=False)
    assert (r.value, r.route, r.graph_count) \
        == (1, Route.GRAPH_COUNT_SEP, 1)
    r = chi_compactification(sep(1, 3, (1, 2)), short_circuit=False)
    assert (r.value, r.route, r.graph_count) \
        == (1, Route.GRAPH_COUNT_SEP, 1)


def test_compactification_zero_index():
    r = chi_compactification(nonsep(2, 4, (0, 2)))
    assert (r.value, r.route) == (0, Route.ZERO_INDEX)
    r = chi_compactification(sep(1, 2, (0, 0)))
    assert (r.value, r.route) == (0, Route.ZERO_INDEX)
    r = chi_compactification(sepext(2, 4, (0, 1, -1), 0))
    assert (r.value, r.route) == (0, Route.ZERO_INDEX)


def test_compactification_graph_counts():
    r = chi_compactification(nonsep(0, 4, ()))
    assert (r.value, r.route, r.graph_count) \
        == (2, Route.GRAPH_COUNT_NONSEP, 2)
    r = chi_compactification(nonsep(1, 3, (1,)))
    assert (r.value, r.route, r.graph_count) \
        == (1, Route.GRAPH_COUNT_NONSEP, 1)
    r = chi_compactification(sep(3, 6, (1, -1)))
    assert (r.value, r.route, r.graph_count) \
        == (9, Route.GRAPH_COUNT_SEP, 9)


def test_compactification_extended():
    r = chi_compactification(sepext(3, 4, (-1, 1), 0))
    assert (r.value, r.route, r.graph_count) == (1, Route.EXT_ONE, None)
    r = chi_compactification(sepext(3, 4, (-1, 1), 1))
    assert (r.value, r.route) == (1, Route.EXT_ONE)


def test_gamma_conventions_flow_through():
    t = nonsep(1, 4, ())
    assert chi_compactification(t).value == 2
    assert chi_compactification(t, involution=False).value == 3
    assert chi_compactification(t, gamma_mode=GammaMode.EXISTENCE).value == 2


def test_extension_must_be_spelled_out():
    with pytest.raises(AdmitsExtensionError):
        chi_component(sep(3, 4, (-1, 1)))
    with pytest.raises(AdmitsExtensionError):
        chi_compactification(sep(2, 4, (0, 1, -1)))
    # the refined form is accepted
    assert chi_compactification(sepext(2, 4, (0, 1, -1), 0)).value == 0


def test_errors_propagate():
    with pytest.raises(NonExistentTypeError):
        chi_component(nonsep(0, 3, (3,)))
    with pytest.raises(NonExistentTypeError):
        chi_compactification(nonsep(0, 3, (3,)))
    with pytest.raises(WorkLimitExceeded):
        chi_compactification(nonsep(2, 5, (1,)), meter=WorkMeter(limit=20))
