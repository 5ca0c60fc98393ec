import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import brute_force_circle, brute_force_diameter, sampled_chord_allowance
from specmeasure.geometry import PlanarSet, convex_hull, diameter, min_enclosing_circle


def test_diameter_examples():
    assert diameter(PlanarSet.from_points([0, 3])) == 3.0
    assert diameter(PlanarSet.circle(0, 1)) == 2.0
    assert diameter(PlanarSet.from_points([5 + 5j])) == 0.0


@pytest.mark.parametrize("alpha, beta", [(0.0, 0.5), (0.3, 2.0), (1.0, 1.0 + math.pi)])
def test_arc_diameter_chord(alpha, beta):
    assert diameter(PlanarSet.arc(0, 1, alpha, beta)) == pytest.approx(2 * math.sin((beta - alpha) / 2), abs=1e-15)


def test_long_arc_diameter_is_full():
    assert diameter(PlanarSet.arc(1j, 2.0, 0.0, 4.0)) == 4.0


def test_enclosing_examples():
    c = min_enclosing_circle(PlanarSet.circle(0, 1))
    assert c.center == 0 and c.radius == 1
    t = np.linspace(0, 2 * np.pi, 1000, endpoint=False)
    c = min_enclosing_circle(PlanarSet.from_points(np.exp(1j * t)))
    assert abs(c.center) < 1e-12 and c.radius == pytest.approx(1.0, abs=1e-12)
    c = min_enclosing_circle(PlanarSet.from_points([-1, 1]))
    assert c.center == 0 and c.radius == 1


def test_equilateral_triangle_exceeds_half_diameter():
    pts = np.exp(1j * np.array([0, 2 * np.pi / 3, 4 * np.pi / 3])) / math.sqrt(3)
    S = PlanarSet.from_points(pts)
    assert diameter(S) == pytest.approx(1.0, abs=1e-15)
    assert min_enclosing_circle(S).radius == pytest.approx(1 / math.sqrt(3), abs=1e-12)


def test_single_point():
    c = min_enclosing_circle(PlanarSet.from_points([2 - 1j]))
    assert c == (2 - 1j, 0.0)


def test_invalid_sets():
    with pytest.raises(ValueError):
        PlanarSet.from_points([])
    with pytest.raises(ValueError):
        PlanarSet.arc(0, 1, 1.0, 1.0)
    with pytest.raises(ValueError):
        PlanarSet.arc(0, 1, 0.0, 7.0)
    with pytest.raises(ValueError):
        PlanarSet("polygon")


def test_collinear_and_duplicate_points():
    S = PlanarSet.from_points([0, 1, 2, 3, 3, 1])
    assert diameter(S) == 3.0
    c = min_enclosing_circle(S)
    assert c.center == pytest.approx(1.5) and c.radius == pytest.approx(1.5)
    assert convex_hull([0, 1, 2]) == [0, 2]


point_sets = st.lists(
    st.tuples(st.floats(-10, 10), st.floats(-10, 10)).map(lambda p: complex(*p)),
    min_size=2, max_size=25,
)


@settings(max_examples=80, deadline=None)
@given(point_sets)
def test_circle_matches_brute_force(pts):
    S = PlanarSet.from_points(pts)
    c = min_enclosing_circle(S)
    _, r = brute_force_circle(pts)
    assert c.radius == pytest.approx(r, abs=1e-9)
    assert np.all(np.abs(np.array(pts) - c.center) <= c.radius + 1e-12)


@settings(max_examples=80, deadline=None)
@given(point_sets)
def test_diameter_matches_brute_force(pts):
    assert diameter(PlanarSet.from_points(pts)) == pytest.approx(brute_force_diameter(pts), abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(point_sets)
def test_radius_between_half_diameter_and_jung(pts):
    S = PlanarSet.from_points(pts)
    d, r = diameter(S), min_enclosing_circle(S).radius
    assert d / 2 - 1e-12 <= r <= d / math.sqrt(3) + 1e-12


def test_minimality(rng):
    for _ in range(30):
        pts = rng.normal(size=20) + 1j * rng.normal(size=20)
        c = min_enclosing_circle(PlanarSet.from_points(pts))
        assert np.any(np.abs(pts - c.center) > c.radius - 1e-6)


@pytest.mark.parametrize("alpha, beta", [(0.2, 1.0), (0.0, math.pi / 3), (1.0, 3.5), (-0.4, 5.0), (0.0, 2 * math.pi)])
def test_arc_closed_form_matches_samples(alpha, beta):
    arc = PlanarSet.arc(0.5 - 0.25j, 1.7, alpha, beta)
    sampled = PlanarSet.from_points(arc.points(10_000))
    slack = sampled_chord_allowance(arc.radius, arc.span, 10_000)
    assert diameter(sampled) == pytest.approx(diameter(arc), abs=1e-9 + slack)
    assert diameter(sampled) <= diameter(arc) + 1e-12
    c_arc, c_s = min_enclosing_circle(arc), min_enclosing_circle(sampled)
    assert c_s.radius == pytest.approx(c_arc.radius, abs=1e-9)
    assert abs(c_s.center - c_arc.center) < 1e-6


def test_full_circle_closed_form_matches_samples():
    circ = PlanarSet.circle(1 + 1j, 0.5)
    sampled = PlanarSet.from_points(circ.points(10_000))
    assert diameter(sampled) == pytest.approx(1.0, abs=1e-9)
    assert min_enclosing_circle(sampled).radius == pytest.approx(0.5, abs=1e-9)


def test_deterministic(rng):
    pts = rng.normal(size=200) + 1j * rng.normal(size=200)
    S = PlanarSet.from_points(pts)
    assert min_enclosing_circle(S) == min_enclosing_circle(S)
