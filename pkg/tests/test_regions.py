import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from swisscheese.geometry import Annulus, Disk
from swisscheese.regions import (
    Band,
    Union,
    contains_closed_disk,
    contains_point,
    contains_points,
    dilate,
    meets_closed_disk,
    region_within,
    regions_disjoint,
    within_open_disk,
)

A = Annulus((0, 0), 1, 2)


def test_dilate_is_open_band():
    u = dilate(A, 0.1)
    assert isinstance(u, Band) and u.open
    assert (u.lo, u.hi) == pytest.approx((0.9, 2.1))
    assert not contains_point(u, (2.1, 0)) and contains_point(u, (2.09, 0))


def test_dilate_disk_has_no_inner_bound():
    u = dilate(Disk((1, 1), 0.5), 0.25)
    assert u.lo < 0 and contains_point(u, (1, 1))


def test_dilate_rejects_bad_margin():
    with pytest.raises(ValueError):
        dilate(A, 0)


def test_union_requires_parts():
    with pytest.raises(ValueError):
        Union(())


def test_points():
    assert contains_point(A, (1, 0)) and contains_point(A, (0, 2))
    assert not contains_point(A, (0.5, 0))
    mask = contains_points(Union((A, Disk((0, 0), 0.2))), [0, 0.5, 1.5], [0, 0, 0])
    assert mask.tolist() == [True, False, True]


def test_meets_closed_disk_counts_tangency():
    assert meets_closed_disk(Disk((0, 0), 1), Disk((2, 0), 1))
    assert not meets_closed_disk(Disk((0, 0), 1), Disk((2.01, 0), 1))
    # a disk sitting in the annulus hole does not meet it
    assert not meets_closed_disk(A, Disk((0, 0), 0.5))
    assert meets_closed_disk(A, Disk((0, 0), 1.0))


def test_contains_closed_disk():
    assert contains_closed_disk(A, Disk((1.5, 0), 0.5))
    assert not contains_closed_disk(A, Disk((1.5, 0), 0.51))
    assert not contains_closed_disk(dilate(A, 0.1), Disk((1.5, 0), 0.6))
    assert contains_closed_disk(dilate(A, 0.1), Disk((1.5, 0), 0.59))


def test_within_open_disk():
    assert within_open_disk(dilate(A, 0.1), Disk((0, 0), 2.1))
    assert not within_open_disk(A, Disk((0, 0), 2))


def test_disjoint():
    a = Annulus((0, 0), 1, 2)
    b = Annulus((0, 0), 2.5, 3)
    assert regions_disjoint(a, b)
    assert regions_disjoint(dilate(a, 0.25), dilate(b, 0.25))
    assert not regions_disjoint(dilate(a, 0.3), dilate(b, 0.3))
    # a small disk inside the hole
    assert regions_disjoint(a, Disk((0.2, 0), 0.5))
    assert not regions_disjoint(Disk((0, 0), 1), Disk((2, 0), 1))


def test_within():
    assert region_within(A, dilate(A, 0.01))
    assert not region_within(dilate(A, 0.01), A)
    assert region_within(Disk((1.5, 0), 0.4), A)


@given(
    st.floats(0.1, 2),
    st.floats(0.1, 2),
    st.floats(0.01, 1),
    st.floats(-3, 3),
    st.floats(-3, 3),
    st.floats(0, 1),
)
def test_meets_matches_sampling(lo, w, m, x, y, r):
    k = Annulus((0, 0), lo, lo + w)
    d = Disk((x, y), r)
    # dense polar sample of the closed disk
    t = np.linspace(0, 2 * math.pi, 400)
    rr = np.linspace(0, r, 60)
    T, R = np.meshgrid(t, rr)
    xs, ys = x + R * np.cos(T), y + R * np.sin(T)
    hit = contains_points(k, xs, ys).any()
    if hit:
        assert meets_closed_disk(k, d)
    if contains_closed_disk(k, d):
        assert contains_points(k, xs, ys).all()
