import pytest

from refsev.combinatorics import IntMultiset
from refsev.polygon import (PolygonError, closed_form_dim, lattice_point_count, make_polygon,
                            parse_polygon, preset, reconstruct_widths)


def test_make_polygon():
    p = make_polygon(0, 3, IntMultiset.repeat(1, 3), IntMultiset.repeat(0, 3))
    assert p.height == 3 and p.dim == 9
    with pytest.raises(PolygonError, match=r"height mismatch: \|r\|=3, \|l\|=2"):
        make_polygon(0, 3, IntMultiset.repeat(1, 3), IntMultiset.repeat(0, 2))
    q = make_polygon(0, 0, IntMultiset({-1: 2, 2: 1}), IntMultiset.repeat(0, 3))
    assert q.widths == (0, 2, 1, 0)
    with pytest.raises(PolygonError, match="balance"):
        make_polygon(0, 2, IntMultiset.repeat(1, 3), IntMultiset.repeat(0, 3))
    # sorted steps make the widths concave, so endpoints bound them from below
    with pytest.raises(PolygonError, match="non-negative"):
        make_polygon(-1, 0, IntMultiset([1]), IntMultiset([0]))


def test_presets():
    s = preset("sigma", m=2, c=2, d=2)
    assert (s.d_top, s.d_bottom, s.right, s.left) == \
        (2, 6, IntMultiset.repeat(2, 2), IntMultiset.repeat(0, 2))
    w = preset("wps11m", m=2, d=2)
    assert (w.d_top, w.d_bottom, w.right, w.left) == \
        (0, 4, IntMultiset.repeat(2, 2), IntMultiset.repeat(0, 2))
    p = preset("p2", d=1)
    assert (p.d_top, p.d_bottom, p.right, p.left) == (0, 1, IntMultiset([1]), IntMultiset([0]))
    with pytest.raises(PolygonError):
        preset("hexagon", d=1)
    with pytest.raises(PolygonError):
        preset("wps1mm", m=1, d=1)
    with pytest.raises(PolygonError):
        preset("p2", d=-1)


def test_lattice_points():
    assert lattice_point_count(preset("p2", d=3)) == 10
    assert lattice_point_count(preset("wps1mm", m=3, d=1)) == 7
    assert reconstruct_widths(preset("p2", d=3)) == (0, 1, 2, 3)
    assert reconstruct_widths(preset("wps1mm", m=3, d=1)) == (0, 2, 1, 0)
    assert reconstruct_widths(preset("sigma", m=2, c=2, d=2)) == (2, 4, 6)
    assert lattice_point_count(preset("sigma", m=2, c=2, d=2)) == 15


def test_closed_forms():
    for d in range(7):
        assert preset("p2", d=d).dim == closed_form_dim("p2", d=d)
        for m in range(1, 5):
            assert preset("wps11m", m=m, d=d).dim == closed_form_dim("wps11m", m=m, d=d)
            for c in range(5):
                p = preset("sigma", m=m, c=c, d=d)
                assert p.dim == closed_form_dim("sigma", m=m, c=c, d=d)
                w = p.widths
                assert w[-1] - w[0] == p.d_bottom - p.d_top == p.right.norm - p.left.norm
            if m >= 2:
                assert preset("wps1mm", m=m, d=d).dim == closed_form_dim("wps1mm", m=m, d=d)


def test_parse_polygon():
    assert parse_polygon("p2:d=3") == preset("p2", d=3)
    assert parse_polygon("sigma:m=1,c=0,d=3") == preset("sigma", m=1, c=0, d=3)
    assert parse_polygon("wps1mm:m=3,d=1").widths == (0, 2, 1, 0)
    raw = parse_polygon("dt=0;db=3;r=1^3;l=0^3")
    assert raw.widths == preset("p2", d=3).widths
    with pytest.raises(PolygonError, match="height mismatch"):
        parse_polygon("dt=0;db=3;r=1^3;l=0^2")
    with pytest.raises(PolygonError, match="missing"):
        parse_polygon("dt=0;db=3")
    with pytest.raises(PolygonError):
        parse_polygon("p2:d=x")
