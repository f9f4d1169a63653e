import pytest

from prm_hull.core.exceptions import DimensionMismatchError, NotPrimePowerError
from prm_hull.core.gf import field_new
from prm_hull.core.projspace import enumerate_points, point_count, points_array


@pytest.mark.parametrize(
    "q, m, n", [(2, 1, 3), (2, 2, 7), (4, 1, 5), (3, 2, 13), (5, 3, 156), (9, 3, 820)]
)
def test_point_count(q, m, n):
    assert point_count(q, m) == n


def test_point_count_is_exact_for_large_parameters():
    assert point_count(256, 20) == (256**21 - 1) // 255


def test_point_count_errors():
    with pytest.raises(NotPrimePowerError):
        point_count(6, 2)
    with pytest.raises(DimensionMismatchError):
        point_count(3, 0)


def test_enumerate_points_order():
    assert enumerate_points(field_new(2), 1) == [(1, 0), (1, 1), (0, 1)]
    points = enumerate_points(field_new(3), 2)
    assert points[:3] == [(1, 0, 0), (1, 0, 1), (1, 0, 2)]
    assert points[9:] == [(0, 1, 0), (0, 1, 1), (0, 1, 2), (0, 0, 1)]


@pytest.mark.parametrize("q, m", [(2, 3), (3, 2), (4, 2), (5, 2), (9, 1)])
def test_points_are_standard_representatives(q, m):
    points = enumerate_points(field_new(q), m)
    assert len(points) == len(set(points)) == point_count(q, m)
    for x in points:
        first = next(c for c in x if c != 0)
        assert first == 1


def test_points_array():
    F = field_new(4)
    array = points_array(F, 2)
    assert array.shape == (21, 3)
    assert not array.flags.writeable
    assert [tuple(row) for row in array.tolist()] == enumerate_points(F, 2)
