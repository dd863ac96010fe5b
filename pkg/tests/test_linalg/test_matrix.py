# tests/test_linalg/test_matrix.py
import numpy as np
import pytest

from mars_m.exceptions import NonFiniteError, ShapeError
from mars_m.linalg import as_mat, check_same_shape, fro_norm, inner, rms


@pytest.mark.parametrize(
    ("entries", "expected"),
    [
        ([[3.0, 4.0]], 5.0),
        (np.zeros((2, 3)), 0.0),
        ([[1.0, 1.0], [1.0, 1.0]], 2.0),
    ],
)
def test_fro_norm_examples(entries, expected):
    assert fro_norm(as_mat(entries)) == pytest.approx(expected, abs=1e-15)


def test_as_mat_rejects_non_finite():
    with pytest.raises(NonFiniteError):
        as_mat([[1.0, np.nan]])
    with pytest.raises(NonFiniteError):
        as_mat([[np.inf]])


def test_as_mat_rejects_wrong_rank_and_empty():
    with pytest.raises(ShapeError):
        as_mat([1.0, 2.0])
    with pytest.raises(ShapeError):
        as_mat(np.zeros((0, 3)))


def test_as_mat_converts_to_contiguous_float64():
    out = as_mat(np.arange(6, dtype=np.int32).reshape(2, 3).T)
    assert out.dtype == np.float64
    assert out.flags["C_CONTIGUOUS"]


def test_check_same_shape_reports_both_shapes():
    with pytest.raises(ShapeError) as info:
        check_same_shape(np.zeros((2, 3)), np.zeros((3, 2)))
    assert info.value.expected == (2, 3)
    assert info.value.actual == (3, 2)


def test_inner_and_rms():
    a = as_mat([[1.0, 2.0], [3.0, 4.0]])
    assert inner(a, a) == pytest.approx(fro_norm(a) ** 2)
    assert rms(np.full((3, 5), 0.2)) == pytest.approx(0.2)
    with pytest.raises(ShapeError):
        inner(a, np.zeros((1, 4)))
