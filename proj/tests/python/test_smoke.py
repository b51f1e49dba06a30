"""Smoke tests for the python bindings."""

import numpy as np
import pytest

import nfbasis


def test_normal_form_worked_example():
    A = np.array([[1.0, 0.0], [0.0, 1.0], [2.0, 0.0]])
    res = nfbasis.normal_form(A)
    expected = np.array([[0.0, 1.0], [1.0, 0.0], [0.0, 2.0]])
    assert np.allclose(res["columns"], expected, atol=1e-12)
    assert res["theta"][0]["exact_theta"] == "37"
    assert res["theta"][1]["exact_theta"] == "18"
    assert res["zero_patterns"] == ["101", "010"]


def test_algorithms_agree():
    rng = np.random.default_rng(7)
    A = rng.uniform(-1, 1, size=(7, 3))
    std = nfbasis.normal_form(A, algorithm="standard")
    td = nfbasis.normal_form(A, algorithm="topdown")
    assert np.array_equal(std["columns"], td["columns"])


def test_complex_support():
    rng = np.random.default_rng(11)
    A = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
    res = nfbasis.normal_form(A)
    assert np.allclose(res["columns"], np.eye(4), atol=1e-9)


def test_nullspace_and_rank():
    row = np.ones((1, 5))
    K = nfbasis.nullspace(row)
    assert K.shape == (5, 4)
    assert np.allclose(row @ K, 0, atol=1e-12)
    assert nfbasis.rank(np.eye(3)) == 3


def test_rcef():
    A = np.array([[2.0, 1.0], [1.0, 1.0]])
    assert np.allclose(nfbasis.rcef(A), np.eye(2), atol=1e-12)


def test_closed_forms():
    a = np.ones(5)
    nf = nfbasis.orthogonal_complement_nf(a)
    assert nf.shape == (5, 4)
    assert np.allclose(nf[0], 1.0)

    e1 = np.array([1.0, 0.0, 0.0, 0.0])
    e2 = np.array([0.0, 1.0, 0.0, 0.0])
    assert nfbasis.two_vector_complement_nf(e1, e2) is None


def test_pi_groups():
    exponents = np.array(
        [
            [0.0, 0.0, 0.0, 1.0, 1.0],
            [0.0, 1.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, -1.0, -2.0, 0.0],
        ]
    )
    out = nfbasis.pi_groups(["M", "L", "T"], ["t", "x0", "xdot0", "k", "m"], exponents)
    assert out["group_labels"] == ["t*xdot0/x0", "sqrt(k/m)*t"]


def test_snap_rational():
    assert nfbasis.snap_rational(0.5) == (1, 2)
    assert nfbasis.snap_rational(-0.43927) is None


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        nfbasis.normal_form(np.array([[1.0, 2.0], [2.0, 4.0], [3.0, 6.0]]))


def test_find_symmetries():
    res = nfbasis.find_symmetries(m1=0.7, m2=0.3, samples=100, seed=5)
    assert res["kernel_dim"] == 9
    assert res["nonzero_entries"] == 36
    beta = res["columns"][10, 6]
    assert abs(beta - 0.75) < 1e-6
