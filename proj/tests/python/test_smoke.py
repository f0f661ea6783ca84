import numpy as np
import pytest

import qnr


def test_generators_and_norm():
    block = qnr.generate("a3", 4)
    assert (block.n1, block.n2, block.dim) == (2, 2, 4)
    assert qnr.operator_norm(block.assemble()) == pytest.approx(4.3648, abs=1e-3)
    assert qnr.operator_norm(qnr.generate("a5", 32).assemble()) == pytest.approx(2.36, abs=0.02)


def test_split_eigenvalues():
    lam, lam_pi = qnr.split_eigenvalues(np.array([[1, 2], [3, 4]], dtype=complex))
    assert lam == pytest.approx(5.372281323269014)
    assert lam_pi == pytest.approx(-0.3722813232690143)


def test_block_from_arrays():
    a = np.eye(2, dtype=complex)
    z = np.zeros((2, 2), dtype=complex)
    block = qnr.BlockMatrix(a, z, z, -a)
    assert np.allclose(block.assemble(), np.diag([1, 1, -1, -1]))


def test_compute_and_sampling():
    block = qnr.generate("a1", 8)
    w, wt = qnr.compute_qnr(block, iterations=2, seed=3)
    assert w.shape == wt.shape and w.size > 256
    w2, _ = qnr.compute_qnr(block, iterations=2, seed=3)
    assert np.array_equal(w, w2)
    sw, swt = qnr.random_sampling(block, samples=1000, seed=1)
    assert sw.size == swt.size == 1000
    assert np.all(sw.real >= swt.real - 1e-12)


def test_concentration_shape():
    report = qnr.concentration_experiment("a5", dims=[4, 8], samples=1000, epsilons=[0.5, 1.0], seed=2)
    assert len(report["exceedance"]) == 2
    assert len(report["exceedance"][0]) == 2


def test_errors_map_to_exceptions():
    with pytest.raises(qnr.InvalidArgument):
        qnr.generate("a1", 7)
    with pytest.raises(qnr.IoError):
        qnr.load_block_matrix("/nonexistent/matrix.json")
    assert issubclass(qnr.ParseError, qnr.QnrError)
