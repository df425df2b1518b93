import numpy as np
import pytest

import calderon_lab as cl


def test_meshes():
    v, p = cl.sphere_mesh(1)
    assert p.shape == (32, 3)
    assert np.allclose(np.linalg.norm(v, axis=1), 1.0)
    v, p = cl.cube_mesh(2)
    assert p.shape == (48, 3)
    assert cl.meshwidth(v, p) == pytest.approx(np.sqrt(2) / 2)


def test_laplace_properties():
    v, p = cl.cube_mesh(1)
    ops = cl.assemble_laplace(v, p)
    V, K, Kp, W = ops["V"], ops["K"], ops["Kp"], ops["W"]
    assert np.allclose(V, V.T)
    assert np.linalg.eigvalsh(V).min() > 0
    assert np.abs(W @ np.ones(W.shape[1])).max() < 1e-10 * np.abs(W).max()
    assert np.allclose(Kp, K.T)


def test_maxwell_shapes():
    v, p = cl.cube_mesh(1)
    ops = cl.assemble_maxwell(v, p, 1j)
    n_edges = 18
    assert ops["E"].shape == (n_edges, n_edges)
    assert np.allclose(ops["E"].imag, 0.0, atol=1e-12)
    assert np.allclose(ops["M"], -ops["M"].T)


def test_rates_and_faults():
    h = [0.5 ** k for k in range(4)]
    assert cl.fit_rate(h, [x ** 2 for x in h]) == pytest.approx(2.0)
    assert cl.consecutive_rates(h, [x ** 3 for x in h]) == pytest.approx([3.0] * 3)
    assert cl.classify(h, [x ** 0.5 for x in h], 1.0) == "fail"
    a = np.eye(3)
    assert np.array_equal(cl.apply_fault(a, "A", 7), cl.apply_fault(a, "A", 7))
    assert np.allclose(np.diag(cl.apply_fault(a, "C")), 1e3)


def test_run_is_deterministic():
    opts = {"solution": "2", "levels": "0,1", "fault": "A", "target": "V", "seed": "3"}
    a, fail_a = cl.run("inject", opts)
    b, fail_b = cl.run("inject", opts)
    assert a == b and fail_a == fail_b
    assert a.startswith("# config-hash: ")
    with pytest.raises(ValueError):
        cl.run("inject", {"nonsense": "1"})
