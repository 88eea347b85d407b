import numpy as np
import pytest

from netvalue import kernels
from netvalue.graph import reach_counts

from conftest import random_graph


def test_backend_selected():
    assert kernels.BACKEND in kernels.BACKENDS
    assert kernels.get_backend() is kernels.BACKENDS[kernels.BACKEND]
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


@pytest.mark.skipif(len(kernels.BACKENDS) < 2, reason="compiled kernels not built")
def test_backends_agree():
    rng = np.random.default_rng(3)
    for _ in range(60):
        g = random_graph(rng, 60)
        indptr, indices = g.csr
        for h in (1, 2, 3, g.n + 1):
            py = reach_counts(g, h, "python")
            cy = reach_counts(g, h, "cython")
            assert np.array_equal(py, cy)
            if g.n:
                v = int(rng.integers(g.n))
                assert (kernels.BACKENDS["python"].reach_from(indptr, indices, g.n, v, h)
                        == kernels.BACKENDS["cython"].reach_from(indptr, indices, g.n, v, h)
                        == py[v])


def test_empty_graph(backend):
    from netvalue import Graph
    assert reach_counts(Graph(0), 2, backend).tolist() == []
    assert reach_counts(Graph(3), 2, backend).tolist() == [0, 0, 0]


def test_pure_python_override():
    import os
    import subprocess
    import sys

    env = dict(os.environ, NETVALUE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import netvalue; print(netvalue.KERNEL_BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


def test_benchmark_smoke():
    import subprocess
    import sys
    from pathlib import Path

    script = Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(script), "--sizes", "50", "--hops", "2", "--repeat", "1"],
                         capture_output=True, text=True, check=True)
    assert "active backend" in out.stdout
