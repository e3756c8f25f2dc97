import numpy as np
import pytest

from cayspec.catalog import named_group
from cayspec.errors import CardinalityMismatch, ConvergenceFailure, DimensionCap
from cayspec.oracle import (
    AdjacencyMatrix,
    build_adjacency,
    cayley_component_diameter,
    compare_spectra,
    components_and_diameter,
    expand,
    symmetric_eigenvalues,
)
from cayspec.spectra import p_singular_profile


def adjacency(name, p):
    G = named_group(name)
    return G, build_adjacency(G, p_singular_profile(G, p).elements)


def test_s3_triangles():
    G, A = adjacency("S3", 3)
    assert A.n == 6 and A.edge_count == 6
    assert np.array_equal(A.bits, A.bits.T)
    assert not A.bits.diagonal().any()
    assert components_and_diameter(A) == (2, [1, 1])


def test_c2_single_edge():
    _, A = adjacency("C2", 2)
    assert A.bits.tolist() == [[0, 1], [1, 0]]


def test_c6_complete_bipartite():
    G, A = adjacency("C6", 2)
    assert A.edge_count == 9
    assert components_and_diameter(A) == (1, [2])
    # the two sides are the cosets of the subgroup of order 3
    eigs = symmetric_eigenvalues(A)
    assert compare_spectra([3, 0, 0, 0, 0, -3], eigs)


def test_adjacency_follows_the_rule():
    G, A = adjacency("S4", 2)
    S = set(p_singular_profile(G, 2).elements)
    for u in range(G.order):
        for v in range(G.order):
            assert A.bits[u, v] == (int(G.table[v, G.inv_table[u]]) in S)


def test_connection_set_validation():
    G = named_group("S3")
    with pytest.raises(ValueError):
        build_adjacency(G, [0, 1])
    with pytest.raises(DimensionCap):
        build_adjacency(named_group("S5"), [1], cap=100)


def test_dump_format(tmp_path):
    _, A = adjacency("S3", 3)
    path = tmp_path / "s3.bin"
    A.dump(path)
    raw = path.read_bytes()
    assert len(raw) == (36 + 7) // 8
    flat = A.bits.ravel()
    # bit k of the stream is entry (k // n, k % n), least significant bit first
    for k in range(36):
        assert (raw[k // 8] >> (k % 8)) & 1 == flat[k]
    assert np.array_equal(AdjacencyMatrix.load(path, 6).bits, A.bits)


def test_jacobi_small_cases():
    assert symmetric_eigenvalues(np.zeros((3, 3))) == [0.0, 0.0, 0.0]
    K4 = np.ones((4, 4)) - np.eye(4)
    assert compare_spectra([3, -1, -1, -1], symmetric_eigenvalues(K4))
    assert symmetric_eigenvalues(np.zeros((1, 1))) == [0.0]
    assert symmetric_eigenvalues(np.zeros((0, 0))) == []


@pytest.mark.parametrize("seed", range(5))
def test_jacobi_against_lapack(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 40))
    M = rng.normal(size=(n, n))
    M = M + M.T
    ours = symmetric_eigenvalues(M, tol=1e-9)
    assert np.allclose(ours, np.linalg.eigvalsh(M), atol=1e-8)


def test_jacobi_rejects_asymmetric():
    with pytest.raises(ValueError):
        symmetric_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_jacobi_reports_non_convergence():
    M = np.random.default_rng(1).normal(size=(30, 30))
    with pytest.raises(ConvergenceFailure):
        symmetric_eigenvalues(M + M.T, max_sweeps=1)


def test_edgeless_single_vertex():
    assert components_and_diameter(np.zeros((1, 1), dtype=np.uint8)) == (1, [0])


@pytest.mark.parametrize("name, p", [("S4", 2), ("S3", 3), ("A5", 5), ("F21", 3), ("D12", 2), ("Q8", 2)])
def test_cayley_diameter_matches_bfs(name, p):
    G, A = adjacency(name, p)
    _, diameters = components_and_diameter(A)
    assert set(diameters) == {cayley_component_diameter(G, p_singular_profile(G, p).elements)}


def test_compare_spectra():
    assert compare_spectra([0], [0.0])
    assert not compare_spectra([1, 0], [0.0, 0.5])
    with pytest.raises(CardinalityMismatch):
        compare_spectra([1, 2], [1.0])
    _, A = adjacency("S3", 3)
    assert compare_spectra(expand([(2, 2), (-1, 4)]), symmetric_eigenvalues(A))
