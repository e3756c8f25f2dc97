"""Brute-force ground truth for Cayley graph spectra.

Nothing here looks at characters: the adjacency matrix is built from the
multiplication table, eigenvalues come from a cyclic Jacobi eigensolver and
components from breadth-first search.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import CardinalityMismatch, ConvergenceFailure, DimensionCap
from .groups import FiniteGroup

ORACLE_CAP = 1024
DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class AdjacencyMatrix:
    bits: np.ndarray

    @property
    def n(self) -> int:
        return self.bits.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self.bits.sum()) // 2

    def dump(self, path: str | Path) -> None:
        """Write the matrix as a packed bitset: row-major, LSB-first, no header."""
        Path(path).write_bytes(np.packbits(self.bits.ravel(), bitorder="little").tobytes())

    @classmethod
    def load(cls, path: str | Path, n: int) -> "AdjacencyMatrix":
        raw = np.frombuffer(Path(path).read_bytes(), dtype=np.uint8)
        bits = np.unpackbits(raw, bitorder="little")[: n * n].reshape(n, n)
        return cls(bits)


def connection_mask(G: FiniteGroup, connection_set: Iterable[int]) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    mask[list(connection_set)] = True
    return mask


def build_adjacency(G: FiniteGroup, connection_set: Iterable[int], cap: int = ORACLE_CAP) -> AdjacencyMatrix:
    """``A[u, v] = 1`` iff ``v * u^-1`` lies in the connection set."""
    if G.order > cap:
        raise DimensionCap(f"|G| = {G.order} exceeds oracle cap {cap}")
    mask = connection_mask(G, connection_set)
    if mask[0]:
        raise ValueError("connection set contains the identity")
    # quotients[v, u] = v * u^-1
    quotients = G.table[:, G.inv_table]
    bits = mask[quotients].T.astype(np.uint8)
    if not np.array_equal(bits, bits.T):
        raise ValueError("connection set is not closed under inverses")
    bits.setflags(write=False)
    return AdjacencyMatrix(bits)


def _round_robin(m: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings of the circle method: m - 1 rounds of m/2 disjoint pairs."""
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        half = m // 2
        p = np.array(players[:half])
        q = np.array(players[half:][::-1])
        rounds.append((np.minimum(p, q), np.maximum(p, q)))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def symmetric_eigenvalues(A, tol: float = DEFAULT_TOL, max_sweeps: int = 60) -> list[float]:
    """Eigenvalues of a real symmetric matrix by parallel cyclic Jacobi rotations.

    Each round rotates a set of disjoint (p, q) planes at once; a sweep
    visits every plane once.  Iteration stops when the off-diagonal
    Frobenius norm falls below ``tol / 10``, which bounds every eigenvalue
    error by ``tol``.
    """
    bits = A.bits if isinstance(A, AdjacencyMatrix) else A
    a = np.array(bits, dtype=np.float64)
    n = a.shape[0]
    if n == 0:
        return []
    if not np.allclose(a, a.T):
        raise ValueError("matrix is not symmetric")
    m = n + (n % 2)
    rounds = []
    for p, q in _round_robin(m) if m > 1 else []:
        keep = q < n
        rounds.append((p[keep], q[keep]))

    offdiag = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        return float(np.sqrt(np.sum(a[offdiag] ** 2)))

    target = tol / 10
    for _ in range(max_sweeps):
        if off_norm() <= target:
            return sorted(np.diag(a).tolist())
        for p, q in rounds:
            apq = a[p, q]
            active = np.abs(apq) > 1e-300
            if not np.any(active):
                continue
            p, q, apq = p[active], q[active], apq[active]
            tau = (a[q, q] - a[p, p]) / (2.0 * apq)
            big = np.abs(tau) > 1e150
            tau_safe = np.where(big, 1.0, tau)
            t = np.sign(tau_safe) / (np.abs(tau_safe) + np.sqrt(1.0 + tau_safe * tau_safe))
            t[tau == 0] = 1.0
            t[big] = 0.5 / tau[big]
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            ap, aq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            ap, aq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * ap - s[:, None] * aq
            a[q, :] = s[:, None] * ap + c[:, None] * aq
            a[p, q] = 0.0
            a[q, p] = 0.0
    if off_norm() <= target:
        return sorted(np.diag(a).tolist())
    raise ConvergenceFailure(f"off-diagonal norm {off_norm():.3g} after {max_sweeps} sweeps")


def components_and_diameter(A) -> tuple[int, list[int]]:
    """Component count and per-component diameters.

    Breadth-first search is run from every vertex at once, one level per
    boolean matrix product; a vertex's eccentricity is the level at which
    its reachable set stops growing.
    """
    bits = A.bits if isinstance(A, AdjacencyMatrix) else np.asarray(A)
    n = bits.shape[0]
    if n == 0:
        return 0, []
    adj = bits.astype(np.float64)
    reach = np.eye(n, dtype=bool)
    ecc = np.zeros(n, dtype=np.int64)
    level = 0
    while True:
        grown = reach | ((reach.astype(np.float64) @ adj) > 0)
        changed = np.any(grown != reach, axis=1)
        if not changed.any():
            break
        level += 1
        ecc[changed] = level
        reach = grown
    labels: dict[bytes, int] = {}
    comp = np.empty(n, dtype=np.int64)
    for v in range(n):
        comp[v] = labels.setdefault(reach[v].tobytes(), len(labels))
    diam = [int(ecc[comp == c].max()) for c in range(len(labels))]
    return len(labels), diam


def cayley_component_diameter(G: FiniteGroup, connection_set: Iterable[int]) -> int:
    """Eccentricity of the identity; every component of a Cayley graph has this diameter."""
    conn = np.array(sorted(set(connection_set)), dtype=np.int64)
    seen = np.zeros(G.order, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    depth = 0
    while conn.size:
        nxt = np.unique(G.table[np.ix_(conn, frontier)])
        nxt = nxt[~seen[nxt]]
        if nxt.size == 0:
            break
        seen[nxt] = True
        frontier = nxt
        depth += 1
    return depth


def compare_spectra(exact: Sequence[int], numeric: Sequence[float], tol: float = DEFAULT_TOL) -> bool:
    """Match sorted exact integers against sorted numeric eigenvalues."""
    if len(exact) != len(numeric):
        raise CardinalityMismatch(f"{len(exact)} exact vs {len(numeric)} numeric eigenvalues")
    return all(abs(x - y) <= tol for x, y in zip(sorted(exact), sorted(numeric)))


def expand(eigs: Iterable[tuple[int, int]]) -> list[int]:
    """Turn (value, multiplicity) pairs into a flat multiset."""
    return [v for v, m in eigs for _ in range(m)]
