"""Exact ordinary character tables via the Burnside-Dixon method.

The class sums of G span a commutative algebra whose common eigenvectors
are the central characters ``omega_chi(K) = |K| chi(x_K) / chi(1)``.  They
are found over a prime field F_l with l = 1 (mod exponent), where every
character value reduces to an element of F_l.  Exact values in Z[zeta_e]
are then recovered from the eigenvalue multiplicities of each element,
obtained by a discrete Fourier transform along its power classes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, isqrt

import numpy as np

from .cyclotomic import CyclotomicInt
from .errors import CertificationFailed
from .groups import (
    ConjugacyClassInfo,
    FiniteGroup,
    SubgroupHandle,
    class_of,
    conjugacy_classes,
    exponent,
    is_prime,
    prime_divisors,
)


@dataclass(frozen=True)
class ClassAlgebra:
    """``constants[i, j, k]`` counts pairs (x, y) in K_i x K_j with xy = z_k."""

    constants: np.ndarray

    def matrix(self, i: int) -> np.ndarray:
        """Left multiplication by the i-th class sum, acting on column vectors."""
        return self.constants[i]


def class_constants(G: FiniteGroup, classes: list[ConjugacyClassInfo] | None = None) -> ClassAlgebra:
    classes = classes if classes is not None else conjugacy_classes(G)
    cls = class_of(G)
    r = len(classes)
    a = np.zeros((r, r, r), dtype=np.int64)
    for k, c in enumerate(classes):
        # x runs over G, y = x^-1 z_k is forced
        j = cls[G.table[G.inv_table, c.representative]]
        np.add.at(a[:, :, k], (cls, j), 1)
    a.setflags(write=False)
    return ClassAlgebra(a)


# ---------------------------------------------------------------------------
# linear algebra over F_l


def _rref_mod(A: np.ndarray, ell: int) -> tuple[np.ndarray, list[int]]:
    A = A.copy() % ell
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, ell)) % ell
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % ell
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace_mod(A: np.ndarray, ell: int) -> np.ndarray:
    """Basis of the right null space of A over F_l, one vector per row."""
    R, pivots = _rref_mod(A, ell)
    n = A.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for row, p in enumerate(pivots):
            basis[t, p] = (-R[row, f]) % ell
    return basis


def charpoly_mod(X: np.ndarray, ell: int) -> list[int]:
    """Characteristic polynomial of X over F_l, lowest degree first (Faddeev-LeVerrier)."""
    m = X.shape[0]
    coeffs = [0] * (m + 1)
    coeffs[m] = 1
    Mk = np.zeros_like(X)
    ident = np.eye(m, dtype=np.int64)
    for k in range(1, m + 1):
        Mk = (X @ Mk + coeffs[m - k + 1] * ident) % ell
        tr = int(np.trace((X @ Mk) % ell)) % ell
        coeffs[m - k] = (-tr * pow(k, -1, ell)) % ell
    return coeffs


def roots_mod(coeffs: list[int], ell: int) -> list[int]:
    t = np.arange(ell, dtype=np.int64)
    acc = np.zeros(ell, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * t + c) % ell
    return np.flatnonzero(acc == 0).tolist()


def splitting_prime(e: int, order: int) -> int:
    """Smallest prime l = 1 (mod e) with l > 2|G|."""
    ell = (2 * order // e + 1) * e + 1
    while ell <= 2 * order or not is_prime(ell):
        ell += e
    return ell


def primitive_root(ell: int) -> int:
    factors = prime_divisors(ell - 1)
    for g in range(2, ell):
        if all(pow(g, (ell - 1) // q, ell) != 1 for q in factors):
            return g
    return 1


def _common_eigenvectors(algebra: ClassAlgebra, ell: int) -> list[np.ndarray]:
    r = algebra.constants.shape[0]
    spaces = [np.eye(r, dtype=np.int64)]
    for i in range(1, r):
        M = algebra.matrix(i) % ell
        refined = []
        for basis in spaces:
            if basis.shape[0] == 1:
                refined.append(basis)
                continue
            B, piv = _rref_mod(basis, ell)
            images = (M @ B.T) % ell
            X = images[piv, :]
            pieces = []
            for lam in roots_mod(charpoly_mod(X, ell), ell):
                Y = nullspace_mod((X - lam * np.eye(len(piv), dtype=np.int64)) % ell, ell)
                pieces.append((Y @ B) % ell)
            if sum(p.shape[0] for p in pieces) != B.shape[0]:
                raise CertificationFailed(f"class matrix {i} is not diagonalizable mod {ell}")
            refined.extend(pieces)
        spaces = refined
        if all(s.shape[0] == 1 for s in spaces):
            break
    if any(s.shape[0] != 1 for s in spaces) or len(spaces) != r:
        raise CertificationFailed("class sums do not separate the characters")
    return [s[0] for s in spaces]


# ---------------------------------------------------------------------------
# the table


@dataclass(frozen=True)
class CharacterTable:
    values: tuple[tuple[CyclotomicInt, ...], ...]
    degrees: tuple[int, ...]
    class_sizes: tuple[int, ...]
    class_orders: tuple[int, ...]
    exponent: int

    @property
    def order(self) -> int:
        return sum(self.class_sizes)

    @property
    def n_classes(self) -> int:
        return len(self.class_sizes)

    def inner(self, r: int, s: int, columns=None) -> CyclotomicInt:
        """sum_j |K_j| chi_r(K_j) conj(chi_s(K_j)) over the chosen columns."""
        cols = range(self.n_classes) if columns is None else columns
        total = CyclotomicInt.zero(self.exponent)
        for j in cols:
            total = total + self.values[r][j] * self.values[s][j].conjugate() * self.class_sizes[j]
        return total

    @cached_property
    def embeddings(self) -> np.ndarray:
        """Images of the table under every embedding zeta -> exp(2 pi i k / e), k prime to e.

        Shape ``(phi(e), rows, classes)``.
        """
        e = self.exponent
        coeffs = np.array([[v.coeffs for v in row] for row in self.values], dtype=np.float64)
        ks = np.array([k for k in range(1, e + 1) if gcd(k, e) == 1])
        roots = np.exp(2j * np.pi * np.outer(ks, np.arange(e)) / e)
        return np.moveaxis(coeffs @ roots.T, 2, 0)

    def gram(self, columns=None) -> np.ndarray:
        """Row inner sums under every embedding, shape ``(phi(e), rows, rows)``."""
        cols = list(range(self.n_classes)) if columns is None else list(columns)
        X = self.embeddings[:, :, cols]
        w = np.array([self.class_sizes[j] for j in cols], dtype=np.float64)
        return (X * w) @ X.conj().transpose(0, 2, 1)

    def float_slack(self) -> float:
        """Generous bound on the rounding error of any entry of ``gram``.

        Entries are sums of at most |G| products of embedded values, each of
        modulus at most the largest coefficient 1-norm ``c``.
        """
        c = max(sum(abs(x) for x in v.coeffs) for row in self.values for v in row)
        return 64 * np.finfo(np.float64).eps * self.exponent * self.order * c * c

    def vanishing(self, sums: np.ndarray) -> np.ndarray:
        """Exact zero test for algebraic integers given by all their embeddings.

        A nonzero element of Z[zeta_e] has a nonzero integer norm, so some
        embedding has modulus >= 1.  With rounding error below 1/4 the cut at
        1/2 is therefore exact.
        """
        if self.float_slack() >= 0.25:
            raise CertificationFailed("floating-point slack too large for an exact zero test")
        return np.abs(sums).max(axis=0) < 0.5

    def class_sum(self, r: int, columns) -> CyclotomicInt:
        cols = list(columns)
        if not cols:
            return CyclotomicInt.zero(self.exponent)
        coeffs = np.array([self.values[r][j].coeffs for j in cols], dtype=object)
        sizes = np.array([self.class_sizes[j] for j in cols], dtype=object)
        return CyclotomicInt(self.exponent, (sizes @ coeffs).tolist())

    def to_json(self) -> str:
        doc = {
            "exponent": self.exponent,
            "class_orders": list(self.class_orders),
            "class_sizes": list(self.class_sizes),
            "degrees": list(self.degrees),
            "values": [[list(v.coeffs) for v in row] for row in self.values],
        }
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "CharacterTable":
        doc = json.loads(text)
        e = doc["exponent"]
        values = tuple(tuple(CyclotomicInt(e, v) for v in row) for row in doc["values"])
        return cls(values, tuple(doc["degrees"]), tuple(doc["class_sizes"]), tuple(doc["class_orders"]), e)


def certify(T: CharacterTable) -> None:
    """Exact row/column orthogonality and the degree-square sum."""
    n = T.order
    r = T.n_classes
    if len(T.values) != r:
        raise CertificationFailed(f"{len(T.values)} characters for {r} classes")
    if sum(d * d for d in T.degrees) != n:
        raise CertificationFailed("sum of squared degrees differs from |G|")
    # both orthogonality relations are checked as exact identities in Z[zeta_e]
    rows = T.gram() - n * np.eye(r)
    bad = np.argwhere(~T.vanishing(rows))
    if bad.size:
        a, b = bad[0]
        raise CertificationFailed(f"rows {a}, {b} not orthogonal")
    X = T.embeddings
    cols = X.transpose(0, 2, 1) @ X.conj() - np.diag([n / s for s in T.class_sizes])
    bad = np.argwhere(~T.vanishing(cols))
    if bad.size:
        i, j = bad[0]
        raise CertificationFailed(f"columns {i}, {j} not orthogonal")


def character_table(G: FiniteGroup) -> CharacterTable:
    """The full table Irr(G), certified exactly.  Cached on the group."""
    if "char_table" in G._cache:
        return G._cache["char_table"]
    classes = conjugacy_classes(G)
    r = len(classes)
    n = G.order
    e = exponent(G)
    ell = splitting_prime(e, n)
    zeta = pow(primitive_root(ell), (ell - 1) // e, ell)
    sizes = [c.size for c in classes]
    inv_size = [pow(s, -1, ell) for s in sizes]
    inv_cls = [c.inverse_class for c in classes]

    algebra = class_constants(G, classes)
    rows = []
    for vec in _common_eigenvectors(algebra, ell):
        omega = [int(x) * pow(int(vec[0]), -1, ell) % ell for x in vec]
        s = sum(omega[j] * omega[inv_cls[j]] * inv_size[j] for j in range(r)) % ell
        d_sq = n * pow(s, -1, ell) % ell
        degree = next((d for d in range(1, isqrt(n) + 1) if d * d % ell == d_sq), None)
        if degree is None:
            raise CertificationFailed("no degree matches the central character")
        modular = [omega[j] * degree * inv_size[j] % ell for j in range(r)]
        rows.append((degree, [_lift(modular, c, e, ell, zeta, degree) for c in classes]))

    rows.sort(key=lambda row: (row[1] != [CyclotomicInt.from_int(e, 1)] * r, row[0], [v.coeffs for v in row[1]]))
    T = CharacterTable(
        values=tuple(tuple(v) for _, v in rows),
        degrees=tuple(d for d, _ in rows),
        class_sizes=tuple(sizes),
        class_orders=tuple(c.element_order for c in classes),
        exponent=e,
    )
    certify(T)
    G._cache["char_table"] = T
    return T


@lru_cache(maxsize=256)
def _dft_mod(o: int, root: int, ell: int) -> np.ndarray:
    """``dft[s, k] = root^(-s k) mod l``; products with residues stay well inside int64."""
    powers = np.array([pow(root, t, ell) for t in range(o)], dtype=np.int64)
    return powers[(-np.outer(np.arange(o), np.arange(o))) % o]


def _lift(modular: list[int], c: ConjugacyClassInfo, e: int, ell: int, zeta: int, degree: int) -> CyclotomicInt:
    """Recover chi(x) from chi(x^k) mod l by counting each o-th root of unity."""
    o = c.element_order
    step = e // o
    vals = np.array([modular[j] for j in c.power_classes[:o]], dtype=np.int64)
    mults = (_dft_mod(o, pow(zeta, step, ell), ell) @ vals) % ell * pow(o, -1, ell) % ell
    counts = [0] * e
    total = 0
    for s, m in enumerate(mults.tolist()):
        if m > degree:
            raise CertificationFailed(f"eigenvalue multiplicity {m} exceeds degree {degree}")
        counts[s * step] += m
        total += m
    if total != degree:
        raise CertificationFailed("eigenvalue multiplicities do not add up to the degree")
    return CyclotomicInt(e, counts)


def restrict_to_quotient(T: CharacterTable, G: FiniteGroup, N: SubgroupHandle) -> list[int]:
    """Rows whose kernel contains N; these are the characters of G/N."""
    cls = class_of(G)
    cols = sorted({int(cls[x]) for x in N.members})
    return [r for r in range(len(T.values)) if all(T.values[r][j] == T.degrees[r] for j in cols)]


def is_galois_closed(T: CharacterTable, columns) -> bool:
    """Whether a set of columns is stable under every Galois automorphism.

    Tested on the table itself: sigma_k maps column j to the column whose
    values are the sigma_k images of column j.
    """
    cols = set(columns)
    signatures = {j: tuple(T.values[r][j] for r in range(len(T.values))) for j in range(T.n_classes)}
    lookup = {sig: j for j, sig in signatures.items()}
    for k in range(1, T.exponent + 1):
        if gcd(k, T.exponent) != 1:
            continue
        for j in cols:
            image = tuple(v.galois(k) for v in signatures[j])
            if lookup.get(image) not in cols:
                return False
    return True
