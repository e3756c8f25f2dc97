"""Exact arithmetic in the ring of integers Z[zeta_e].

An element is stored as a length-``e`` coefficient vector over the powers
``1, zeta, ..., zeta^(e-1)``.  The normal form reduces modulo the e-th
cyclotomic polynomial, so only the first ``phi(e)`` slots can be nonzero and
two elements are equal exactly when their vectors are equal.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd

import numpy as np


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists are lowest degree first; den is monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, lowest degree first."""
    poly = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_matrix(e: int) -> np.ndarray:
    """Column i holds the normal form of zeta^i, i < e."""
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    R = np.zeros((e, e), dtype=np.int64)
    vec = [0] * deg
    vec[0] = 1
    for i in range(e):
        R[:deg, i] = vec
        # multiply by x and reduce x^deg = -sum(phi[j] x^j)
        top = vec[-1]
        vec = [0] + vec[:-1]
        for j in range(deg):
            vec[j] -= top * phi[j]
    R.setflags(write=False)
    return R


class CyclotomicInt:
    """An element of Z[zeta_e] in canonical form."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs) -> None:
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != (e,):
            raise ValueError(f"expected {e} coefficients, got shape {coeffs.shape}")
        self.e = e
        self.coeffs = tuple(int(c) for c in _reduction_matrix(e) @ coeffs)

    @classmethod
    def _raw(cls, e: int, coeffs: tuple[int, ...]) -> "CyclotomicInt":
        obj = object.__new__(cls)
        obj.e = e
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_int(cls, e: int, n: int) -> "CyclotomicInt":
        return cls._raw(e, (int(n),) + (0,) * (e - 1))

    @classmethod
    def zero(cls, e: int) -> "CyclotomicInt":
        return cls.from_int(e, 0)

    @classmethod
    def root(cls, e: int, k: int = 1) -> "CyclotomicInt":
        """zeta_e ** k."""
        v = [0] * e
        v[k % e] = 1
        return cls(e, v)

    @classmethod
    def from_exponent_counts(cls, e: int, counts) -> "CyclotomicInt":
        """Sum of ``counts[k] * zeta_e**k``."""
        return cls(e, counts)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "CyclotomicInt") -> None:
        if other.e != self.e:
            raise ValueError(f"mixing exponents {self.e} and {other.e}")

    def _coerce(self, other) -> "CyclotomicInt":
        if isinstance(other, CyclotomicInt):
            self._check(other)
            return other
        if isinstance(other, (int, np.integer)):
            return CyclotomicInt.from_int(self.e, int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt._raw(self.e, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt._raw(self.e, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return CyclotomicInt._raw(self.e, tuple(int(other) * a for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e = self.e
        prod = np.convolve(np.array(self.coeffs, dtype=np.int64), np.array(other.coeffs, dtype=np.int64))
        folded = np.zeros(e, dtype=np.int64)
        folded[: min(e, prod.size)] += prod[:e]
        folded[: prod.size - e] += prod[e:]
        return CyclotomicInt._raw(e, tuple(int(c) for c in _reduction_matrix(e) @ folded))

    __rmul__ = __mul__

    def galois(self, k: int) -> "CyclotomicInt":
        """Apply the automorphism zeta -> zeta**k (k coprime to e)."""
        if gcd(k, self.e) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.e}")
        v = [0] * self.e
        for i, c in enumerate(self.coeffs):
            v[(i * k) % self.e] += c
        return CyclotomicInt(self.e, v)

    def conjugate(self) -> "CyclotomicInt":
        return self.galois(-1 % self.e) if self.e > 1 else self

    # -- queries ------------------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.e)
        return sum(c * z**i for i, c in enumerate(self.coeffs) if c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.e == other.e and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.e, self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CyclotomicInt({self.e}, {self})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                base = "z" if i == 1 else f"z^{i}"
                terms.append(base if c == 1 else f"-{base}" if c == -1 else f"{c}*{base}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"
