"""Named small groups given by standard permutation generators."""

from __future__ import annotations

import json
import re
from functools import lru_cache
from importlib import resources

from .errors import UnknownGroupName
from .groups import FiniteGroup, Permutation, enumerate_group

ALIASES = {
    "C7:C3": "F21",
    "C5:C4": "F20",
    "SL23": "SL(2,3)",
    "V4": "D4",
}


def _cycle(points) -> list[tuple[int, ...]]:
    return [tuple(points)]


def _cyclic(n: int) -> list[Permutation]:
    if n == 1:
        return [Permutation.identity(1)]
    return [Permutation.from_cycles(_cycle(range(n)), n)]


def _dihedral(n: int) -> list[Permutation]:
    # symmetries of the n-gon; n == 2 gives the Klein four-group
    if n == 2:
        return [
            Permutation.from_cycles([(0, 1), (2, 3)], 4),
            Permutation.from_cycles([(0, 2), (1, 3)], 4),
        ]
    rot = Permutation.from_cycles(_cycle(range(n)), n)
    refl = Permutation(tuple((-i) % n for i in range(n)))
    return [rot, refl]


def _symmetric(n: int) -> list[Permutation]:
    if n == 1:
        return [Permutation.identity(1)]
    if n == 2:
        return [Permutation.from_cycles([(0, 1)], 2)]
    return [
        Permutation.from_cycles(_cycle(range(n)), n),
        Permutation.from_cycles([(0, 1)], n),
    ]


def _alternating(n: int) -> list[Permutation]:
    if n <= 2:
        return [Permutation.identity(n)]
    three = Permutation.from_cycles([(0, 1, 2)], n)
    if n == 3:
        return [three]
    long = range(n) if n % 2 else range(1, n)
    return [three, Permutation.from_cycles(_cycle(long), n)]


def _affine(q: int, mult: int) -> list[Permutation]:
    # x -> x + 1 and x -> mult * x over Z/q
    return [
        Permutation(tuple((x + 1) % q for x in range(q))),
        Permutation(tuple((mult * x) % q for x in range(q))),
    ]


def _sl23() -> list[Permutation]:
    # natural action on the eight nonzero vectors of F_3^2
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}

    def act(m):
        return Permutation(tuple(
            pos[((m[0][0] * a + m[0][1] * b) % 3, (m[1][0] * a + m[1][1] * b) % 3)]
            for a, b in vecs
        ))

    return [act(((1, 1), (0, 1))), act(((0, 2), (1, 0)))]


def _q8() -> list[Permutation]:
    return [
        Permutation.from_cycles([(0, 1, 3, 6), (2, 5, 7, 4)], 8),
        Permutation.from_cycles([(0, 2, 3, 7), (1, 4, 6, 5)], 8),
    ]


def _a4xc2() -> list[Permutation]:
    return [
        Permutation.from_cycles([(0, 1, 2)], 6),
        Permutation.from_cycles([(0, 1), (2, 3)], 6),
        Permutation.from_cycles([(4, 5)], 6),
    ]


_FIXED = {
    "Q8": _q8,
    "SL(2,3)": _sl23,
    "F21": lambda: _affine(7, 2),
    "F20": lambda: _affine(5, 2),
    "A4xC2": _a4xc2,
}

_LIMITS = {"C": 30, "D": 30, "S": 6, "A": 6}


def catalog_names() -> list[str]:
    names = [f"C{n}" for n in range(1, 31)]
    names += [f"D{2 * n}" for n in range(2, 16)]
    names += [f"S{n}" for n in range(1, 7)]
    names += [f"A{n}" for n in range(1, 7)]
    names += list(_FIXED)
    return names


def canonical_name(name: str) -> str:
    name = name.strip()
    return ALIASES.get(name, name)


def catalog(name: str) -> list[Permutation]:
    """Generators for a named catalog group."""
    key = canonical_name(name)
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"([CDSA])(\d+)", key)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "C" and 1 <= n <= _LIMITS["C"]:
            return _cyclic(n)
        if kind == "D" and n % 2 == 0 and 4 <= n <= _LIMITS["D"]:
            return _dihedral(n // 2)
        if kind == "S" and 1 <= n <= _LIMITS["S"]:
            return _symmetric(n)
        if kind == "A" and 1 <= n <= _LIMITS["A"]:
            return _alternating(n)
    raise UnknownGroupName(f"unknown group name {name!r}; try one of: {', '.join(catalog_names())}")


@lru_cache(maxsize=None)
def named_group(name: str) -> FiniteGroup:
    key = canonical_name(name)
    return enumerate_group(catalog(key), label=key)


def load_manifest() -> dict:
    """The versioned corpus manifest bundled with the package."""
    text = resources.files("cayspec").joinpath("corpus.json").read_text()
    return json.loads(text)
