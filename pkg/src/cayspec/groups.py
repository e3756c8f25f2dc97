"""Fully enumerated finite groups with index-based multiplication.

Every group is stored as a Cayley table over element indices ``0..|G|-1``
with the identity at index 0.  Permutation groups are enumerated
breadth-first from their generators; quotients and direct products are
built directly from tables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidPermutation, NotNormal, OrderCapExceeded

DEFAULT_ORDER_CAP = 5000


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., n-1}`` given by its image array.

    Products compose right-to-left: ``(a * b)(i) == a(b(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a bijection on 0..{len(images) - 1}: {images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for k, a in enumerate(cyc):
                if a in seen or not 0 <= a < degree:
                    raise InvalidPermutation(f"bad cycle {tuple(cyc)} for degree {degree}")
                seen.add(a)
                images[a] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[i] for i in other.images))

    def cycles(self) -> list[tuple[int, ...]]:
        out, seen = [], set()
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycle_line(line: str) -> list[tuple[int, ...]]:
    """Parse ``"(0 1 2 3)(4 5)"`` into a list of integer cycles."""
    stripped = line.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise InvalidPermutation(f"cannot parse cycle notation: {line!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        try:
            pts = tuple(int(tok) for tok in body.split())
        except ValueError:
            raise InvalidPermutation(f"non-integer point in cycle ({body})") from None
        if pts:
            cycles.append(pts)
    return cycles


def parse_generators(lines: Iterable[str]) -> list[Permutation]:
    """Read one generator per line; the shared degree is 1 + the largest point."""
    parsed = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if line:
            parsed.append(parse_cycle_line(line))
    if not parsed:
        raise InvalidPermutation("no generators given")
    points = [a for cycles in parsed for cyc in cycles for a in cyc]
    degree = 1 + max(points) if points else 1
    return [Permutation.from_cycles(cycles, degree) for cycles in parsed]


def read_generator_file(path: str | Path) -> list[Permutation]:
    return parse_generators(Path(path).read_text().splitlines())


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class FiniteGroup:
    """An enumerated finite group.

    ``table[a, b]`` is the index of the product ``a*b``; index 0 is the
    identity.  Derived data (classes, element orders) is cached on first
    use; the group itself is never mutated after construction.
    """

    def __init__(
        self,
        table: np.ndarray,
        generators: Sequence[int],
        label: str = "",
        elements: Sequence | None = None,
    ) -> None:
        table = np.ascontiguousarray(table, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n) or n == 0:
            raise ValueError("multiplication table must be a nonempty square array")
        if not (np.array_equal(table[0], np.arange(n)) and np.array_equal(table[:, 0], np.arange(n))):
            raise ValueError("index 0 must be the identity")
        inv = np.argmax(table == 0, axis=1)
        if not np.all(table[np.arange(n), inv] == 0):
            raise ValueError("table has elements without inverses")
        self.table = _freeze(table)
        self.inv_table = _freeze(inv.astype(np.int64))
        self.generators = tuple(int(g) for g in generators)
        self.label = label
        self.elements = tuple(elements) if elements is not None else tuple(range(n))
        self._cache: dict = {}

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inv_table[a])

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"


@dataclass(frozen=True)
class SubgroupHandle:
    members: tuple[int, ...]
    member_set: frozenset = field(repr=False, compare=False, default=frozenset())

    def __post_init__(self) -> None:
        members = tuple(sorted(int(m) for m in self.members))
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "member_set", frozenset(members))

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def mask(self, n: int) -> np.ndarray:
        m = np.zeros(n, dtype=bool)
        m[list(self.members)] = True
        return m


@dataclass(frozen=True)
class ConjugacyClassInfo:
    representative: int
    members: tuple[int, ...]
    element_order: int
    power_map: dict[int, int]
    # class index of representative**k for every k in range(element_order)
    power_classes: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def inverse_class(self) -> int:
        return self.power_classes[-1] if self.element_order > 1 else self.power_classes[0]


# ---------------------------------------------------------------------------
# enumeration


def _encode_rows(perms: np.ndarray) -> np.ndarray | None:
    degree = perms.shape[1]
    if degree ** degree >= 2**62:
        return None
    weights = np.array([degree**i for i in range(degree)], dtype=np.int64)
    return perms.astype(np.int64) @ weights


def enumerate_group(
    generators: Sequence[Permutation],
    cap: int = DEFAULT_ORDER_CAP,
    label: str = "",
) -> FiniteGroup:
    """Close the generators under composition.

    Elements are discovered breadth-first from the identity, right-multiplying
    by the generators in the given order.
    """
    if not generators:
        raise InvalidPermutation("need at least one generator")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise InvalidPermutation("generators have different degrees")

    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    gen_images = [g.images for g in generators]
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gen_images:
            y = tuple(x[i] for i in g)
            if y not in index:
                if len(elements) >= cap:
                    raise OrderCapExceeded(f"group order exceeds cap {cap}")
                index[y] = len(elements)
                elements.append(y)

    n = len(elements)
    perms = np.array(elements, dtype=np.int64).reshape(n, degree)
    table = np.empty((n, n), dtype=np.int64)
    codes = _encode_rows(perms)
    if codes is not None:
        order = np.argsort(codes)
        sorted_codes = codes[order]
        for a in range(n):
            prod = _encode_rows(perms[a][perms])
            table[a] = order[np.searchsorted(sorted_codes, prod)]
    else:
        for a in range(n):
            prods = perms[a][perms]
            table[a] = [index[tuple(row)] for row in prods.tolist()]

    gens = [index[g.images] for g in generators]
    return FiniteGroup(table, gens, label=label, elements=[Permutation(e) for e in elements])


# ---------------------------------------------------------------------------
# elements and classes


def element_orders(G: FiniteGroup) -> np.ndarray:
    if "orders" not in G._cache:
        n = G.order
        orders = np.zeros(n, dtype=np.int64)
        power = np.arange(n)
        k = 1
        while np.any(orders == 0):
            hit = (power == 0) & (orders == 0)
            orders[hit] = k
            power = G.table[power, np.arange(n)]
            k += 1
        G._cache["orders"] = _freeze(orders)
    return G._cache["orders"]


def element_order(G: FiniteGroup, x: int) -> int:
    k, y = 1, x
    while y != 0:
        y = G.mul(y, x)
        k += 1
    return k


def exponent(G: FiniteGroup) -> int:
    e = 1
    for o in set(element_orders(G).tolist()):
        e = e * o // gcd(e, o)
    return e


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClassInfo]:
    """Conjugacy classes sorted by (element order, size, least member)."""
    if "classes" in G._cache:
        return G._cache["classes"]
    n = G.order
    orders = element_orders(G)
    assigned = np.full(n, -1, dtype=np.int64)
    raw = []
    for x in range(n):
        if assigned[x] >= 0:
            continue
        orbit = np.unique(G.table[G.table[:, x], G.inv_table])
        assigned[orbit] = len(raw)
        raw.append(orbit)
    raw.sort(key=lambda m: (int(orders[m[0]]), len(m), int(m[0])))
    class_of = np.empty(n, dtype=np.int64)
    for i, members in enumerate(raw):
        class_of[members] = i

    classes = []
    for members in raw:
        rep = int(members[0])
        o = int(orders[rep])
        powers = [0]
        y = rep
        for _ in range(1, o):
            powers.append(y)
            y = G.mul(y, rep)
        pcls = tuple(int(class_of[y]) for y in powers)
        pmap = {k: pcls[k] for k in range(1, o) if gcd(k, o) == 1}
        if o == 1:
            pmap = {}
        classes.append(ConjugacyClassInfo(rep, tuple(int(m) for m in members), o, pmap, pcls))
    G._cache["classes"] = classes
    G._cache["class_of"] = _freeze(class_of)
    return classes


def class_of(G: FiniteGroup) -> np.ndarray:
    """Map from element index to conjugacy class index."""
    conjugacy_classes(G)
    return G._cache["class_of"]


# ---------------------------------------------------------------------------
# subgroups


def trivial_subgroup(G: FiniteGroup) -> SubgroupHandle:
    return SubgroupHandle((0,))


def whole_group(G: FiniteGroup) -> SubgroupHandle:
    return SubgroupHandle(tuple(range(G.order)))


def generate_subgroup(G: FiniteGroup, gens: Iterable[int]) -> SubgroupHandle:
    gens = np.unique(np.fromiter((int(g) for g in gens), dtype=np.int64))
    inside = np.zeros(G.order, dtype=bool)
    inside[0] = True
    frontier = np.array([0])
    while frontier.size and gens.size:
        new = np.unique(G.table[np.ix_(frontier, gens)])
        new = new[~inside[new]]
        inside[new] = True
        frontier = new
    return SubgroupHandle(tuple(np.flatnonzero(inside).tolist()))


def is_normal(G: FiniteGroup, H: SubgroupHandle) -> bool:
    mask = H.mask(G.order)
    members = np.array(H.members)
    conj = G.table[G.table[:, members], G.inv_table[:, None]]
    return bool(mask[conj].all())


def normal_closure(G: FiniteGroup, seed: Iterable[int]) -> SubgroupHandle:
    """Smallest normal subgroup containing ``seed``."""
    cls = class_of(G)
    classes = conjugacy_classes(G)
    wanted = {int(cls[s]) for s in seed}
    conj_closed = [m for c in sorted(wanted) for m in classes[c].members]
    return generate_subgroup(G, conj_closed)


def join(G: FiniteGroup, *subgroups: SubgroupHandle) -> SubgroupHandle:
    return generate_subgroup(G, {m for H in subgroups for m in H.members})


def centralizer(G: FiniteGroup, x: int) -> SubgroupHandle:
    return SubgroupHandle(tuple(np.flatnonzero(G.table[:, x] == G.table[x, :]).tolist()))


# ---------------------------------------------------------------------------
# arithmetic helpers


def prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_divisors(n) == [n]


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


# ---------------------------------------------------------------------------
# characteristic subgroups


def _class_closures(G: FiniteGroup) -> list[SubgroupHandle]:
    if "class_closures" not in G._cache:
        G._cache["class_closures"] = [normal_closure(G, [c.representative]) for c in conjugacy_classes(G)]
    return G._cache["class_closures"]


def _join_of_closures(G: FiniteGroup, accept) -> SubgroupHandle:
    result = trivial_subgroup(G)
    for closure in _class_closures(G):
        if accept(closure.order) and not closure.member_set <= result.member_set:
            result = join(G, result, closure)
    return result


def p_prime_core(G: FiniteGroup, p: int) -> SubgroupHandle:
    """O_{p'}(G), the largest normal subgroup of order prime to p."""
    key = ("Opprime", p)
    if key not in G._cache:
        core = _join_of_closures(G, lambda m: m % p != 0)
        assert core.order % p != 0 and is_normal(G, core)
        for closure in _class_closures(G):
            if not closure.member_set <= core.member_set:
                assert join(G, core, closure).order % p == 0
        G._cache[key] = core
    return G._cache[key]


def p_core(G: FiniteGroup, p: int) -> SubgroupHandle:
    """O_p(G), the largest normal p-subgroup."""
    key = ("Op", p)
    if key not in G._cache:
        core = _join_of_closures(G, lambda m: is_p_power(m, p))
        assert is_p_power(core.order, p)
        G._cache[key] = core
    return G._cache[key]


def fitting_subgroup(G: FiniteGroup) -> SubgroupHandle:
    return join(G, trivial_subgroup(G), *(p_core(G, q) for q in prime_divisors(G.order)))


def is_nilpotent(G: FiniteGroup) -> bool:
    return fitting_subgroup(G).order == G.order


# ---------------------------------------------------------------------------
# constructions


def quotient_map(G: FiniteGroup, N: SubgroupHandle) -> tuple[FiniteGroup, np.ndarray]:
    """Return ``G/N`` and the projection from element indices to coset indices.

    Cosets are ordered by their least member index, so the coset of the
    identity is index 0.
    """
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    members = np.array(N.members)
    least = G.table[:, members].min(axis=1)
    reps = np.unique(least)
    proj = np.searchsorted(reps, least)
    qtable = proj[G.table[np.ix_(reps, reps)]]
    gens = [int(proj[g]) for g in G.generators]
    label = f"{G.label}/N{N.order}" if G.label else ""
    Q = FiniteGroup(qtable, gens, label=label, elements=reps.tolist())
    return Q, _freeze(proj)


def quotient(G: FiniteGroup, N: SubgroupHandle) -> FiniteGroup:
    return quotient_map(G, N)[0]


def preimage(proj: np.ndarray, H: SubgroupHandle) -> SubgroupHandle:
    mask = np.zeros(int(proj.max()) + 1, dtype=bool)
    mask[list(H.members)] = True
    return SubgroupHandle(tuple(np.flatnonzero(mask[proj]).tolist()))


def direct_product(G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Pairs ``(g, h)`` stored at index ``g*|H| + h``."""
    m, k = G.order, H.order
    if m * k > cap:
        raise OrderCapExceeded(f"|G x H| = {m * k} exceeds cap {cap}")
    table = G.table[:, None, :, None] * k + H.table[None, :, None, :]
    table = table.reshape(m * k, m * k)
    gens = [g * k for g in G.generators] + list(H.generators)
    elements = [(a, b) for a in G.elements for b in H.elements]
    label = f"{G.label}x{H.label}" if G.label and H.label else ""
    return FiniteGroup(table, gens, label=label, elements=elements)


# ---------------------------------------------------------------------------
# structural predicates


def is_p_solvable(G: FiniteGroup, p: int) -> bool:
    """Walk the upper p-series 1 <= O_p' <= O_p'p <= ... and test if it reaches G."""
    key = ("p_solvable", p)
    if key in G._cache:
        return G._cache[key]
    N = trivial_subgroup(G)
    while True:
        Q, proj = quotient_map(G, N)
        N1 = preimage(proj, p_prime_core(Q, p))
        Q, proj = quotient_map(G, N1)
        N2 = preimage(proj, p_core(Q, p))
        if N2.order == N.order:
            break
        N = N2
    G._cache[key] = N.order == G.order
    return G._cache[key]


def is_solvable(G: FiniteGroup) -> bool:
    return all(is_p_solvable(G, q) for q in prime_divisors(G.order))


def is_frobenius_with_p_kernel(G: FiniteGroup, p: int) -> bool:
    """True iff G is a Frobenius group whose kernel is a p-group.

    A normal p-subgroup that is a Frobenius kernel must equal O_p(G): any
    smaller one meets Z(O_p(G)) and so has an element centralized by all of
    O_p(G).  Only that candidate is tested.
    """
    K = p_core(G, p)
    if K.order in (1, G.order):
        return False
    for k in K.members:
        if k == 0:
            continue
        if not centralizer(G, k).member_set <= K.member_set:
            return False
    return True
