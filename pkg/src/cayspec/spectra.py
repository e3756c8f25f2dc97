"""Spectra, energy, nullity and p-blocks of Cayley graphs on p-singular elements.

For a prime p dividing |G| the graph Gamma_p(G) has the group elements as
vertices and joins u to a*u whenever the order of a is divisible by p.  The
connection set is a union of conjugacy classes, so each irreducible
character chi contributes the eigenvalue

    eta_chi = (1 / chi(1)) * sum_{a p-singular} chi(a)

with multiplicity chi(1)**2.  Everything below is computed exactly from the
character table; the oracle module provides the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import sqrt

import numpy as np

from .catalog import named_group
from .chartable import CharacterTable, character_table, restrict_to_quotient
from .errors import (
    HypothesisNotMet,
    IntegralityViolation,
    NotPSolvable,
    NotSolvable,
    PrimeDoesNotDivideOrder,
)
from .groups import (
    ConjugacyClassInfo,
    FiniteGroup,
    SubgroupHandle,
    conjugacy_classes,
    direct_product,
    fitting_subgroup,
    is_frobenius_with_p_kernel,
    is_nilpotent,
    is_p_power,
    is_p_solvable,
    is_solvable,
    normal_closure,
    p_core,
    p_part,
    p_prime_core,
    prime_divisors,
    quotient,
)
from .oracle import cayley_component_diameter


@dataclass(frozen=True)
class PSingularProfile:
    p: int
    class_indices: tuple[int, ...]
    elements: tuple[int, ...]
    H_p: SubgroupHandle
    O_p_prime: SubgroupHandle
    order: int

    @property
    def d_p(self) -> int:
        return len(self.elements)

    @property
    def c_p(self) -> int:
        return self.order // self.H_p.order

    @property
    def r_p(self) -> int:
        return self.order // self.O_p_prime.order


@dataclass(frozen=True)
class SpectrumReport:
    order: int
    eigs: tuple[tuple[int, int], ...]
    # eigenvalue contributed by each character row
    row_eigenvalues: tuple[int, ...]
    nullity: int
    energy: int
    bound_additive: int
    bound_sqrt: float
    # |G| d_p + r_p (r_p - 1); bound_sqrt is its square root
    bound_sqrt_squared: int
    diameter: int

    @property
    def singular(self) -> bool:
        return self.nullity > 0

    @property
    def hyperenergetic(self) -> bool:
        return self.energy > 2 * self.order - 2

    def meets_sqrt_bound(self) -> bool:
        return self.energy * self.energy >= self.bound_sqrt_squared


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple[tuple[int, ...], ...]
    principal_index: int

    @property
    def principal(self) -> tuple[int, ...]:
        return self.blocks[self.principal_index]

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass
class Verdict:
    name: str
    checks: dict[str, bool] = field(default_factory=dict)
    values: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": dict(self.checks), "values": dict(self.values)}


# ---------------------------------------------------------------------------
# exact spectrum


def p_singular_profile(G: FiniteGroup, p: int) -> PSingularProfile:
    if G.order % p:
        raise PrimeDoesNotDivideOrder(f"{p} does not divide |{G.label or 'G'}| = {G.order}")
    classes = conjugacy_classes(G)
    idx = tuple(i for i, c in enumerate(classes) if c.element_order % p == 0)
    elements = tuple(sorted(m for i in idx for m in classes[i].members))
    return PSingularProfile(
        p=p,
        class_indices=idx,
        elements=elements,
        H_p=normal_closure(G, elements),
        O_p_prime=p_prime_core(G, p),
        order=G.order,
    )


def singular_sum(T: CharacterTable, prof: PSingularProfile, row: int) -> int:
    """sum of chi over the p-singular elements, as a rational integer."""
    total = T.class_sum(row, prof.class_indices)
    if not total.is_rational():
        raise IntegralityViolation(f"row {row}: singular-element sum {total} is irrational")
    return total.to_int()


def spectrum(T: CharacterTable, prof: PSingularProfile, G: FiniteGroup) -> SpectrumReport:
    row_eigs = []
    for r, d in enumerate(T.degrees):
        s = singular_sum(T, prof, r)
        if s % d:
            raise IntegralityViolation(f"row {r}: {s} is not divisible by degree {d}")
        row_eigs.append(s // d)
    mult: dict[int, int] = {}
    for eig, d in zip(row_eigs, T.degrees):
        mult[eig] = mult.get(eig, 0) + d * d
    eigs = tuple(sorted(mult.items(), reverse=True))
    n, dp, cp, rp = prof.order, prof.d_p, prof.c_p, prof.r_p
    sq = n * dp + rp * (rp - 1)
    return SpectrumReport(
        order=n,
        eigs=eigs,
        row_eigenvalues=tuple(row_eigs),
        nullity=mult.get(0, 0),
        energy=sum(abs(v) * m for v, m in eigs),
        bound_additive=rp + cp * (dp - 1),
        bound_sqrt=sqrt(sq),
        bound_sqrt_squared=sq,
        diameter=cayley_component_diameter(G, prof.elements),
    )


# ---------------------------------------------------------------------------
# blocks


def principal_block_membership(T: CharacterTable, prof: PSingularProfile, row: int) -> bool:
    return singular_sum(T, prof, row) != 0


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def linked(T: CharacterTable, p: int, classes: list[ConjugacyClassInfo] | None = None) -> list[tuple[int, int]]:
    """Pairs r < s with nonzero p-regular inner sum."""
    orders = [c.element_order for c in classes] if classes is not None else list(T.class_orders)
    regular = [j for j, o in enumerate(orders) if o % p]
    nonzero = ~T.vanishing(T.gram(regular))
    return [(int(r), int(s)) for r, s in np.argwhere(np.triu(nonzero, 1))]


def block_partition(T: CharacterTable, p: int, classes: list[ConjugacyClassInfo] | None = None) -> BlockPartition:
    """Connected components of the linking relation on Irr(G)."""
    uf = _UnionFind(len(T.values))
    for r, s in linked(T, p, classes):
        uf.union(r, s)
    groups: dict[int, list[int]] = {}
    for r in range(len(T.values)):
        groups.setdefault(uf.find(r), []).append(r)
    blocks = tuple(sorted(tuple(g) for g in groups.values()))
    principal = next(i for i, b in enumerate(blocks) if 0 in b)
    return BlockPartition(blocks, principal)


def nullity_via_blocks(T: CharacterTable, prof: PSingularProfile, blocks: BlockPartition) -> int:
    return prof.order - sum(T.degrees[r] ** 2 for r in blocks.principal)


def energy_by_principal_rows(T: CharacterTable, prof: PSingularProfile, rows) -> int:
    """sum over the given rows of chi(1)^2 * |singular sum| / chi(1)."""
    total = 0
    for r in rows:
        s = abs(singular_sum(T, prof, r))
        total += T.degrees[r] * s
    return total


# ---------------------------------------------------------------------------
# bundled analysis


@dataclass(frozen=True)
class Analysis:
    group: FiniteGroup
    table: CharacterTable
    profile: PSingularProfile
    report: SpectrumReport
    blocks: BlockPartition

    @property
    def p(self) -> int:
        return self.profile.p


def analyze(G: FiniteGroup, p: int) -> Analysis:
    key = ("analysis", p)
    if key not in G._cache:
        prof = p_singular_profile(G, p)
        T = character_table(G)
        G._cache[key] = Analysis(G, T, prof, spectrum(T, prof, G), block_partition(T, p, conjugacy_classes(G)))
    return G._cache[key]


# ---------------------------------------------------------------------------
# theorem checks


def verify_theorem_energy(G: FiniteGroup, p: int) -> Verdict:
    if not is_p_solvable(G, p):
        raise NotPSolvable(f"{G.label or 'G'} is not {p}-solvable")
    a = analyze(G, p)
    rep, prof, T = a.report, a.profile, a.table
    n = G.order
    quotient_rows = restrict_to_quotient(T, G, prof.O_p_prime)
    v = Verdict("theorem_energy")
    v.checks["nullity"] = rep.nullity == n - prof.r_p
    v.checks["integral"] = True
    v.checks["additive_bound"] = rep.energy >= rep.bound_additive
    v.checks["sqrt_bound"] = rep.meets_sqrt_bound()
    v.checks["diameter"] = rep.diameter <= p_part(n, p)
    v.checks["principal_block_is_quotient"] = tuple(quotient_rows) == a.blocks.principal
    v.checks["energy_from_quotient_characters"] = energy_by_principal_rows(T, prof, quotient_rows) == rep.energy
    v.values.update(
        nullity=rep.nullity,
        r_p=prof.r_p,
        energy=rep.energy,
        bound_additive=rep.bound_additive,
        bound_sqrt=rep.bound_sqrt,
        diameter=rep.diameter,
        order_p=p_part(n, p),
    )
    return v


def nil_hypothesis(G: FiniteGroup, p: int) -> bool:
    """p-solvable, and G/O_p'(G) is a p-group or Frobenius with p-group kernel."""
    if G.order % p or not is_p_solvable(G, p):
        return False
    Q = quotient(G, p_prime_core(G, p))
    return is_p_power(Q.order, p) or is_frobenius_with_p_kernel(Q, p)


def verify_theorem_nil(G: FiniteGroup, p: int) -> Verdict:
    if not nil_hypothesis(G, p):
        raise HypothesisNotMet(f"G/O_{p}'(G) is neither a {p}-group nor Frobenius with {p}-kernel")
    a = analyze(G, p)
    rep, prof = a.report, a.profile
    n = G.order
    coprime_part = n // p_part(n, p)
    expected = 2 * n - 2 * coprime_part
    shell = prof.H_p.member_set - prof.O_p_prime.member_set
    v = Verdict("theorem_nil")
    v.checks["energy"] = rep.energy == expected
    v.checks["non_hyperenergetic"] = not rep.hyperenergetic
    v.checks["H_p_order"] = prof.H_p.order == p_part(n, p) * prof.O_p_prime.order
    v.checks["d_p_identity"] = prof.d_p == prof.H_p.order - prof.O_p_prime.order
    v.checks["singular_elements_are_shell"] = set(prof.elements) == shell
    v.values.update(energy=rep.energy, expected=expected, H_p=prof.H_p.order, O_p_prime=prof.O_p_prime.order)
    return v


def verify_singularity_predicates(G: FiniteGroup, p: int) -> Verdict:
    """Hypotheses that force Gamma_p(G) to be singular.

    ``checks`` maps each hypothesis to whether its conclusion held; a
    hypothesis that does not apply counts as passed.
    """
    a = analyze(G, p)
    singular = a.report.singular
    F = fitting_subgroup(G)
    held = {
        "nilpotent_not_p_group": is_nilpotent(G) and not is_p_power(G.order, p),
        "fitting_not_p_group": not is_p_power(F.order, p),
        "p_odd_and_Op_trivial": p % 2 == 1 and p_core(G, p).order == 1,
    }
    v = Verdict("singularity_predicates")
    for name, h in held.items():
        v.checks[name] = singular if h else True
    v.values["held"] = held
    v.values["singular"] = singular
    v.values["triples"] = [(name, h, singular if h else None) for name, h in held.items()]
    return v


def verify_corollary_solvable(G: FiniteGroup) -> Verdict:
    if not is_solvable(G):
        raise NotSolvable(f"{G.label or 'G'} is not solvable")
    singular = {q: analyze(G, q).report.singular for q in prime_divisors(G.order)}
    v = Verdict("corollary_solvable")
    v.checks["at_most_one_nonsingular"] = sum(not s for s in singular.values()) <= 1
    v.values["singular"] = singular
    return v


def verify_corollary_large(G: FiniteGroup, cap: int | None = None) -> Verdict:
    kwargs = {} if cap is None else {"cap": cap}
    H = direct_product(G, named_group("C6"), **kwargs)
    v = Verdict("corollary_large")
    singular = {}
    for q in prime_divisors(H.order):
        singular[q] = analyze(H, q).report.singular
        v.checks[f"p={q}"] = singular[q]
    v.values["group"] = H.label
    v.values["singular"] = singular
    return v


def report_dict(a: Analysis, verdicts: dict | None = None) -> dict:
    """The stable JSON shape of a (group, prime) report."""
    G, prof, rep = a.group, a.profile, a.report
    return {
        "group": G.label,
        "order": G.order,
        "prime": prof.p,
        "d_p": prof.d_p,
        "c_p": prof.c_p,
        "r_p": prof.r_p,
        "order_p": p_part(G.order, prof.p),
        "eigs": [[v, m] for v, m in rep.eigs],
        "nullity": rep.nullity,
        "energy": rep.energy,
        "bound_additive": rep.bound_additive,
        "bound_sqrt": rep.bound_sqrt,
        "diameter_per_component": rep.diameter,
        "singular": rep.singular,
        "hyperenergetic": rep.hyperenergetic,
        "blocks": [list(b) for b in a.blocks.blocks],
        "principal_block": a.blocks.principal_index,
        "verdicts": verdicts or {},
    }


def applicable_verdicts(G: FiniteGroup, p: int) -> dict[str, Verdict]:
    """Run every theorem check whose hypotheses hold for (G, p)."""
    out = {"singularity_predicates": verify_singularity_predicates(G, p)}
    if is_p_solvable(G, p):
        out["theorem_energy"] = verify_theorem_energy(G, p)
        if nil_hypothesis(G, p):
            out["theorem_nil"] = verify_theorem_nil(G, p)
    a = analyze(G, p)
    v = Verdict("block_consistency")
    v.checks["principal_membership"] = all(
        principal_block_membership(a.table, a.profile, r) == (r in a.blocks.principal)
        for r in range(len(a.table.values))
    )
    v.checks["nullity_via_blocks"] = nullity_via_blocks(a.table, a.profile, a.blocks) == a.report.nullity
    v.checks["singular_iff_several_blocks"] = a.report.singular == (len(a.blocks) >= 2)
    out["block_consistency"] = v
    return out


__all__ = [
    "Analysis",
    "BlockPartition",
    "PSingularProfile",
    "SpectrumReport",
    "Verdict",
    "analyze",
    "applicable_verdicts",
    "block_partition",
    "energy_by_principal_rows",
    "nullity_via_blocks",
    "p_singular_profile",
    "principal_block_membership",
    "report_dict",
    "spectrum",
    "verify_corollary_large",
    "verify_corollary_solvable",
    "verify_singularity_predicates",
    "verify_theorem_energy",
    "verify_theorem_nil",
]
