"""Corpus verification: every (group, prime) pair against theorems and the oracle."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .catalog import load_manifest, named_group
from .chartable import character_table
from .groups import FiniteGroup, conjugacy_classes, is_solvable, prime_divisors
from .oracle import (
    DEFAULT_TOL,
    build_adjacency,
    compare_spectra,
    components_and_diameter,
    expand,
    symmetric_eigenvalues,
)
from .partitions import Partition, mn_table
from .spectra import Analysis, analyze, applicable_verdicts, verify_corollary_large, verify_corollary_solvable

ORACLE_MAX = 300
LARGE_MAX = 60


@dataclass
class CorpusRow:
    group: str
    order: int
    prime: int | None
    checks: dict[str, bool] = field(default_factory=dict)
    energy: int | None = None
    nullity: int | None = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def oracle_checks(a: Analysis, tol: float = DEFAULT_TOL) -> dict[str, bool]:
    """Compare the character spectrum with brute force on the adjacency matrix."""
    G, prof, rep = a.group, a.profile, a.report
    A = build_adjacency(G, prof.elements)
    numeric = symmetric_eigenvalues(A, tol)
    exact = expand(rep.eigs)
    n_comp, diameters = components_and_diameter(A)
    top_value, top_mult = rep.eigs[0]
    return {
        "oracle_spectrum": compare_spectra(exact, numeric, tol),
        "oracle_nullity": sum(abs(x) <= tol for x in numeric) == rep.nullity,
        "top_eigenvalue": top_value == prof.d_p and top_mult == prof.c_p,
        "oracle_components": n_comp == prof.c_p,
        "oracle_diameter": all(d == rep.diameter for d in diameters),
        "regular": bool(np.all(A.bits.sum(axis=1) == prof.d_p)),
        "edge_count": 2 * A.edge_count == G.order * prof.d_p,
        "trace": abs(sum(numeric)) <= len(numeric) * tol,
    }


def check_pair(G: FiniteGroup, p: int, oracle_max: int = ORACLE_MAX) -> CorpusRow:
    a = analyze(G, p)
    row = CorpusRow(G.label, G.order, p, energy=a.report.energy, nullity=a.report.nullity)
    for name, verdict in applicable_verdicts(G, p).items():
        for check, ok in verdict.checks.items():
            row.checks[f"{name}.{check}"] = ok
    row.checks["trace_zero"] = sum(v * m for v, m in a.report.eigs) == 0
    row.checks["multiplicities"] = sum(m for _, m in a.report.eigs) == G.order
    if G.order <= oracle_max:
        row.checks.update(oracle_checks(a))
    return row


def check_group(name: str, oracle_max: int = ORACLE_MAX, large_max: int = LARGE_MAX) -> list[CorpusRow]:
    G = named_group(name)
    character_table(G)
    rows = [check_pair(G, p, oracle_max) for p in prime_divisors(G.order)]
    if G.order == 1:
        return rows
    if is_solvable(G):
        row = CorpusRow(G.label, G.order, None)
        row.checks.update({f"corollary_solvable.{k}": v for k, v in verify_corollary_solvable(G).checks.items()})
        rows.append(row)
    if G.order <= large_max:
        row = CorpusRow(G.label, G.order, None)
        row.checks.update({f"corollary_large.{k}": v for k, v in verify_corollary_large(G).checks.items()})
        rows.append(row)
    return rows


def corpus_names(max_order: int) -> list[str]:
    return [g["name"] for g in load_manifest()["groups"] if g["order"] <= max_order]


def run_corpus(
    max_order: int,
    oracle_max: int = ORACLE_MAX,
    large_max: int = LARGE_MAX,
    workers: int = 1,
) -> list[CorpusRow]:
    """Rows come back in manifest order whatever the worker count."""
    names = corpus_names(max_order)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = pool.map(check_group, names, [oracle_max] * len(names), [large_max] * len(names))
            return [row for chunk in chunks for row in chunk]
    return [row for name in names for row in check_group(name, oracle_max, large_max)]


def cycle_type(perm) -> Partition:
    lengths = sorted((len(c) for c in perm.cycles()), reverse=True)
    fixed = perm.degree - sum(lengths)
    return Partition(tuple(lengths) + (1,) * fixed)


def mn_matches_dixon(n: int) -> bool:
    """The MN table of S_n equals the computed character table of S_n.

    Columns of the computed table are matched to partitions by the cycle type
    of each class representative; rows are compared as a multiset.
    """
    parts, values = mn_table(n)
    G = named_group(f"S{n}")
    T = character_table(G)
    col_of = {cycle_type(G.elements[c.representative]): j for j, c in enumerate(conjugacy_classes(G))}
    if sorted(col_of) != sorted(parts):
        return False
    order = [col_of[mu] for mu in parts]
    dixon = sorted(tuple(T.values[r][j].to_int() for j in order) for r in range(len(T.values)))
    return dixon == sorted(tuple(row) for row in values)
