"""Acceptance criteria, one test each.

Each test prints a single PASS/FAIL line (also collected into the terminal
summary) and then asserts.
"""

import time

import pytest

from cayspec.catalog import catalog, load_manifest, named_group
from cayspec.chartable import certify, character_table, restrict_to_quotient
from cayspec.corpus import corpus_names, mn_matches_dixon, run_corpus
from cayspec.errors import CertificationFailed
from cayspec.groups import (
    enumerate_group,
    is_nilpotent,
    is_p_power,
    is_p_solvable,
    is_solvable,
    p_part,
    prime_divisors,
)
from cayspec.oracle import DEFAULT_TOL
from cayspec.partitions import all_q_cores, conjugate, degree_hook_length, mn_table, partitions_of, q_core, sign
from cayspec.spectra import (
    analyze,
    principal_block_membership,
    verify_corollary_large,
    verify_corollary_solvable,
    verify_singularity_predicates,
    verify_theorem_nil,
)

from conftest import record

MAX_ORDER = 500
ORACLE_MAX = 300
CORPUS_SECONDS = 300


def report(n, ok, detail):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    record(n, ok, detail)
    assert ok, detail


@pytest.fixture(scope="module")
def corpus():
    start = time.perf_counter()
    rows = run_corpus(MAX_ORDER, oracle_max=ORACLE_MAX)
    return rows, time.perf_counter() - start


def pairs(max_order=MAX_ORDER):
    for name in corpus_names(max_order):
        G = named_group(name)
        for p in prime_divisors(G.order):
            yield G, p


def test_criterion_01_s4_anchor():
    start = time.perf_counter()
    G = enumerate_group(catalog("S4"), label="S4")
    rep = analyze(G, 2).report
    elapsed = time.perf_counter() - start
    ok = rep.energy == 54 and rep.hyperenergetic and 2 * G.order - 2 == 46 and elapsed < 1.0
    report(1, ok, f"S4 p=2 energy {rep.energy} > 46, hyperenergetic={rep.hyperenergetic}, {elapsed:.3f}s")


def test_criterion_02_nullity(corpus):
    rows, elapsed = corpus
    bad = []
    count = 0
    for G, p in pairs():
        if not is_p_solvable(G, p):
            continue
        count += 1
        a = analyze(G, p)
        if a.report.nullity != G.order - a.profile.r_p:
            bad.append((G.label, p, "formula"))
    oracle_bad = [(r.group, r.prime) for r in rows if r.prime and r.order <= ORACLE_MAX and not r.checks["oracle_nullity"]]
    ok = not bad and not oracle_bad and elapsed < CORPUS_SECONDS
    report(2, ok, f"{count} p-solvable pairs, mismatches {bad + oracle_bad}, corpus run {elapsed:.1f}s")


def test_criterion_03_integrality():
    count = 0
    bad = []
    for g in load_manifest()["groups"]:
        G = named_group(g["name"])
        for p in prime_divisors(G.order):
            a = analyze(G, p)
            for r, d in enumerate(a.table.degrees):
                total = a.table.class_sum(r, a.profile.class_indices)
                count += 1
                if not total.is_rational() or total.to_int() % d:
                    bad.append((G.label, p, r))
    report(3, not bad, f"{count} eigenvalues over the whole manifest, non-integral {bad}")


def test_criterion_04_oracle(corpus):
    rows, _ = corpus
    keys = ("oracle_spectrum", "top_eigenvalue", "oracle_components")
    checked = [r for r in rows if r.prime and r.order <= ORACLE_MAX]
    bad = [(r.group, r.prime, k) for r in checked for k in keys if not r.checks.get(k, False)]
    report(4, bool(checked) and not bad, f"{len(checked)} pairs against the Jacobi oracle at tol {DEFAULT_TOL}, failures {bad}")


NIL = [("C6", 2, 6), ("S3", 3, 8), ("A4", 3, 16), ("F21", 3, 28), ("F21", 7, 36)]


def test_criterion_05_nil_suite():
    bad = []
    for name, p, energy in NIL:
        G = named_group(name)
        v = verify_theorem_nil(G, p)
        n = G.order
        expected = 2 * n - 2 * (n // p_part(n, p))
        prof = analyze(G, p).profile
        if not (
            v.passed
            and v.values["energy"] == energy == expected
            and prof.d_p == prof.H_p.order - prof.O_p_prime.order
            and prof.H_p.order == p_part(n, p) * prof.O_p_prime.order
        ):
            bad.append((name, p))
    report(5, not bad, f"energies {[e for _, _, e in NIL]}, failures {bad}")


def test_criterion_06_energy_bounds():
    bad = []
    count = 0
    for G, p in pairs():
        if not is_p_solvable(G, p):
            continue
        count += 1
        rep, prof = analyze(G, p).report, analyze(G, p).profile
        additive = prof.r_p + prof.c_p * (prof.d_p - 1)
        squared = G.order * prof.d_p + prof.r_p * (prof.r_p - 1)
        if rep.energy < additive or rep.energy * rep.energy < squared:
            bad.append((G.label, p))
    report(6, not bad, f"{count} p-solvable pairs, violations {bad}")


def test_criterion_07_diameter():
    bad = []
    count = 0
    for G, p in pairs():
        if not is_p_solvable(G, p):
            continue
        count += 1
        if analyze(G, p).report.diameter > p_part(G.order, p):
            bad.append((G.label, p))
    report(7, not bad, f"{count} p-solvable pairs, violations {bad}")


def test_criterion_08_blocks():
    bad = []
    for G, p in pairs():
        a = analyze(G, p)
        T = a.table
        rows = range(len(T.values))
        if any(principal_block_membership(T, a.profile, r) != (r in a.blocks.principal) for r in rows):
            bad.append((G.label, p, "membership"))
        if is_p_solvable(G, p) and tuple(restrict_to_quotient(T, G, a.profile.O_p_prime)) != a.blocks.principal:
            bad.append((G.label, p, "kernel"))
        if a.report.singular != (len(a.blocks) >= 2):
            bad.append((G.label, p, "singular"))
    a5 = analyze(named_group("A5"), 5)
    split = [sorted(a5.table.degrees[r] for r in b) for b in a5.blocks.blocks]
    if split != [[1, 3, 3, 4], [5]]:
        bad.append(("A5", 5, str(split)))
    report(8, not bad, f"A5 p=5 blocks {split}, failures {bad}")


def test_criterion_09_corollaries():
    bad = []
    for name in corpus_names(MAX_ORDER):
        G = named_group(name)
        if G.order > 1 and is_solvable(G) and not verify_corollary_solvable(G).passed:
            bad.append((name, "solvable"))
        for p in prime_divisors(G.order):
            v = verify_singularity_predicates(G, p)
            if is_nilpotent(G) and not is_p_power(G.order, p) and not v.checks["nilpotent_not_p_group"]:
                bad.append((name, p, "nilpotent"))
            if not v.passed:
                bad.append((name, p, "predicates"))
    for name in ("C1", "C2", "S3", "A4"):
        if not verify_corollary_large(named_group(name)).passed:
            bad.append((name, "large"))
    report(9, not bad, f"failures {bad}")


def test_criterion_10_murnaghan_nakayama():
    bad = []
    for n in range(1, 7):
        if not mn_matches_dixon(n):
            bad.append(("dixon", n))
        parts, values = mn_table(n)
        index = {lam: i for i, lam in enumerate(parts)}
        for lam, row in zip(parts, values):
            if values[index[conjugate(lam)]] != [sign(mu) * v for mu, v in zip(parts, row)]:
                bad.append(("sign", n, str(lam)))
    for n in range(1, 9):
        parts, values = mn_table(n)
        ident = 0  # (1^n) sorts first
        if [row[ident] for row in values] != [degree_hook_length(lam) for lam in parts]:
            bad.append(("degree", n))
        for q in (2, 3, 5):
            for lam in partitions_of(n):
                if all_q_cores(lam, q) != {q_core(lam, q)}:
                    bad.append(("core", str(lam), q))
    report(10, not bad, f"n<=6 table/sign, n<=8 degrees and q-cores, failures {bad}")


def test_criterion_11_certification():
    bad = []
    names = [g["name"] for g in load_manifest()["groups"]]
    for name in names:
        G = named_group(name)
        T = character_table(G)
        try:
            certify(T)
        except CertificationFailed as exc:
            bad.append((name, str(exc)))
            continue
        if sum(d * d for d in T.degrees) != G.order:
            bad.append((name, "degrees"))
        if any(not T.class_sum(r, range(T.n_classes)).is_zero() for r in range(1, len(T.values))):
            bad.append((name, "row sum"))
    report(11, not bad, f"{len(names)} groups certified, failures {bad}")
