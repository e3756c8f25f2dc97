import math

import numpy as np
import pytest

from cayspec.catalog import catalog_names, named_group
from cayspec.chartable import (
    CharacterTable,
    certify,
    character_table,
    charpoly_mod,
    class_constants,
    is_galois_closed,
    nullspace_mod,
    restrict_to_quotient,
    roots_mod,
    splitting_prime,
)
from cayspec.corpus import cycle_type
from cayspec.cyclotomic import CyclotomicInt
from cayspec.errors import CertificationFailed
from cayspec.groups import conjugacy_classes, p_core, p_prime_core, prime_divisors, trivial_subgroup, whole_group
from cayspec.partitions import mn_character, partitions_of


def test_class_constants_trivial_group():
    a = class_constants(named_group("C1")).constants
    assert a.shape == (1, 1, 1) and a[0, 0, 0] == 1


def test_class_constants_count_products():
    G = named_group("S3")
    classes = conjugacy_classes(G)
    a = class_constants(G, classes).constants
    for i, Ki in enumerate(classes):
        for j, Kj in enumerate(classes):
            for k, Kk in enumerate(classes):
                z = Kk.representative
                want = sum(1 for x in Ki.members for y in Kj.members if G.table[x, y] == z)
                assert a[i, j, k] == want


def test_linear_algebra_mod_prime():
    ell = 13
    X = np.array([[2, 1], [0, 5]])
    poly = charpoly_mod(X, ell)
    assert poly == [10, 6, 1]  # (x - 2)(x - 5) = x^2 - 7x + 10
    assert sorted(roots_mod(poly, ell)) == [2, 5]
    N = nullspace_mod(np.array([[1, 2, 3], [2, 4, 6]]), ell)
    assert N.shape == (2, 3)
    assert not np.any((np.array([[1, 2, 3]]) @ N.T) % ell)


@pytest.mark.parametrize("e, order", [(1, 1), (2, 6), (12, 24), (30, 60)])
def test_splitting_prime(e, order):
    ell = splitting_prime(e, order)
    assert (ell - 1) % e == 0 and ell > 2 * order
    assert all(ell % q for q in range(2, math.isqrt(ell) + 1))


def test_c2():
    T = character_table(named_group("C2"))
    assert T.degrees == (1, 1)
    assert [[v.to_int() for v in row] for row in T.values] == [[1, 1], [1, -1]]


@pytest.mark.parametrize(
    "name, degrees",
    [("S3", (1, 1, 2)), ("S4", (1, 1, 2, 3, 3)), ("A4", (1, 1, 1, 3)), ("A5", (1, 3, 3, 4, 5)), ("Q8", (1, 1, 1, 1, 2))],
)
def test_degrees(name, degrees):
    assert character_table(named_group(name)).degrees == degrees


@pytest.mark.parametrize("name", ["S3", "S4", "S5"])
def test_symmetric_groups_match_rim_hook_rule(name):
    G = named_group(name)
    T = character_table(G)
    classes = conjugacy_classes(G)
    mus = [cycle_type(G.elements[c.representative]) for c in classes]
    n = G.elements[0].degree
    mn_rows = sorted(tuple(mn_character(lam, mu) for mu in mus) for lam in partitions_of(n))
    assert sorted(tuple(v.to_int() for v in row) for row in T.values) == mn_rows


def test_a5_golden_ratio():
    T = character_table(named_group("A5"))
    phi = (1 + 5 ** 0.5) / 2
    deg3 = [r for r, d in enumerate(T.degrees) if d == 3]
    vals = sorted(round(v.to_complex().real, 9) for r in deg3 for v in T.values[r])
    for target in (phi, 1 - phi):
        assert any(abs(v - target) < 1e-8 for v in vals)


@pytest.mark.parametrize("name", [n for n in catalog_names() if named_group(n).order <= 360])
def test_certified_tables(name):
    G = named_group(name)
    T = character_table(G)
    assert T.n_classes == len(T.values)
    assert sum(d * d for d in T.degrees) == G.order
    assert all(v == 1 for v in T.values[0])
    # every non-principal character sums to zero over G
    for r in range(1, len(T.values)):
        assert T.class_sum(r, range(T.n_classes)).is_zero()


def test_certify_rejects_a_broken_table():
    T = character_table(named_group("S3"))
    rows = list(T.values)
    rows[1] = rows[2]
    bad = CharacterTable(tuple(rows), T.degrees, T.class_sizes, T.class_orders, T.exponent)
    with pytest.raises(CertificationFailed):
        certify(bad)


def test_exact_inner_products():
    T = character_table(named_group("SL(2,3)"))
    n = T.order
    for r in range(len(T.values)):
        for s in range(len(T.values)):
            assert T.inner(r, s) == (n if r == s else 0)


def test_json_round_trip():
    T = character_table(named_group("F21"))
    text = T.to_json()
    U = CharacterTable.from_json(text)
    assert U == T
    assert U.to_json() == text


@pytest.mark.parametrize("name", ["A5", "F21", "SL(2,3)", "C12", "S4"])
def test_regular_columns_are_galois_stable(name):
    G = named_group(name)
    T = character_table(G)
    for p in prime_divisors(G.order):
        cols = [j for j, o in enumerate(T.class_orders) if o % p]
        assert is_galois_closed(T, cols)


def test_restrict_to_quotient():
    C6 = named_group("C6")
    T = character_table(C6)
    assert restrict_to_quotient(T, C6, trivial_subgroup(C6)) == list(range(6))
    assert restrict_to_quotient(T, C6, whole_group(C6)) == [0]
    rows = restrict_to_quotient(T, C6, p_core(C6, 3))
    assert len(rows) == 2
    S4 = named_group("S4")
    T4 = character_table(S4)
    # S4 / V4 is S3
    rows = restrict_to_quotient(T4, S4, p_core(S4, 2))
    assert sorted(T4.degrees[r] for r in rows) == [1, 1, 2]
    F21 = named_group("F21")
    rows = restrict_to_quotient(character_table(F21), F21, p_prime_core(F21, 3))
    assert len(rows) == 3


def test_cyclic_values_are_roots_of_unity():
    T = character_table(named_group("C5"))
    assert T.exponent == 5
    roots = {CyclotomicInt.root(5, k) for k in range(5)}
    assert {v for row in T.values for v in row} == roots
