import numpy as np
import pytest

from cayspec.catalog import named_group


@pytest.fixture(scope="session")
def group():
    return named_group


def brute_classes(G):
    """Conjugacy classes straight from the multiplication table."""
    seen, out = set(), []
    for x in range(G.order):
        if x in seen:
            continue
        orbit = {int(G.table[G.table[g, x], G.inv_table[g]]) for g in range(G.order)}
        seen |= orbit
        out.append(frozenset(orbit))
    return out


def class_of_element(G, x):
    return next(c for c in brute_classes(G) if x in c)


def numeric_spectrum(G, elements):
    A = np.zeros((G.order, G.order))
    S = set(elements)
    for u in range(G.order):
        for v in range(G.order):
            if int(G.table[v, G.inv_table[u]]) in S:
                A[u, v] = 1
    return np.linalg.eigvalsh(A)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
