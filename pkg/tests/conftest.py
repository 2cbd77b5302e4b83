import re

import numpy as np
import pytest
from hypothesis import settings

from spernerkit.complex import Complex, GeometricComplex, boundary_subcomplex, standard_simplex

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def random_complex(rng, n_vertices=5, max_dim=3, n_tops=None):
    """Downward closure of a few random vertex subsets."""
    n_tops = rng.integers(1, 6) if n_tops is None else n_tops
    tops = []
    for _ in range(n_tops):
        size = rng.integers(1, max_dim + 2)
        size = min(size, n_vertices)
        tops.append(sorted(rng.choice(n_vertices, size=size, replace=False).tolist()))
    return Complex.from_maximal(tops)


def geometric_boundary(n):
    """The boundary complex of the standard n-simplex, with its coordinates."""
    D = standard_simplex(n)
    B = boundary_subcomplex(D.complex)
    return GeometricComplex(B, {v: D.coords[v] for v in B.vertices})


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


_CRIT = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _CRIT.search(getattr(rep, "nodeid", ""))
            if m and rep.when == "call" or (m and outcome == "error"):
                rows.append((int(m.group(1)), m.group(2), "PASS" if outcome == "passed" else "FAIL"))
    if rows:
        terminalreporter.section("acceptance criteria")
        for num, name, status in sorted(set(rows)):
            terminalreporter.write_line(f"criterion {num:2d} {name}: {status}")
