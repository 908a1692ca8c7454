from __future__ import annotations

import sys

import pytest

from galoiskit import catalog
from galoiskit.algebra import Morphism, Point
from galoiskit.constructions import product


@pytest.fixture
def z2():
    return catalog.cyclic_group(2)


@pytest.fixture
def b2():
    return catalog.b2()


@pytest.fixture
def one():
    return catalog.trivial_monoid()


@pytest.fixture
def n3_to_b2():
    """Saturating ``N3`` onto ``B2``: 0 -> 0, 1 -> 1, 2 -> 1."""
    return Morphism(catalog.n3(), catalog.b2(), [0, 1, 1])


@pytest.fixture
def k3_point():
    """``K3 -> B2`` (e -> 0, a, z -> 1) split by 0 -> e, 1 -> z."""
    f = Morphism(catalog.k3(), catalog.b2(), [0, 1, 1])
    return Point(f, Morphism(catalog.b2(), catalog.k3(), [0, 2]))


@pytest.fixture
def product_point():
    """Second projection ``Z2 x B2 -> B2`` with section ``b -> (0, b)``."""
    span = product(catalog.cyclic_group(2), catalog.b2())
    section = span.mediate(Morphism(catalog.b2(), catalog.cyclic_group(2), [0, 0]), Morphism(catalog.b2(), catalog.b2(), [0, 1]))
    return Point(span.leg2, section)


def pytest_terminal_summary(terminalreporter):
    module = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for key in sorted(results):
            terminalreporter.write_line(results[key])
