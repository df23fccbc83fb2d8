from __future__ import annotations

import pytest

from oreh.core.algebra import AlgebraContext
from oreh.core.poly import Poly

X = Poly.x()


@pytest.fixture
def ctx_x() -> AlgebraContext:
    return AlgebraContext(X)


@pytest.fixture
def ctx_x2() -> AlgebraContext:
    return AlgebraContext(X**2)


@pytest.fixture
def ctx_x3() -> AlgebraContext:
    return AlgebraContext(X**3)


@pytest.fixture
def ctx_x2_minus_1() -> AlgebraContext:
    return AlgebraContext(X**2 - 1)


@pytest.fixture
def ctx_cubic() -> AlgebraContext:
    return AlgebraContext(X**3 + X + 1)
