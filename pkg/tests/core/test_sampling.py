import random

import pytest

from oreh.core import sampling
from oreh.core.algebra import AlgebraContext
from oreh.core.automorphism import ensure_valid
from oreh.core.poly import Poly
from oreh.utils.errors import InvalidInputError


@pytest.fixture
def rng() -> random.Random:
    return random.Random(11)


def test_reproducible():
    first = [sampling.poly(random.Random(3), 5) for _ in range(5)]
    second = [sampling.poly(random.Random(3), 5) for _ in range(5)]
    assert first == second


def test_normalized_h(rng):
    for degree in range(1, 5):
        ctx = AlgebraContext(sampling.normalized_h(rng, degree))
        assert ctx.is_normalized
        assert ctx.N == degree
        assert ctx.is_square_free

    for degree in range(2, 5):
        ctx = AlgebraContext(sampling.normalized_h(rng, degree, singular=True))
        assert ctx.is_normalized
        assert not ctx.is_square_free

    with pytest.raises(InvalidInputError):
        sampling.normalized_h(rng, 1, singular=True)
    with pytest.raises(InvalidInputError):
        sampling.normalized_h(rng, 0)


def test_samples_are_valid(rng):
    for _ in range(10):
        ctx = AlgebraContext(sampling.symmetric_h(rng, rng.randint(2, 5), rng.randint(1, 3)))
        ensure_valid(ctx, sampling.automorphism(rng, ctx))

        ctx = AlgebraContext(sampling.normalized_h(rng, 3, singular=True))
        D = sampling.derivation(rng, ctx, 2)
        D.H.validate(ctx)
        assert D.s.degree < ctx.N
        assert sampling.rational(rng, nonzero=True)


def test_singular_symmetric_h(rng):
    for _ in range(10):
        ctx = AlgebraContext(sampling.singular_symmetric_h(rng))
        assert ctx.is_normalized
        assert not ctx.is_square_free
        assert ctx.psi == Poly.monomial(int(ctx.psi.degree))
