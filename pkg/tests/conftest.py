from fractions import Fraction

import pytest

from quasisim.model import ModelPair
from quasisim.subspace import canonical_basis


def vec(*terms):
    """Sum of flat vectors, e.g. ``vec(p.e(1), p.f(0))``."""
    return tuple(sum(xs, Fraction(0)) for xs in zip(*terms))


def span(p, *vectors):
    return canonical_basis(list(vectors), p)


@pytest.fixture
def p21():
    return ModelPair(2, 1)


@pytest.fixture
def p32():
    return ModelPair(3, 2)


@pytest.fixture
def p22():
    return ModelPair(2, 2)
