import random

import pytest
from hypothesis import given, settings, strategies as st

from quasisim.canonical import (
    NotAdmissible,
    Triple,
    admissibility_failures,
    admissible,
    admissible_triples,
    canonical_subspace,
    hyper_normalize,
    is_hyper_normal,
    weyl_data,
)
from quasisim.corpus import subspace_corpus
from quasisim.jordan import invariant_data
from quasisim.model import CommutantElement, ModelPair, all_pairs, is_quasiaffinity, monomial, psi
from quasisim.subspace import HypothesisViolated, Subspace, orbit_span, projection_exponents
from conftest import span, vec


@pytest.mark.parametrize(
    "theta, alpha, beta, ok",
    [((3, 2), (2, 1), (1, 1), True), ((3, 1), (1, 1), (1, 1), False), ((2, 2), (2, 2), (0, 0), True)],
)
def test_admissible_examples(theta, alpha, beta, ok):
    assert admissible(Triple(theta, alpha, beta)) is ok


def test_failed_condition_is_named():
    assert admissibility_failures(Triple((3, 1), (1, 1), (1, 1))) == ["b1 <= min(n0-a0, n1-a1)"]
    with pytest.raises(NotAdmissible, match="b1 <= min"):
        canonical_subspace(Triple((3, 1), (1, 1), (1, 1)))


@pytest.mark.parametrize("bad", [((2, 1), (3, 0), (0, 0)), ((2, 1), (1, 2), (0, 0)), ((1, 2), (0, 0), (0, 0))])
def test_triple_validation(bad):
    with pytest.raises(ValueError):
        Triple(*bad)


def test_canonical_examples(p32, p21, p22):
    assert canonical_subspace(Triple((3, 2), (2, 1), (1, 1))) == span(p32, p32.e(1), p32.e(2), p32.f(1))
    assert canonical_subspace(Triple((2, 1), (1, 0), (2, 0))) == span(p21, vec(p21.e(1), p21.f(0)))
    assert canonical_subspace(Triple((2, 1), (1, 0), (1, 1))) == span(p21, p21.e(1))
    assert canonical_subspace(Triple((2, 2), (2, 2), (0, 0))) == Subspace.whole(p22)


def test_triple_json():
    t = Triple((3, 2), (2, 1), (1, 1))
    assert Triple.from_json(t.to_json()) == t


@pytest.mark.parametrize("p", list(all_pairs(6)), ids=str)
def test_canonical_realization(p):
    for t in admissible_triples(p):
        N = canonical_subspace(t)
        assert projection_exponents(N) == (t.theta[0] - t.alpha[0], t.beta[1])
        assert invariant_data(N) == t.data


@pytest.mark.parametrize("p", [ModelPair(3, 2), ModelPair(4, 2), ModelPair(3, 3), ModelPair(5, 1)], ids=str)
def test_necessity(p):
    for M in subspace_corpus(p, seed=4, budget=60):
        d = invariant_data(M)
        assert admissible(Triple((p.n0, p.n1), d.alpha, d.beta))


class TestHyperNormalize:
    def test_textbook_example(self, p22):
        M = span(p22, p22.f(0), p22.f(1))
        assert projection_exponents(M) == (2, 0)
        with pytest.raises(HypothesisViolated):
            weyl_data(M)
        A = CommutantElement(p22, (1,), (1,), (0,), (1,))
        Mn = M.image(psi(A))
        assert Mn == span(p22, vec(p22.e(0), p22.f(0)), vec(p22.e(1), p22.f(1)))
        assert projection_exponents(Mn) == (0, 0)
        B, Mr = hyper_normalize(M, seed=0)
        assert is_quasiaffinity(B)
        assert is_hyper_normal(p22, *projection_exponents(Mr))
        assert weyl_data(Mr).ok

    def test_already_normal(self, p21):
        M = span(p21, p21.e(1), p21.f(0))
        A, Mn = hyper_normalize(M, seed=0)
        assert A == CommutantElement.identity(p21) and Mn == M

    @pytest.mark.parametrize("p", [ModelPair(3, 2), ModelPair(4, 1), ModelPair(4, 3), ModelPair(2, 2)], ids=str)
    def test_corpus(self, p):
        for i, M in enumerate(subspace_corpus(p, seed=8, budget=50)):
            A, Mn = hyper_normalize(M, seed=i)
            assert is_quasiaffinity(A)
            assert Mn == M.image(psi(A))
            assert invariant_data(Mn) == invariant_data(M)
            assert is_hyper_normal(p, *projection_exponents(Mn))
            again, same = hyper_normalize(Mn, seed=i)
            assert again == CommutantElement.identity(p) and same == Mn


class TestWeyl:
    def test_examples(self, p32, p21):
        r = weyl_data(span(p32, p32.e(1), p32.e(2), p32.f(1)))
        assert r.ok and (r.m0, r.m1) == (1, 1)
        assert r.data.alpha == (2, 1) and r.data.beta == (1, 1)
        r = weyl_data(span(p21, vec(p21.e(1), p21.f(0))))
        assert r.ok and (r.m0, r.m1) == (1, 0)
        assert r.data.beta == (2, 0)
        assert set(r.to_json()) >= {"determinant_identity", "projection_identity", "restriction_bound", "compression_bound"}


def _cyclic_family(p, m0, m1):
    """Span of ``(P z^m0 g) ⊕ (P z^m1 g)`` over all polynomials ``g``."""
    return Subspace.from_vectors(
        p, [p.join(monomial(m0 + k, p.n0), monomial(m1 + k, p.n1)) for k in range(p.n0)]
    )


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n0: st.tuples(st.just(n0), st.integers(0, n0))), st.data())
def test_orbit_of_xi_is_contained(nn, data):
    n0, n1 = nn
    p = ModelPair(n0, n1)
    m0 = data.draw(st.integers(0, n0))
    m1 = data.draw(st.integers(0, n1))
    if n1 - m1 > n0 - m0:
        return
    xi = p.join(monomial(m0, n0), monomial(m1, n1))
    family = _cyclic_family(p, m0, m1)
    assert all(family.contains(b) for b in orbit_span([xi], p).basis)
