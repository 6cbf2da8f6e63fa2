import random

import pytest
from hypothesis import given, settings, strategies as st

from quasisim import linalg
from quasisim.corpus import random_subspace, random_symbol, subspace_corpus
from quasisim.jordan import nilpotent_jordan_model, sample_maximal
from quasisim.model import ModelPair, commutant_basis, model_operator, poly_calculus, psi
from quasisim.subspace import (
    HypothesisViolated,
    NotCyclic,
    NotInvariant,
    Subspace,
    adjoint_orbit,
    block_subspace,
    compression,
    coordinate_projection,
    hyperinvariant_descriptors,
    hyperinvariant_subspaces,
    intersect,
    join,
    multiplicity_one_subspace,
    orbit_span,
    ortho_complement,
    projection_exponents,
    restriction,
    split,
)
from conftest import span, vec


def neg(v):
    return tuple(-x for x in v)


class TestCanonicalBasis:
    def test_invariant_line(self, p21):
        assert span(p21, p21.e(1)).dim == 1

    def test_not_invariant(self, p21):
        with pytest.raises(NotInvariant):
            span(p21, p21.e(0))

    def test_span_equality(self, p21):
        e1, f0 = p21.e(1), p21.f(0)
        assert span(p21, vec(e1, f0), f0) == span(p21, e1, f0)
        assert span(p21, vec(e1, f0), f0).basis == span(p21, f0, e1).basis


class TestOrbitSpan:
    def test_one_step(self, p21):
        M = orbit_span([vec(p21.e(0), p21.f(0))], p21)
        assert M == Subspace.from_vectors(p21, [vec(p21.e(0), p21.f(0)), p21.e(1)])
        assert M.dim == 2

    def test_close_and_reduce(self, p32):
        M = orbit_span([vec(p32.e(1), p32.f(1)), p32.f(1)], p32)
        assert M == span(p32, p32.e(1), p32.e(2), p32.f(1))

    def test_empty(self, p21):
        assert orbit_span([], p21) == Subspace.zero(p21)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2**32))
    def test_orbit_is_smallest_invariant(self, seed):
        p = ModelPair(3, 2)
        M = random_subspace(p, random.Random(seed))
        assert M.is_invariant()
        for b in M.basis:
            assert orbit_span([b], p).dim <= M.dim


class TestProjections:
    def test_examples(self, p21):
        assert projection_exponents(span(p21, vec(p21.e(1), p21.f(0)))) == (1, 0)
        assert projection_exponents(Subspace.whole(p21)) == (0, 0)
        assert projection_exponents(Subspace.zero(p21)) == (2, 1)

    @pytest.mark.parametrize("p", [ModelPair(3, 2), ModelPair(4, 1), ModelPair(3, 3)], ids=str)
    def test_chain_form_on_corpus(self, p):
        for M in subspace_corpus(p, seed=5, budget=60):
            for j, n, block in ((0, p.n0, p.e), (1, p.n1, p.f)):
                m = coordinate_projection(M, j)
                lo = 0 if j == 0 else p.n0
                image = Subspace.from_vectors(p, [tuple(x if lo <= i < lo + n else 0 for i, x in enumerate(b)) for b in M.basis])
                assert image == Subspace.from_vectors(p, [block(k) for k in range(m, n)])


class TestComplementAndCompression:
    def test_complement_of_f0(self, p21):
        M = span(p21, p21.f(0))
        assert Subspace.from_vectors(p21, ortho_complement(M)) == Subspace.from_vectors(p21, [p21.e(0), p21.e(1)])

    def test_complement_of_diagonal(self, p21):
        M = span(p21, vec(p21.e(1), p21.f(0)))
        perp = Subspace.from_vectors(p21, ortho_complement(M))
        assert perp == Subspace.from_vectors(p21, [p21.e(0), vec(p21.e(1), neg(p21.f(0)))])

    def test_complement_of_whole(self, p21):
        assert ortho_complement(Subspace.whole(p21)) == ()

    def test_compressions(self, p21):
        C = compression(span(p21, p21.f(0)))
        assert nilpotent_jordan_model(C) == (2,)
        assert linalg.is_zero_matrix(compression(span(p21, p21.e(1))))
        assert len(compression(span(p21, p21.e(1)))) == 2
        assert compression(Subspace.whole(p21)) == []

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32))
    def test_dimensions_add_up(self, seed):
        p = ModelPair(4, 2)
        M = random_subspace(p, random.Random(seed))
        perp = ortho_complement(M)
        assert M.dim + len(perp) == p.dim
        assert all(linalg.dot(a, b) == 0 for a in M.basis for b in perp)


class TestLattice:
    def test_join_meet(self, p21):
        E, F = span(p21, p21.e(1)), span(p21, p21.f(0))
        assert join(E, F) == span(p21, p21.e(1), p21.f(0))
        assert intersect(E, F).dim == 0
        assert intersect(E, E) == E

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32))
    def test_modular_dimension_formula(self, seed):
        p = ModelPair(3, 2)
        rng = random.Random(seed)
        M, N = random_subspace(p, rng), random_subspace(p, rng)
        J, I = join(M, N), intersect(M, N)
        assert J.is_invariant() and I.is_invariant()
        assert J.dim + I.dim == M.dim + N.dim


class TestSplit:
    def test_block_split(self, p21):
        whole = Subspace.whole(p21)
        K = span(p21, p21.e(0), p21.e(1))
        Kp, L = split(whole, K, p21.e(1))
        assert Kp == K
        assert L == span(p21, p21.f(0))
        assert nilpotent_jordan_model(restriction(L)) == (1,)

    def test_tilted_split(self, p21):
        whole = Subspace.whole(p21)
        K = span(p21, vec(p21.e(0), p21.f(0)), p21.e(1))
        Kp, L = split(whole, K, p21.e(1))
        assert Kp == span(p21, p21.e(0), p21.e(1))
        assert L == span(p21, p21.f(0))

    def test_not_cyclic(self, p21):
        whole = Subspace.whole(p21)
        K = span(p21, p21.e(0), p21.e(1))
        assert len(adjoint_orbit(K, p21.e(0))) == 1
        with pytest.raises(NotCyclic):
            split(whole, K, p21.e(0))

    def test_wrong_model(self, p21):
        with pytest.raises(HypothesisViolated):
            split(Subspace.whole(p21), span(p21, p21.f(0)), p21.f(0))

    @pytest.mark.parametrize("p", [ModelPair(3, 2), ModelPair(4, 2), ModelPair(3, 1)], ids=str)
    def test_sampled_splits(self, p):
        rng = random.Random(11)
        done = 0
        for amb in subspace_corpus(p, seed=2, budget=40):
            if amb.dim == 0:
                continue
            K = orbit_span([sample_maximal(amb, rng)], p)
            k = K.basis[-1]
            if len(adjoint_orbit(K, k)) != K.dim:
                continue
            _, L = split(amb, K, k)
            assert join(K, L) == amb and intersect(K, L).dim == 0
            done += 1
        assert done > 10


class TestHyperinvariant:
    def test_counts(self):
        # T = 0 on (1,1): every matrix commutes, so only 0 and the whole space survive
        assert hyperinvariant_descriptors(ModelPair(1, 1)) == [(0, 0), (1, 1)]
        assert hyperinvariant_descriptors(ModelPair(2, 1)) == [(0, 0), (1, 0), (1, 1), (2, 1)]

    @pytest.mark.parametrize("p", [ModelPair(1, 1), ModelPair(2, 1), ModelPair(3, 2), ModelPair(2, 2)], ids=str)
    def test_enumeration_is_exhaustive(self, p):
        # oracle: a block subspace is hyperinvariant iff every commutant basis element fixes it
        basis = [psi(B) for B in commutant_basis(p)]
        fixed = []
        for p0 in range(p.n0 + 1):
            for p1 in range(p.n1 + 1):
                E = block_subspace(p, p0, p1)
                if all(E.contains_subspace(E.image(X)) for X in basis):
                    fixed.append((p0, p1))
        assert fixed == hyperinvariant_descriptors(p)

    @pytest.mark.parametrize("p", [ModelPair(2, 1), ModelPair(3, 2), ModelPair(4, 1)], ids=str)
    def test_fixed_by_commutant(self, p):
        rng = random.Random(0)
        for E in hyperinvariant_subspaces(p):
            for _ in range(100):
                assert E.contains_subspace(E.image(psi(random_symbol(p, rng))))


@pytest.mark.parametrize("n, t, expected", [(3, 2, [1, 2]), (3, 0, []), (3, 3, [0, 1, 2])])
def test_multiplicity_one(n, t, expected):
    p = ModelPair(n, 0)
    assert multiplicity_one_subspace(n, t) == Subspace.from_vectors(p, [p.e(k) for k in expected])


@pytest.mark.parametrize("n", range(1, 6))
def test_multiplicity_one_kernels(n):
    p = ModelPair(n, 0)
    for t in range(n + 1):
        M = multiplicity_one_subspace(n, t)
        zt = tuple(1 if i == t else 0 for i in range(t + 1))
        assert M == Subspace.from_vectors(p, linalg.nullspace(poly_calculus(zt, p), n))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_injective_iff_surjective(seed):
    p = ModelPair(3, 1)
    X = psi(random_symbol(p, random.Random(seed)))
    injective = len(linalg.nullspace(X, p.dim)) == 0
    surjective = Subspace.from_vectors(p, linalg.transpose(X)) == Subspace.whole(p)
    assert injective == surjective
    T = model_operator(p)
    assert linalg.matmul(X, T) == linalg.matmul(T, X)
