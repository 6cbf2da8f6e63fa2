"""Property suites over seeded corpora, shared by ``quasisim verify`` and the test-suite.

Every suite returns a JSON-ready report whose content depends only on its
arguments, so reruns with the same seed are byte-identical.
"""

from __future__ import annotations

from collections import Counter

from . import linalg
from .canonical import Triple, admissible_triples, canonical_subspace, hyper_normalize, is_hyper_normal, weyl_data
from .corpus import pair_corpus, pair_rng, random_quasiaffinity, random_symbol, subspace_corpus
from .jordan import (
    DeterminantIdentityViolation,
    RetriesExhausted,
    invariant_data,
    nilpotent_jordan_model,
    sample_maximal,
)
from .lr import lr_coefficient, multiplicity_witnesses, triple_vs_lr, two_row_triples, two_row_unique
from .model import (
    ModelPair,
    adjugate,
    commutant_basis,
    commutator_kernel_dim,
    is_quasiaffinity,
    model_operator,
    poly_calculus,
    psi,
)
from .oracle import EXACT_DIM_LIMIT, classify, constrained_commutant, reduce_to_canonical, verify_witness
from .subspace import (
    HypothesisViolated,
    NotCyclic,
    adjoint_orbit,
    block_subspace,
    hyperinvariant_subspaces,
    intersect,
    join,
    orbit_span,
    projection_exponents,
    restriction,
    split,
)

MAX_VIOLATIONS = 20
SUITES = ("commutant", "classification", "canonical", "weyl", "hyper", "splitting", "jordansim", "lr")


class _Tally:
    def __init__(self):
        self.counts = Counter()
        self.violations = []

    def check(self, name: str, ok: bool, detail: str = ""):
        self.counts[name] += 1
        if not ok:
            self.counts[name + "_failed"] += 1
            if len(self.violations) < MAX_VIOLATIONS:
                self.violations.append(f"{name}: {detail}" if detail else name)

    def report(self, **extra) -> dict:
        failed = sum(v for k, v in self.counts.items() if k.endswith("_failed"))
        return {**extra, "checks": dict(sorted(self.counts.items())), "violations": self.violations, "ok": failed == 0}


def _key(p: ModelPair) -> str:
    return f"{p.n0},{p.n1}"


# commutant calculus ---------------------------------------------------------

def suite_commutant(p: ModelPair, seed: int, budget: int) -> dict:
    tally = _Tally()
    rng = pair_rng(seed, p, "commutant")
    d = p.dim
    T = model_operator(p)
    basis = commutant_basis(p)
    expected = p.n0 + 3 * p.n1
    flat = [[x for row in psi(B) for x in row] for B in basis]
    tally.check("basis_dimension", len(basis) == expected == commutator_kernel_dim(p), _key(p))
    tally.check("basis_independent", linalg.rank(flat) == expected, _key(p))
    tally.check("basis_commutes", all(linalg.matmul(psi(B), T) == linalg.matmul(T, psi(B)) for B in basis))
    for i in range(budget):
        A, B = random_symbol(p, rng), random_symbol(p, rng)
        XA, XB = psi(A), psi(B)
        tally.check("multiplicativity", psi(A * B) == linalg.matmul(XA, XB), f"{A} * {B}")
        tally.check("commutes", linalg.matmul(XA, T) == linalg.matmul(T, XA))
        Ap, u = adjugate(A)
        XAp, U = psi(Ap), poly_calculus(u, p)
        tally.check("adjugate", linalg.matmul(XA, XAp) == U == linalg.matmul(XAp, XA), f"{A}")
        invertible = linalg.rank(XA) == d
        tally.check("quasiaffinity_criterion", is_quasiaffinity(A) == invertible == (A.det_at_zero() != 0), f"{A}")
        if is_quasiaffinity(A):
            tally.check("prop_star", u[0] != 0 and linalg.rank(XAp) == d)
    return tally.report(pair=p.to_list())


# classification -------------------------------------------------------------

def suite_classification(p: ModelPair, seed: int, budget: int, trials: int = 64, exact: bool = True) -> dict:
    tally = _Tally()
    kinds = Counter()
    certificates = Counter()
    for i, (M, Mp) in enumerate(pair_corpus(p, seed, budget)):
        sub_seed = f"{seed}:{p.n0}:{p.n1}:classify:{i}"
        verdict = classify(M, Mp, sub_seed, trials, exact_certificate=exact)
        kinds[verdict.kind] += 1
        certificates[verdict.certificate] += 1
        detail = f"{M.label()} | {Mp.label()}: {verdict.reason}"
        tally.check("no_falsification", verdict.kind != "falsification", detail)
        equal = invariant_data(M) == invariant_data(Mp)
        tally.check("equal_data_iff_equivalent", equal == (verdict.kind == "equivalent"), detail)
        if verdict.kind == "equivalent":
            tally.check("witness_sound", verify_witness(verdict.witness, M, Mp), detail)
            tally.check("within_trials", verdict.trials_used <= trials, detail)
        elif verdict.kind == "inequivalent" and exact and M.dim == Mp.dim:
            if len(constrained_commutant(M, Mp)) <= EXACT_DIM_LIMIT:
                tally.check("exact_certificate", verdict.certificate == "exact", detail)
        if i % 4 == 0:
            back = classify(Mp, M, sub_seed + ":back", trials)
            tally.check("symmetry", back.kind == verdict.kind, detail)
    return tally.report(pair=p.to_list(), kinds=dict(sorted(kinds.items())), certificates=dict(sorted(certificates.items())))


# canonical realization ------------------------------------------------------

def suite_canonical(p: ModelPair, seed: int, budget: int, trials: int = 64) -> dict:
    tally = _Tally()
    triples = admissible_triples(p)
    for t in triples:
        try:
            N = canonical_subspace(t)
        except AssertionError as exc:
            tally.check("canonical_conclusions", False, f"{t.to_json()}: {exc}")
            continue
        ok = (
            projection_exponents(N) == (p.n0 - t.alpha[0], t.beta[1])
            and nilpotent_jordan_model(restriction(N)) == tuple(x for x in t.alpha if x)
            and invariant_data(N) == t.data
            and N.is_invariant()
        )
        tally.check("canonical_conclusions", ok, str(t.to_json()))
    for i, M in enumerate(subspace_corpus(p, seed, budget)):
        verdict, N = reduce_to_canonical(M, f"{seed}:{p.n0}:{p.n1}:canon:{i}", trials)
        ok = verdict.kind == "equivalent" and verify_witness(verdict.witness, M, N)
        tally.check("reduce_to_canonical", ok, f"{M.label()}: {verdict.reason}")
    return tally.report(pair=p.to_list(), admissible_triples=len(triples))


# hyper-normalization and Weyl identities ------------------------------------

def _hyper_checks(p: ModelPair, seed: int, budget: int, weyl: bool) -> dict:
    tally = _Tally()
    hyper = set(hyperinvariant_subspaces(p))
    rng = pair_rng(seed, p, "weyl" if weyl else "hyper")
    for M in subspace_corpus(p, seed, budget):
        try:
            A, Mn = hyper_normalize(M, rng)
        except RetriesExhausted as exc:
            tally.check("hyper_normalize_succeeds", False, f"{M.label()}: {exc}")
            continue
        tally.check("hyper_normalize_succeeds", True)
        exps = projection_exponents(Mn)
        tally.check("hyper_exponents", is_hyper_normal(p, *exps), f"{M.label()} -> {exps}")
        tally.check("quasiaffinity", is_quasiaffinity(A) and Mn == M.image(psi(A)), M.label())
        tally.check("datum_preserved", invariant_data(Mn) == invariant_data(M), M.label())
        if weyl:
            report = weyl_data(Mn)
            tally.check("weyl_determinant", report.determinant, M.label())
            tally.check("weyl_projections", report.projections, M.label())
            tally.check("weyl_restriction_bound", report.restriction_bound, M.label())
            tally.check("weyl_compression_bound", report.compression_bound, M.label())
        else:
            E = block_subspace(p, *exps)
            tally.check("projection_span_hyperinvariant", E in hyper and E.contains_subspace(Mn), M.label())
            again, _ = hyper_normalize(Mn, rng)
            tally.check("idempotent", again == again.identity(p), M.label())
            X = psi(random_symbol(p, rng))
            tally.check("commutant_fixes_E", E.contains_subspace(E.image(X)))
    return tally.report(pair=p.to_list())


def suite_weyl(p: ModelPair, seed: int, budget: int) -> dict:
    return _hyper_checks(p, seed, budget, weyl=True)


def suite_hyper(p: ModelPair, seed: int, budget: int) -> dict:
    return _hyper_checks(p, seed, budget, weyl=False)


# splitting principle --------------------------------------------------------

def suite_splitting(p: ModelPair, seed: int, budget: int) -> dict:
    """Split ``budget`` sampled ``(ambient, K, k)``; ``K`` is the orbit of a maximal vector."""
    tally = _Tally()
    rng = pair_rng(seed, p, "splitting")
    ambients = [M for M in subspace_corpus(p, seed, budget) if M.dim > 0]
    done = 0
    attempts = 0
    while done < budget and ambients and attempts < 10 * budget:
        attempts += 1
        amb = ambients[attempts % len(ambients)]
        K = orbit_span([sample_maximal(amb, rng)], p)
        k = None
        for _ in range(64):
            coeffs = [rng.randint(-9, 9) for _ in K.basis]
            cand = tuple(sum((c * b[j] for c, b in zip(coeffs, K.basis)), linalg.ZERO) for j in range(p.dim))
            if any(cand) and len(adjoint_orbit(K, cand)) == K.dim:
                k = cand
                break
        if k is None:
            tally.check("cyclic_vector_found", False, amb.label())
            continue
        try:
            Kprime, L = split(amb, K, k)
        except (HypothesisViolated, NotCyclic, AssertionError) as exc:
            tally.check("split", False, f"{amb.label()}: {exc}")
            continue
        model = invariant_data(amb).alpha
        tally.check("join", join(K, L) == amb, amb.label())
        tally.check("trivial_intersection", intersect(K, L).dim == 0, amb.label())
        l_model = nilpotent_jordan_model(restriction(L))
        tally.check("second_block", l_model == tuple(x for x in model[1:] if x), amb.label())
        done += 1
    tally.check("enough_samples", done >= budget, f"{done} < {budget}")
    return tally.report(pair=p.to_list(), samples=done)


# invariance of the datum ----------------------------------------------------

def suite_jordansim(p: ModelPair, seed: int, budget: int) -> dict:
    tally = _Tally()
    rng = pair_rng(seed, p, "jordansim")
    subs = subspace_corpus(p, seed, budget)
    for i in range(budget):
        M = subs[i % len(subs)]
        A = random_quasiaffinity(p, rng)
        tally.check("datum_invariant", invariant_data(M.image(psi(A))) == invariant_data(M), M.label())
    return tally.report(pair=p.to_list())


# Littlewood-Richardson ------------------------------------------------------

def suite_lr(bound: int = 12, contrast_bound: int = 6) -> dict:
    tally = _Tally()
    counter = two_row_unique(bound)
    tally.check("two_row_unique", counter == [], str(counter[:5]))
    witnesses = multiplicity_witnesses(contrast_bound)
    tally.check("three_row_witness", ((3, 2, 1), (2, 1, 0), (2, 1, 0), 2) in witnesses, str(witnesses))
    tally.check("classical_coefficient", lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2)
    for lam, mu, nu in two_row_triples(bound):
        c = lr_coefficient(lam, mu, nu)
        tally.check("symmetry", c == lr_coefficient(lam, nu, mu), f"{lam} {mu} {nu}")
        tally.check("zero_or_one", c in (0, 1), f"{lam} {mu} {nu}")
        try:
            t = Triple(lam, mu, nu)
        except ValueError:
            tally.check("outside_theta_zero", c == 0, f"{lam} {mu} {nu}")
            continue
        tally.check("triple_vs_lr", triple_vs_lr(t), str(t.to_json()))
    return tally.report(
        bound=bound,
        counterexamples=[list(map(list, x)) for x in counter],
        three_row_witnesses=[[list(lam), list(mu), list(nu), c] for lam, mu, nu, c in witnesses],
    )


def run_suite(name: str, pairs, seed: int, budget: int, trials: int = 64, exact: bool = True) -> dict:
    """Run one named suite over ``pairs``; determinant-identity failures are recorded, not raised."""
    if name == "lr":
        return {"suite": "lr", "seed": seed, **suite_lr()}
    fn = {
        "commutant": lambda p: suite_commutant(p, seed, budget),
        "classification": lambda p: suite_classification(p, seed, budget, trials, exact),
        "canonical": lambda p: suite_canonical(p, seed, budget, trials),
        "weyl": lambda p: suite_weyl(p, seed, budget),
        "hyper": lambda p: suite_hyper(p, seed, budget),
        "splitting": lambda p: suite_splitting(p, seed, budget),
        "jordansim": lambda p: suite_jordansim(p, seed, budget),
    }.get(name)
    if fn is None:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    reports = []
    for p in pairs:
        try:
            reports.append(fn(p))
        except DeterminantIdentityViolation as exc:
            reports.append({"pair": p.to_list(), "checks": {}, "violations": [f"determinant_identity: {exc}"], "ok": False})
    return {"suite": name, "seed": seed, "budget": budget, "pairs": reports, "ok": all(r["ok"] for r in reports)}

