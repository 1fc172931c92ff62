"""Seeded property suites behind ``workbench props``.

Each suite returns a list of ``(name, passed, detail)``.  Sampling is driven
by :class:`random.Random` with a fixed seed, so reports are reproducible.
"""

import random
from fractions import Fraction

import mpmath

from . import fixtures
from . import linalg as la
from . import multiindex as mi
from .dual import DualFunctional, act, derivation_check, dual_involution, evaluate, to_power_series
from .fock import (FSpace, SymPolynomial, evaluate_poly, poly_multiply, r_norm, squared_norms,
                   sym_inner, tensor_inner, tensor_symmetrizer)
from .gns import check_left_ideal, check_positivity, generator_matrices, gns_quotient, gram_matrix
from .lie import bracket, heisenberg, so3
from .pbw import PbwElement, coproduct, coproduct_at, involution, tensor_flip
from .rep_state import equivariance_residual, representative_functional, state_from_rep
from .scalar import ONE, Scalar

SEED = 20240521


# sampling ------------------------------------------------------------------

def random_rational(rng, bound=5):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_scalar(rng, bound=5, real=False):
    if real:
        return Scalar(random_rational(rng, bound))
    return Scalar(random_rational(rng, bound), random_rational(rng, bound))


def random_element(rng, alg, max_degree, nterms=3, real=False):
    basis = mi.up_to(alg.dim, max_degree)
    return PbwElement(alg, {rng.choice(basis): random_scalar(rng, real=real) for _ in range(nterms)})


def random_table(rng, alg, order, density=0.7):
    table = {a: random_scalar(rng) for a in mi.up_to(alg.dim, order) if rng.random() < density}
    return DualFunctional.from_table(alg, table, order)


def random_vector(rng, n, real=False):
    return [random_scalar(rng, real=real) for _ in range(n)]


def random_sym_polynomial(rng, space, max_degree, nterms=3):
    terms = {}
    for _ in range(nterms):
        n = rng.randint(0, max_degree)
        key = tuple(sorted(rng.randrange(space.dim) for _ in range(n)))
        terms[key] = random_scalar(rng)
    return SymPolynomial.from_terms(space, terms)


def rep_image(rep, element):
    out = la.zeros(rep.dim, rep.dim)
    for alpha, c in element.terms.items():
        out = la.add(out, la.scale(rep.monomial_matrix(alpha), c))
    return out


# suites --------------------------------------------------------------------

def suite_lie(rng, samples=30):
    results = []
    for alg in (heisenberg(), so3()):
        ok = True
        for _ in range(samples):
            x, y, z = ([random_rational(rng) for _ in range(alg.dim)] for _ in range(3))
            if bracket(alg, x, y) != tuple(-c for c in bracket(alg, y, x)):
                ok = False
            cyc = [bracket(alg, bracket(alg, x, y), z), bracket(alg, bracket(alg, y, z), x),
                   bracket(alg, bracket(alg, z, x), y)]
            if any(sum(t[k] for t in cyc) for k in range(alg.dim)):
                ok = False
        results.append((f"lie.antisymmetry_jacobi[{alg.names}]", ok, ""))
    ok = True
    for _ in range(samples):
        a, b, c = (random_scalar(rng) for _ in range(3))
        ok &= (a + b) * c == a * c + b * c and (a * b) * c == a * (b * c) and a * b == b * a
        if b:
            ok &= (a / b) * b == a
    results.append(("lie.scalar_field_axioms", ok, ""))
    return results


def suite_pbw(rng, samples=10):
    results = []
    for alg in (heisenberg(), so3()):
        ok = all(
            (a * b) * c == a * (b * c)
            for a, b, c in ((random_element(rng, alg, 3) for _ in range(3)) for _ in range(samples))
        )
        results.append((f"pbw.associativity[{alg.names}]", ok, ""))
    for label, rep in (("so3_defining", fixtures.so3_defining()), ("so3_spin_half", fixtures.so3_spin_half()),
                       ("heisenberg_upper_triangular", fixtures.heisenberg_upper_triangular())):
        alg = rep.algebra
        ok = True
        for _ in range(samples):
            a, b = random_element(rng, alg, 4), random_element(rng, alg, 4)
            ok &= rep_image(rep, a * b) == la.matmul(rep_image(rep, a), rep_image(rep, b))
        results.append((f"pbw.rep_soundness[{label}]", ok, ""))
    for alg in (heisenberg(), so3()):
        ok = True
        for _ in range(samples):
            a, b = random_element(rng, alg, 3), random_element(rng, alg, 3)
            ok &= involution(a * b) == involution(b) * involution(a)
            ok &= involution(involution(a)) == a
        results.append((f"pbw.involution[{alg.names}]", ok, ""))
        ok = True
        for alpha in mi.up_to(alg.dim, 4):
            d = coproduct(PbwElement.monomial(alg, alpha))
            ok &= coproduct_at(d, 0) == coproduct_at(d, 1)
            ok &= tensor_flip(d) == d
        results.append((f"pbw.coassociative_cocommutative[{alg.names}]", ok, ""))
        ok = True
        for _ in range(samples):
            a, b = random_element(rng, alg, 3), random_element(rng, alg, 3)
            ok &= coproduct(a * b) == coproduct(a) * coproduct(b)
        results.append((f"pbw.coproduct_morphism[{alg.names}]", ok, ""))
    return results


def suite_dual(rng, samples=5):
    results = []
    for alg, order in ((heisenberg(), 4), (so3(), 3)):
        ok_hom = ok_comm = ok_der = ok_inv = ok_chi = True
        one = PbwElement.one(alg)
        for _ in range(samples):
            a, b, c = (random_table(rng, alg, order) for _ in range(3))
            ok_hom &= to_power_series(a * b, order) == to_power_series(a, order) * to_power_series(b, order)
            ok_comm &= (a * b).equal_to(b * a) and ((a * b) * c).equal_to(a * (b * c))
            x = [random_rational(rng) for _ in range(alg.dim)]
            ok_der &= derivation_check(x, a, b).is_zero()
            e = random_element(rng, alg, 2)
            ok_inv &= dual_involution(act(e, a)).equal_to(act(e.conjugate(), dual_involution(a)))
            ok_chi &= evaluate(a * b, one) == evaluate(a, one) * evaluate(b, one)
        tag = f"[{alg.names}]"
        results += [("dual.series_homomorphism" + tag, ok_hom, ""),
                    ("dual.commutative_associative" + tag, ok_comm, ""),
                    ("dual.derivation" + tag, ok_der, ""),
                    ("dual.involution_compatibility" + tag, ok_inv, ""),
                    ("dual.chi0_multiplicative" + tag, ok_chi, "")]
    return results


def suite_rep(rng, samples=4):
    results = []
    for label, cd in (("cos", fixtures.cos_example()), ("so3", fixtures.so3_cyclic())):
        alg = cd.algebra
        ok_eq = ok_herm = ok_j = True
        omega = state_from_rep(cd)
        for _ in range(samples):
            e = random_element(rng, alg, 3)
            xi = random_vector(rng, cd.rep.dim)
            ok_eq &= equivariance_residual(cd, e, xi, 6).is_zero()
            ok_herm &= evaluate(omega, involution(e.conjugate()) * e).is_real()
            ok_herm &= evaluate(omega, involution(e.conjugate())) == evaluate(omega, e).conjugate()
            jx = representative_functional(cd, cd.J(xi))
            ok_j &= jx.equal_to(dual_involution(representative_functional(cd, xi)), 6)
        results += [(f"rep.equivariance[{label}]", ok_eq, ""),
                    (f"rep.hermitian_symmetry[{label}]", ok_herm, ""),
                    (f"rep.J_consistency[{label}]", ok_j, "")]
    return results


def suite_gns(rng):
    results = []
    cd = fixtures.cos_example()
    omega = state_from_rep(cd)
    module = gns_quotient(omega, 2)
    ok = module.stabilized and module.rank == 2
    if ok:
        rho = generator_matrices(module)[0]
        ok = la.charpoly(rho) == [ONE, Scalar(0), ONE]
    results.append(("gns.cos_recovery", ok, f"rank profile {module.rank_profile}"))
    failures, checked = check_left_ideal(omega, 4)
    results.append(("gns.left_ideal[cos]", not failures and checked > 0, f"{checked} products checked"))
    for label, cd, order in (("cos", fixtures.cos_example(), 4), ("so3", fixtures.so3_cyclic(), 3),
                             ("heisenberg_four_point", fixtures.heisenberg_four_point(), 3)):
        omega = state_from_rep(cd)
        g = gram_matrix(omega, order)
        psd = check_positivity(g).psd
        ranks = [la.rank(g.leading(k).entries) for k in range(order + 1)]
        monotone = all(x <= y for x, y in zip(ranks, ranks[1:])) and ranks[-1] <= cd.rep.dim
        results.append((f"gns.psd_and_rank[{label}]", psd and monotone, f"ranks {ranks}"))
    return results


def suite_fock(rng, samples=20):
    results = []
    ok_hom = ok_con = ok_sub = ok_mono = True
    worst = None
    with mpmath.workprec(256):
        tol = mpmath.mpf(10) ** -20
        for _ in range(samples):
            space = FSpace(rng.randint(1, 3))
            p = random_sym_polynomial(rng, space, 2)
            q = random_sym_polynomial(rng, space, 2)
            xi = random_vector(rng, space.dim)
            pq = poly_multiply(p, q)
            ok_hom &= evaluate_poly(pq, xi) == evaluate_poly(p, xi) * evaluate_poly(q, xi)
            for n, t in p.components.items():
                for m, s in q.components.items():
                    prod = poly_multiply(SymPolynomial(space, {n: t}), SymPolynomial(space, {m: s}))
                    lhs = squared_norms(prod).get(n + m, Fraction(0))
                    ok_con &= lhs <= sym_inner(t, t).re * sym_inner(s, s).re
            for r in (Fraction(1, 2), Fraction(1), Fraction(2)):
                slack = r_norm(p, r)[0] * r_norm(q, r)[0] - r_norm(pq, r)[0]
                worst = slack if worst is None else min(worst, slack)
                ok_sub &= slack >= -tol
            ok_mono &= r_norm(p, Fraction(1, 2))[0] <= r_norm(p, 1)[0] <= r_norm(p, 2)[0]
    results += [("fock.evaluation_homomorphism", ok_hom, ""),
                ("fock.degree_contraction", ok_con, ""),
                ("fock.submultiplicative", ok_sub, f"min slack {mpmath.nstr(worst, 5)}"),
                ("fock.norm_monotone", ok_mono, "")]
    ok = True
    for _ in range(samples // 2):
        n = rng.randint(1, 3)
        t = {tuple(rng.randrange(3) for _ in range(n)): random_scalar(rng) for _ in range(3)}
        s = {tuple(rng.randrange(3) for _ in range(n)): random_scalar(rng) for _ in range(3)}
        pt = tensor_symmetrizer(t)
        ok &= tensor_symmetrizer(pt) == pt
        ok &= tensor_inner(pt, s) == tensor_inner(t, tensor_symmetrizer(s))
    results.append(("fock.symmetrizer_projection", ok, ""))
    return results


SUITES = {
    "lie": suite_lie,
    "pbw": suite_pbw,
    "dual": suite_dual,
    "rep": suite_rep,
    "gns": suite_gns,
    "fock": suite_fock,
}


def run_suite(name, seed=SEED):
    if name == "all":
        out = []
        for key in SUITES:
            out += run_suite(key, seed)
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](random.Random(f"{seed}:{name}"))
