"""The acceptance suite: ten self-contained verification runs, shared by the
command line runner and the test suite.

Each criterion function returns a report dict with keys id, name, ok,
elapsed_s, limit_s and detail.  ``run_all(seed)`` executes all ten in order
and is deterministic for a fixed seed.
"""

import random
import time
from itertools import product
from math import gcd

from gmpy2 import mpq

from .cyclotomic import CycElem
from .polyring import MPoly, is_associate
from .params import WeylParams
from .weyl import WeylAlgebra
from .center import (center_ring, center_spanning_monomials, spanning_element,
                     central_combinations, is_central, verify_specz,
                     Z_center_poly, CenterPoly)
from .discriminant import (discriminant, theorem_b_rhs, theorem_b_eta,
                           theorem_71_rhs, verify_discriminant, _q_factorial)
from .poisson import (q_deform, canonical_lift, poisson_bracket,
                      verify_prop33)
from .autos import generic_spec, verify_homomorphism, isomorphic, \
    aut_group_shape


_EPS_CHOICES = [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4)]
_BETA_CHOICES = [(0, 1), (1, 2), (1, 3), (2, 3), (1, 4), (3, 4)]


def _timed(crit_id, name, limit_s, fn):
    t0 = time.monotonic()
    try:
        ok, detail = fn()
    except Exception as exc:
        ok, detail = False, "error: %r" % (exc,)
    elapsed = time.monotonic() - t0
    if ok and elapsed >= limit_s:
        ok = False
        detail = (detail + "; " if detail else "") + "over time budget"
    return {"id": crit_id, "name": name, "ok": bool(ok),
            "elapsed_s": round(elapsed, 3), "limit_s": limit_s,
            "detail": detail}


def _random_params(rng, n, c_formal=False):
    eps = [rng.choice(_EPS_CHOICES) for _ in range(n)]
    beta = [[None] * n for _ in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            beta[j][k] = rng.choice(_BETA_CHOICES)
    return WeylParams(n, eps, beta, c_formal=c_formal)


def _random_element(rng, A, max_deg=5, max_terms=2):
    out = A.zero()
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * (2 * A.n)
        budget = max_deg
        for i in range(2 * A.n):
            e = rng.randint(0, min(2, budget))
            exps[i] = e
            budget -= e
        coeff = A.root_pow(rng.randrange(A.D)) * rng.randint(-3, 3)
        out = out + A.monomial(tuple(exps[:A.n]), tuple(exps[A.n:]), coeff)
    return out


# -- 1: cyclotomic product identity ----------------------------------------

def criterion_1(seed=0):
    def run():
        for d in range(2, 13):
            prod_val = CycElem.one(d)
            for i in range(1, d):
                prod_val = prod_val * (CycElem.one(d) - CycElem.root(d, i))
            if prod_val != CycElem.rational(d, d):
                return False, "product identity fails at d=%d" % d
        return True, "prod (1 - e^i) = d for d = 2..12"
    return _timed(1, "cyclotomic product identity", 1.0, run)


# -- 2: PBW engine ---------------------------------------------------------

def _check_relation_suite(P):
    A = WeylAlgebra(P)
    n = A.n
    for j in range(n + 1):
        zj = A.z_element(j)
        for k in range(1, n + 1):
            delta = 1 if k <= j else 0
            if zj * A.x(k) != A.x(k) * zj * A.root_pow(-delta * A._t[k - 1]):
                return "z-x normality fails (j=%d,k=%d)" % (j, k)
            if zj * A.y(k) != A.y(k) * zj * A.root_pow(delta * A._t[k - 1]):
                return "z-y normality fails (j=%d,k=%d)" % (j, k)
            if not zj.commutator(A.z_element(k)).is_zero:
                return "z elements do not commute (j=%d,k=%d)" % (j, k)
    for j in range(1, n + 1):
        d = P.eps[j - 1][1]
        eps = A.root_pow(A._t[j - 1])
        if A.x(j) * A.y(j) != A.y(j) * A.x(j) * eps + A.z_element(j - 1):
            return "contact relation fails at j=%d" % j
        if not A.z_element(j - 1).commutator(A.x(j)).is_zero \
                or not A.z_element(j - 1).commutator(A.y(j)).is_zero:
            return "z_{j-1} does not commute with pair j=%d" % j
        if A.x(j) ** d * A.y(j) != A.y(j) * A.x(j) ** d:
            return "x^d y = y x^d fails at j=%d" % j
        if A.y(j) ** d * A.x(j) != A.x(j) * A.y(j) ** d:
            return "y^d x = x y^d fails at j=%d" % j
        if A.z_element(j) - A.z_element(j - 1) != \
                A.y(j) * A.x(j) * (eps - 1):
            return "z recursion step fails at j=%d" % j
    return None


def criterion_2(seed=0):
    def run():
        rng = random.Random(seed)
        triples_left = 1000
        while triples_left > 0:
            P = _random_params(rng, rng.randint(1, 3),
                               c_formal=(rng.random() < 0.25))
            A = WeylAlgebra(P)
            for _ in range(min(50, triples_left)):
                u = _random_element(rng, A)
                v = _random_element(rng, A)
                w = _random_element(rng, A)
                if (u * v) * w != u * (v * w):
                    return False, "associativity fails on %r" % P.to_json()
                du, dv = u.grading_degree(), v.grading_degree()
                if du is not None and dv is not None and u and v and u * v:
                    got = (u * v).grading_degree()
                    want = tuple(a + b for a, b in zip(du, dv))
                    if got != want:
                        return False, "grading incompatibility"
                triples_left -= 1
        for n in (1, 2, 3):
            for _ in range(3):
                bad = _check_relation_suite(_random_params(rng, n))
                if bad:
                    return False, bad
        bad = _check_relation_suite(WeylParams(
            3, [(1, 2), (1, 2), (1, 4)],
            [[None, (1, 2), (1, 2)], [None, None, (3, 4)],
             [None, None, None]], c_formal=True))
        if bad:
            return False, bad
        return True, "1000 associativity triples and relation identities"
    return _timed(2, "PBW engine", 30.0, run)


# -- 3: center scan vs the central monoid ----------------------------------

_C3_INSTANCES = [
    (1, [(1, 2)], None),
    (1, [(1, 3)], None),
    (2, [(1, 2), (1, 2)], (1, 2)),    # free
    (2, [(1, 2), (1, 2)], (1, 4)),    # non-free: d_12 = 4 does not divide d_2
    (2, [(1, 2), (1, 3)], (0, 1)),    # non-free: d_1 does not divide d_2
    (2, [(1, 2), (1, 4)], (1, 2)),    # free
]


def _c3_params(n, eps, b12):
    beta = [[None] * n for _ in range(n)]
    if n == 2:
        beta[0][1] = b12
    return WeylParams(n, eps, beta)


def _scan_agrees(P, bound=8):
    A = WeylAlgebra(P)
    ceb = center_spanning_monomials(P, bound)
    for b, a in ceb:
        if not is_central(spanning_element(A, b, a)):
            return "spanning element at %r not central" % ((b, a),)
    combos = central_combinations(P, bound)
    got = set()
    for el in combos:
        if not is_central(el):
            return "scan produced a non-central element"
        deg = el.grading_degree()
        if deg is None:
            return "scan produced an inhomogeneous element"
        got.add(deg)
    want = {tuple(bj - aj for bj, aj in zip(b, a)) for b, a in ceb}
    if got != want:
        return "multidegree sets differ: %r vs %r" % (sorted(got),
                                                      sorted(want))
    if P.is_free_over_center():
        ds = [d for _, d in P.eps]
        for el in combos:
            for b, a in el.terms:
                if any(v % d for v, d in zip(b + a, ds + ds)):
                    return "free case: central support off the d-grid"
        for vec in product(*([range(bound + 1)] * (2 * P.n))):
            if sum(vec) > bound:
                continue
            b, a = list(vec[:P.n]), list(vec[P.n:])
            grid = not any(v % d for v, d in zip(vec, ds + ds))
            if P.in_CEB(b, a) != grid:
                return "free case: monoid differs from the d-grid at %r" % (
                    vec,)
    return None


def criterion_3(seed=0):
    def run():
        for n, eps, b12 in _C3_INSTANCES:
            bad = _scan_agrees(_c3_params(n, eps, b12))
            if bad:
                return False, "(n=%d, d=%r): %s" % (
                    n, [d for _, d in eps], bad)
        return True, "%d instances, scan degree <= 8" % len(_C3_INSTANCES)
    return _timed(3, "center scan vs central monoid", 60.0, run)


# -- 4: the z_j^{d_j} recursion --------------------------------------------

_C4_INSTANCES = [
    (1, [(1, 2)], None),
    (1, [(1, 3)], None),
    (1, [(1, 4)], None),
    (2, [(1, 2), (1, 2)], (1, 2)),
    (2, [(1, 2), (1, 4)], (1, 2)),
    (2, [(1, 3), (1, 3)], (1, 3)),
    (2, [(1, 4), (1, 4)], (1, 4)),
]


def criterion_4(seed=0):
    def run():
        for n, eps, b12 in _C4_INSTANCES:
            P = _c3_params(n, eps, b12)
            for j in range(n + 1):
                if not verify_specz(P, j):
                    return False, "recursion fails (d=%r, j=%d)" % (
                        [d for _, d in eps], j)
        return True, "%d instances, all j" % len(_C4_INSTANCES)
    return _timed(4, "central power recursion", 10.0, run)


# -- 5: the free-case closed form ------------------------------------------

def _b_instance(n, eps, b12):
    P = _c3_params(n, eps, b12)
    rep = verify_discriminant(P, [d for _, d in eps], "theorem-b")
    if not rep["associate"]:
        return None, "no associate witness"
    if not rep["unit"]["certified"]:
        return None, "unit factor not certified as +-e^k: %s" % \
            rep["unit"]["factor"]
    return rep, None


def criterion_5(seed=0):
    def run():
        cases = [
            (1, [(1, 2)], None, 1.0),
            (1, [(1, 3)], None, 10.0),
            (2, [(1, 2), (1, 2)], (0, 1), 120.0),
            (2, [(1, 2), (1, 2)], (1, 2), 120.0),
        ]
        notes = []
        for n, eps, b12, limit in cases:
            rep, bad = _b_instance(n, eps, b12)
            if bad:
                return False, "(n=%d, d=%r, b=%r): %s" % (
                    n, [d for _, d in eps], b12, bad)
            if rep["elapsed_ms"] / 1000.0 >= limit:
                return False, "instance over its time budget"
            notes.append("Lambda=%d unit %s" % (rep["lambda"],
                                                rep["unit"]["factor"]))
        return True, "; ".join(notes)
    return _timed(5, "free-case discriminant closed form", 251.0, run)


# -- 6: the recursive closed form in formal-c mode -------------------------

def _c6_expected_n1_d2(P, L):
    """The n=1, d=2 closed form written out directly:
    theta (YX)^{(L-2)L^2/L} (c^L - 2^L YX)^{L^2/L}, theta = L^{L^2} (L/2)^{L^2}.
    """
    ring = center_ring(P)
    D = P.D
    c = MPoly.variable(ring, "c", D)
    Y = MPoly.variable(ring, "Y1", D)
    X = MPoly.variable(ring, "X1", D)
    lam = L * L
    theta = CycElem.rational(L, D) ** lam * \
        (CycElem.rational(mpq(L, 2), D)) ** lam
    return MPoly.constant(ring, theta) * (Y * X) ** ((L - 2) * lam // L) \
        * (c ** L - Y * X * CycElem.rational(2 ** L, D)) ** (lam // L)


def criterion_6(seed=0):
    def run():
        notes = []
        P1 = WeylParams(1, [(1, 2)], [[None]], c_formal=True)
        for L, limit in ((2, 5.0), (4, 180.0)):
            t0 = time.monotonic()
            rep = verify_discriminant(P1, [L], "theorem-71")
            if not rep["associate"] or not rep["unit"]["certified"]:
                return False, "n=1 L=%d: not a certified associate" % L
            rhs = theorem_71_rhs(P1, [L])
            if rhs.poly != _c6_expected_n1_d2(P1, L):
                return False, "n=1 L=%d: recursion differs from the direct " \
                    "closed form" % L
            if time.monotonic() - t0 >= limit:
                return False, "n=1 L=%d over its time budget" % L
            notes.append("L=%d unit %s" % (L, rep["unit"]["factor"]))
        P2 = WeylParams(2, [(1, 2), (1, 2)], [[None, (1, 2)], [None, None]],
                        c_formal=True)
        rep = verify_discriminant(P2, [2, 2], "theorem-71")
        if not rep["associate"] or not rep["unit"]["certified"]:
            return False, "n=2: not a certified associate"
        # the n=2 closed form written out directly
        ring = center_ring(P2)
        D = P2.D
        c = MPoly.variable(ring, "c", D)
        Y1X1 = MPoly.variable(ring, "Y1", D) * MPoly.variable(ring, "X1", D)
        Y2X2 = MPoly.variable(ring, "Y2", D) * MPoly.variable(ring, "X2", D)
        four = CycElem.rational(4, D)
        expected = MPoly.constant(ring, CycElem.rational(2 ** 32, D)) \
            * (c * c - Y1X1 * four) ** 8 \
            * (c * c - Y1X1 * four - Y2X2 * four) ** 8
        if theorem_71_rhs(P2, [2, 2]).poly != expected:
            return False, "n=2: recursion differs from the direct closed form"
        notes.append("n=2 unit %s" % rep["unit"]["factor"])
        # divisibility: every computed determinant is a polynomial in c^gcd(L)
        for P, L in ((P1, [2]), (P1, [4]), (P2, [2, 2])):
            g = gcd(*L)
            det = discriminant(P, L)
            if any(e % g for e in det.poly.coeff_map("c")):
                return False, "determinant is not a polynomial in c^%d" % g
        return True, "; ".join(notes)
    return _timed(6, "formal-c discriminant closed form", 485.0, run)


# -- 7: the Poisson bracket ------------------------------------------------

def _random_center_poly(rng, P, ring, max_terms=2):
    out = MPoly.zero(ring)
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * len(ring)
        for j in range(P.n):
            exps[ring.index("Y%d" % (j + 1))] = rng.randint(0, 1)
            exps[ring.index("X%d" % (j + 1))] = rng.randint(0, 1)
        coeff = CycElem.root(P.D, rng.randrange(P.D)) * rng.randint(-2, 2)
        out = out + MPoly.monomial(ring, exps, coeff)
    return out


def criterion_7(seed=0):
    def run():
        instances = [
            WeylParams(1, [(1, 2)], [[None]]),
            WeylParams(1, [(1, 3)], [[None]]),
            WeylParams(2, [(1, 2), (1, 2)], [[None, (1, 2)], [None, None]]),
            WeylParams(2, [(1, 2), (1, 4)], [[None, (1, 2)], [None, None]]),
        ]
        for P in instances:
            rep = verify_prop33(P)
            bad = [k for k, v in rep.items() if not v]
            if bad:
                return False, "bracket table fails on %r for d=%r" % (
                    bad, [d for _, d in P.eps])
        rng = random.Random(seed)
        P = instances[2]
        ring = center_ring(P)
        L = [d for _, d in P.eps]
        Aq = WeylAlgebra(q_deform(P))

        def cp(poly):
            return CenterPoly(P, poly, L)

        def br(f, g):
            return poisson_bracket(cp(f), cp(g), Aq).poly

        for _ in range(100):
            f = _random_center_poly(rng, P, ring)
            g = _random_center_poly(rng, P, ring)
            h = _random_center_poly(rng, P, ring)
            if not (br(f, g) + br(g, f)).is_zero:
                return False, "antisymmetry fails"
            if br(f, g * h) != br(f, g) * h + g * br(f, h):
                return False, "Leibniz fails"
            jac = br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))
            if not jac.is_zero:
                return False, "Jacobi fails"
        # lift independence: perturbing a lift by a multiple of (q - eps)
        # does not change the bracket
        eps_c = Aq.coeff_const(CycElem.root(Aq.D))
        q_minus_eps = Aq.scalar(Aq.root_pow(1) - eps_c)
        for _ in range(50):
            f = _random_center_poly(rng, P, ring)
            g = _random_center_poly(rng, P, ring)
            base = br(f, g)
            c1 = canonical_lift(cp(f), Aq).lift + \
                q_minus_eps * _random_element(rng, Aq, max_deg=3)
            c2 = canonical_lift(cp(g), Aq).lift + \
                q_minus_eps * _random_element(rng, Aq, max_deg=3)
            got = poisson_bracket(cp(f), cp(g), Aq, lifts=(c1, c2)).poly
            if got != base:
                return False, "bracket depends on the choice of lift"
        # Poisson normality of Z_j: {Z_j, g} is a multiple of Z_j
        for Pz in (instances[2], instances[3]):
            ringz = center_ring(Pz)
            Aqz = WeylAlgebra(q_deform(Pz))
            Lz = [d for _, d in Pz.eps]
            for j in range(1, Pz.n + 1):
                Zj = Z_center_poly(Pz, j)
                for name in ("X1", "Y1", "X2", "Y2"):
                    gpoly = MPoly.variable(ringz, name, Pz.D)
                    b = poisson_bracket(Zj, CenterPoly(Pz, gpoly, Lz), Aqz)
                    if b.poly.exact_divide(Zj.poly) is None:
                        return False, "{Z%d, %s} is not a multiple of Z%d" % (
                            j, name, j)
        return True, "4 bracket tables; 100 triples; 50 perturbed lifts; " \
            "Z normality"
    return _timed(7, "Poisson bracket from the q-deformation", 60.0, run)


# -- 8: morphism classification --------------------------------------------

def criterion_8(seed=0):
    def run():
        sources = [
            WeylParams(1, [(1, 2)], [[None]]),
            WeylParams(1, [(1, 3)], [[None]]),
            WeylParams(2, [(1, 2), (1, 2)], [[None, (1, 2)], [None, None]]),
            WeylParams(2, [(1, 2), (1, 3)], [[None, (1, 6)], [None, None]]),
            WeylParams(2, [(1, 3), (1, 3)], [[None, (1, 3)], [None, None]]),
        ]
        for P in sources:
            for tau in product((1, -1), repeat=P.n):
                spec = generic_spec(P, tau)
                if not verify_homomorphism(spec):
                    return False, "generic morphism fails (d=%r, tau=%r)" % (
                        [d for _, d in P.eps], tau)
        w1 = WeylParams(1, [(1, 3)], [[None]])
        w2 = WeylParams(1, [(2, 3)], [[None]])
        w4 = WeylParams(1, [(1, 4)], [[None]])
        if isomorphic(w1, w2) != (-1,):
            return False, "cube-root pair should match with a swap"
        if isomorphic(w1, w4) is not None:
            return False, "order-3 vs order-4 should not match"
        shapes = [
            (WeylParams(1, [(1, 2)], [[None]]), "SemidirectZ2", 1),
            (WeylParams(1, [(1, 3)], [[None]]), "Torus", None),
            (WeylParams(2, [(1, 2), (1, 2)],
                        [[None, (1, 4)], [None, None]]), "SemidirectZ2", 2),
            (WeylParams(2, [(1, 2), (1, 2)],
                        [[None, (1, 3)], [None, None]]), "Torus", None),
        ]
        for P, want, k in shapes:
            got = aut_group_shape(P)
            if got["shape"] != want or (k is not None and got.get("k") != k):
                return False, "shape detector wrong on d=%r" % (
                    [d for _, d in P.eps],)
        return True, "generic specs over all sign patterns; search; shapes"
    return _timed(8, "morphism classification", 30.0, run)


# -- 9: cross-checks -------------------------------------------------------

def criterion_9(seed=0):
    def run():
        cases = [
            (1, [(1, 2)], None),
            (1, [(1, 3)], None),
            (2, [(1, 2), (1, 2)], (0, 1)),
            (2, [(1, 2), (1, 2)], (1, 2)),
        ]
        for n, eps, b12 in cases:
            P = _c3_params(n, eps, b12)
            beta = [[None] * n for _ in range(n)]
            if n == 2:
                beta[0][1] = b12
            Pc = WeylParams(n, eps, beta, c_formal=True)
            rhs71 = theorem_71_rhs(Pc, [d for _, d in eps])
            ring = center_ring(P)
            at_one = rhs71.poly.substitute(
                {"c": CycElem.one(P.D)}, target_ring=ring)
            if is_associate(at_one, theorem_b_rhs(P).poly) is None:
                return False, "closed forms disagree at c = 1 (d=%r)" % (
                    [d for _, d in eps],)
        for d in range(2, 7):
            theorem_b_eta(WeylParams(1, [(1, d)], [[None]]))
        return True, "closed forms agree at c = 1; unit constants for d <= 6"
    return _timed(9, "closed-form cross-checks", 600.0, run)


# -- 10: basis independence ------------------------------------------------

def criterion_10(seed=0):
    def run():
        for d in (2, 3):
            P = WeylParams(1, [(1, d)], [[None]])
            lhs = discriminant(P, [d], convention="y-first")
            rhs = discriminant(P, [d], convention="x-first")
            if is_associate(lhs.poly, rhs.poly) is None:
                return False, "conventions disagree at d=%d" % d
        return True, "y-first and x-first determinants are associates"
    return _timed(10, "basis independence", 60.0, run)


_CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
             criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def run_all(seed=0):
    return [fn(seed) for fn in _CRITERIA]
