"""Isomorphisms and automorphisms of the classified diagonal/swap form.

A morphism is described by signs tau_j and unit scalars mu_j, nu_j: it sends
x_j to mu_j x'_j and y_j to nu_j y'_j when tau_j = +1, and x_j to mu_j y'_j,
y_j to nu_j x'_j when tau_j = -1.  Such data extends to an algebra map iff

  (ident1)  eps'_j = eps_j^{tau_j}   and
            mu_j nu_j = tau_j * prod over k <= j with tau_k = -1 of eps_k^{-1},
  (ident2)  for j < k:  beta'_jk = beta_jk^{tau_j}        if tau_k = +1,
                        beta'_jk = (eps_j beta_jk)^{-tau_j}  if tau_k = -1.

Units are Laurent monomials in the declared formal unit variables times a
root of unity; with formal unit scalars, verify_homomorphism is a generic
check rather than a sampled one.
"""

from itertools import product

from gmpy2 import mpq

from .cyclotomic import CycElem
from .polyring import MPoly
from .params import WeylParams, ParamError, _reduce
from .weyl import WeylAlgebra


class AutError(ValueError):
    pass


class AutSpec:
    """Validated (tau, mu, nu) data between two parameter sets."""

    def __init__(self, source, target, tau, mu, nu, target_algebra=None):
        self.source = source
        self.target = target
        self.tau = tuple(tau)
        self.algebra = target_algebra or WeylAlgebra(target)
        self.mu = [m if isinstance(m, MPoly) else self.algebra.coeff_const(m)
                   for m in mu]
        self.nu = [m if isinstance(m, MPoly) else self.algebra.coeff_const(m)
                   for m in nu]

    def images(self):
        A = self.algebra
        out = {}
        for j in range(1, self.source.n + 1):
            if self.tau[j - 1] == 1:
                out[("x", j)] = A.x(j) * self.mu[j - 1]
                out[("y", j)] = A.y(j) * self.nu[j - 1]
            else:
                out[("x", j)] = A.y(j) * self.mu[j - 1]
                out[("y", j)] = A.x(j) * self.nu[j - 1]
        return out


def _eps_condition(source, target, tau):
    """eps'_j = eps_j^{tau_j}, as an equality of reduced fractions."""
    for j in range(source.n):
        m, d = source.eps[j]
        if target.eps[j] != _reduce(tau[j] * m, d):
            return j + 1
    return None


def _beta_condition(source, target, tau):
    """The j < k scalar matching condition; returns a failing (j, k) or None."""
    for j in range(source.n):
        for k in range(j + 1, source.n):
            mjk, djk = source.beta[j][k]
            if tau[k] == 1:
                want = _reduce(tau[j] * mjk, djk)
            else:
                mj, dj = source.eps[j]
                frac = mpq(mj, dj) + mpq(mjk, djk)
                want = _reduce(int(-tau[j] * frac.numerator),
                               int(frac.denominator))
            if target.beta[j][k] != want:
                return (j + 1, k + 1)
    return None


def build_automorphism(source, target, tau, mu, nu, target_algebra=None):
    """Validate (ident1)/(ident2) and package the morphism data."""
    n = source.n
    if target.n != n:
        raise AutError("rank mismatch")
    if len(tau) != n or any(t not in (1, -1) for t in tau):
        raise AutError("tau must be a list of n signs")
    bad = _eps_condition(source, target, tau)
    if bad is not None:
        raise AutError("eps condition fails at j=%d" % bad)
    bad = _beta_condition(source, target, tau)
    if bad is not None:
        raise AutError("beta condition fails at (j,k)=%r" % (bad,))
    spec = AutSpec(source, target, tau, mu, nu, target_algebra)
    A = spec.algebra
    src_t = [A.D * m // d for m, d in source.eps]
    for j in range(n):
        # mu_j nu_j = tau_j * prod_{k<=j, tau_k=-1} eps_k^{-1} (source eps)
        exp = -sum(src_t[k] for k in range(j + 1) if tau[k] == -1)
        want = A.root_pow(exp) * tau[j]
        if spec.mu[j] * spec.nu[j] != want:
            raise AutError("scalar product condition fails at j=%d" % (j + 1))
    return spec


def twisted_params(source, tau, formal_units=()):
    """The unique target parameter set satisfying (ident1)/(ident2)."""
    n = source.n
    eps = [_reduce(tau[j] * m, d) for j, (m, d) in enumerate(source.eps)]
    beta = [[None] * n for _ in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            mjk, djk = source.beta[j][k]
            if tau[k] == 1:
                beta[j][k] = _reduce(tau[j] * mjk, djk)
            else:
                mj, dj = source.eps[j]
                frac = mpq(mj, dj) + mpq(mjk, djk)
                beta[j][k] = _reduce(int(-tau[j] * frac.numerator),
                                     int(frac.denominator))
    return WeylParams(n, eps, beta, c_formal=source.c_formal,
                      q_deformed=source.q_deformed,
                      formal_units=formal_units or source.formal_units)


def generic_spec(source, tau):
    """The morphism with mu_j a fresh formal unit and nu_j forced by (ident1)."""
    n = source.n
    units = tuple("u%d" % (j + 1) for j in range(n))
    target = twisted_params(source, tau, formal_units=units)
    A = WeylAlgebra(target)
    mu, nu = [], []
    src_t = [A.D * m // d for m, d in source.eps]
    for j in range(n):
        uj = MPoly.variable(A.coeff_ring, units[j], A.D)
        exp = -sum(src_t[k] for k in range(j + 1) if tau[k] == -1)
        mu.append(uj)
        nu.append(A.root_pow(exp) * tau[j] * uj.mono_inverse())
    src = WeylParams(n, source.eps, source.beta, c_formal=source.c_formal,
                     q_deformed=source.q_deformed, formal_units=units)
    return build_automorphism(src, target, tau, mu, nu, A)


def verify_homomorphism(spec):
    """Check every defining relation of the source on the images."""
    src = spec.source
    A = spec.algebra
    n = src.n
    im = spec.images()
    X = [im[("x", j)] for j in range(1, n + 1)]
    Y = [im[("y", j)] for j in range(1, n + 1)]
    Asrc = WeylAlgebra(src)  # only for the source scalar exponents
    t, u = Asrc._t, Asrc._u

    def sc(e):
        return A.root_pow(e)

    for j in range(n):
        for k in range(j + 1, n):
            if Y[j] * Y[k] != Y[k] * Y[j] * sc(u[j][k]):
                return False
            if X[j] * X[k] != X[k] * X[j] * sc(t[j] + u[j][k]):
                return False
            if X[j] * Y[k] != Y[k] * X[j] * sc(u[k][j]):
                return False
            if X[k] * Y[j] != Y[j] * X[k] * sc(t[j] + u[j][k]):
                return False
        rhs = A.scalar(A.z0_coeff())
        for i in range(j):
            rhs = rhs + Y[i] * X[i] * (sc(t[i]) - 1)
        if X[j] * Y[j] - Y[j] * X[j] * sc(t[j]) != rhs:
            return False
    return True


def invert(spec):
    """The inverse morphism; mu, nu must be monomial units."""
    n = spec.source.n
    A = WeylAlgebra(spec.source)
    mu, nu = [], []
    for j in range(n):
        mi = spec.mu[j].mono_inverse()
        ni = spec.nu[j].mono_inverse()
        if mi is None or ni is None:
            raise AutError("scalar is not an invertible monomial")
        if spec.tau[j] == 1:
            mu.append(mi.cast_to(A.coeff_ring))
            nu.append(ni.cast_to(A.coeff_ring))
        else:
            mu.append(ni.cast_to(A.coeff_ring))
            nu.append(mi.cast_to(A.coeff_ring))
    return build_automorphism(spec.target, spec.source, spec.tau, mu, nu, A)


def isomorphic(P1, P2):
    """First sign sequence realizing an isomorphism, or None."""
    if P1.n != P2.n:
        return None
    if not (P1.is_free_over_center() and P2.is_free_over_center()):
        raise ParamError("the classification applies to the free case")
    for tau in product((1, -1), repeat=P1.n):
        if _eps_condition(P1, P2, tau) is None \
                and _beta_condition(P1, P2, tau) is None:
            return tau
    return None


def aut_group_shape(P):
    """Shape of the automorphism group of the generator scalars.

    Returns {"shape": "SemidirectZ2", "k": k, ...} when some index k has
    eps_k = -1, beta_jk^2 = eps_j for j < k and beta_jk^2 = 1 for j > k
    (which forces eps_j = -1 for those j < k); otherwise {"shape": "Torus"}.
    """
    A = WeylAlgebra(P)
    D = P.D
    for k in range(P.n):
        if A._t[k] * 2 % D != 0 or A._t[k] % D == 0:
            continue  # eps_k != -1
        ok = True
        for j in range(P.n):
            if j == k:
                continue
            if j < k:
                if (2 * A._u[j][k] - A._t[j]) % D != 0:
                    ok = False
                    break
            elif 2 * A._u[j][k] % D != 0:
                ok = False
                break
        if ok:
            return {"shape": "SemidirectZ2", "k": k + 1,
                    "note": "the condition forces eps_j = -1 for j < k"}
    return {"shape": "Torus"}
