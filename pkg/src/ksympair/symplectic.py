"""Symplecticity of a k-symmetric pair via injective central elements.

A semisimple pair (g, nu) is symplectic exactly when some Z in the center of
h acts without kernel on m; the invariant symplectic form is then
Omega(X, Y) = B(Z, [X, Y]) on m.  This module searches for such a Z,
constructs Omega, and verifies all the properties the construction promises:
nondegeneracy, closedness as a Chevalley 2-cocycle, ad_h-invariance,
nu-invariance and nu Z = Z.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .algebra import (
    BilinearForm,
    Subspace,
    bracket,
    center,
    check_vector,
    is_semisimple,
    killing_form,
    subalgebra_restriction,
)
from .automorphisms import CanonicalDecomposition, fitting_decomposition
from .exceptions import (
    DimensionError,
    InvariantViolationError,
    NotCentralError,
    NotSemisimpleError,
)
from .scalars import rational_sqrt

_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


@dataclass
class InjectiveElementReport:
    """Outcome of the search for an injective element in Z(h)."""

    candidates_tested: int
    found: Optional[list]
    kernel_dim_on_m: int
    method: str  # "generic-sample" | "exhaustive-grid"


@dataclass
class SymplecticChecks:
    nondegenerate_on_m: bool
    closed_cocycle: bool
    ad_h_invariant: bool
    nu_invariant: bool
    nu_fixes_Z: bool

    def all_pass(self):
        return (self.nondegenerate_on_m and self.closed_cocycle
                and self.ad_h_invariant and self.nu_invariant and self.nu_fixes_Z)


@dataclass
class SymplecticVerdict:
    is_symplectic: bool
    Z: Optional[list]
    omega_on_m: Optional[BilinearForm]
    checks: SymplecticChecks
    report: InjectiveElementReport
    decomposition: CanonicalDecomposition


@dataclass
class ComplexStructureCheck:
    J: list
    commutes_with_ad_h: bool
    squares_to_minus_id: bool
    kahler_metric_positive: bool


def center_of_h(d):
    """Center of the fixed subalgebra h, in ambient coordinates."""
    L = d.algebra
    h_alg = subalgebra_restriction(L, d.h)
    inner = center(h_alg)
    vectors = []
    for coeffs in inner.basis:
        v = [0 if L.exact else 0.0] * L.dim
        for c, b in zip(coeffs, d.h.basis):
            if c:
                v = [x + c * y for x, y in zip(v, b)]
        vectors.append(v)
    return Subspace(L.dim, linalg.row_space(vectors, L.exact, L.tol), L.field, L.tol)


def ad_restricted_to_m(d, z):
    """Matrix of ad_z acting on m, in the m basis (requires z in h)."""
    L = d.algebra
    cols = []
    for mv in d.m.basis:
        w = bracket(L, z, mv)
        coords = d.m.coords(w)
        if coords is None:
            raise InvariantViolationError("ad_z does not preserve m")
        cols.append(coords)
    return linalg.transpose(cols)


def _kernel_dim_on_m(d, z):
    if d.m.dim == 0:
        return 0
    mat = ad_restricted_to_m(d, z)
    return d.m.dim - linalg.rank(mat, d.algebra.exact, d.algebra.tol)


def find_injective_element(d):
    """Search Z(h) for an element with injective adjoint action on m.

    Injectivity is Zariski-open, so a fixed generic sample (prime
    coefficients over the center basis) almost always decides the question;
    an exhaustive integer grid over [-5, 5] coefficients certifies the
    negative answer at desk scale.
    """
    L = d.algebra
    if not is_semisimple(L):
        raise NotSemisimpleError("injective-element search needs a semisimple algebra")
    zc = center_of_h(d)
    s = zc.dim
    if s == 0:
        return InjectiveElementReport(0, None, d.m.dim, "generic-sample")
    one = 1 if L.exact else 1.0

    def combo(coeffs):
        v = [0 if L.exact else 0.0] * L.dim
        for c, b in zip(coeffs, zc.basis):
            if c:
                v = [x + (c * one) * y for x, y in zip(v, b)]
        return v

    z = combo(_PRIMES[:s])
    kdim = _kernel_dim_on_m(d, z)
    if kdim == 0:
        return InjectiveElementReport(1, z, 0, "generic-sample")
    tested = 1
    last_kdim = kdim
    for coeffs in itertools.product(range(-5, 6), repeat=s):
        if all(c == 0 for c in coeffs):
            continue
        z = combo(coeffs)
        tested += 1
        last_kdim = _kernel_dim_on_m(d, z)
        if last_kdim == 0:
            return InjectiveElementReport(tested, z, 0, "exhaustive-grid")
    return InjectiveElementReport(tested, None, last_kdim, "exhaustive-grid")


def assert_central(d, z):
    L = d.algebra
    z = check_vector(L.dim, L.field, z)
    if not d.h.contains(z):
        raise NotCentralError("element does not lie in h")
    for b in d.h.basis:
        w = bracket(L, z, b)
        if not linalg.vec_is_zero(w, L.exact, L.tol,
                                  1.0 if L.exact else max(linalg.mat_max_abs([w]), 1.0)):
            raise NotCentralError("element does not centralize h")
    return z


def build_symplectic_form(d, z):
    """Omega(X, Y) = B(Z, [X, Y]) on the m basis, antisymmetric.

    Both sides of the identity B(Z, [X, Y]) = B([Z, X], Y) are evaluated and
    compared; they can only differ if the Killing form lost ad-invariance,
    which is a bug.
    """
    L = d.algebra
    z = assert_central(d, z)
    b = killing_form(L)
    mb = d.m.basis
    k = len(mb)
    zero = 0 if L.exact else 0.0
    omega = [[zero] * k for _ in range(k)]
    scale = 1.0
    if not L.exact:
        scale = max(linalg.mat_max_abs(b.matrix), 1.0)
    for i in range(k):
        zxi = bracket(L, z, mb[i])
        for j in range(i + 1, k):
            via_z = b(z, bracket(L, mb[i], mb[j]))
            via_ad = b(zxi, mb[j])
            diff = via_z - via_ad
            if (L.exact and diff != 0) or (not L.exact and abs(diff) > L.tol * scale):
                raise InvariantViolationError(
                    "B(Z,[X,Y]) and B([Z,X],Y) disagree; Killing invariance broken")
            omega[i][j] = via_z
            omega[j][i] = -via_z
    return BilinearForm(omega, "antisymmetric", L.field, L.tol)


def _extended_gram(d, omega):
    """Gram matrix of Omega extended by zero on h, in ambient coordinates."""
    L = d.algebra
    k = d.m.dim
    cols = []
    for j in range(L.dim):
        unit = [(1 if L.exact else 1.0) if i == j else (0 if L.exact else 0.0)
                for i in range(L.dim)]
        pm = d.project_m(unit)
        coords = d.m.coords(pm)
        if coords is None:
            raise InvariantViolationError("projection to m left the subspace")
        cols.append(coords)
    kmat = linalg.transpose(cols)  # k x dim
    return linalg.mat_mul(linalg.transpose(kmat), linalg.mat_mul(omega.matrix, kmat))


def check_cocycle(d, omega):
    """delta Omega = 0 over all basis triples, for the zero-extension on h."""
    L = d.algebra
    w = _extended_gram(d, omega)
    exact = L.exact
    scale = 1.0 if exact else max(linalg.mat_max_abs(w), 1.0)

    def w_pair(sparse, k):
        acc = 0 if exact else 0.0
        for r, c in sparse.items():
            acc = acc + c * w[r][k]
        return acc

    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            cij = L._adj[i].get(j, {})
            for k in range(j + 1, L.dim):
                val = -w_pair(cij, k) \
                    + w_pair(L._adj[i].get(k, {}), j) \
                    - w_pair(L._adj[j].get(k, {}), i)
                if (exact and val != 0) or (not exact and abs(val) > L.tol * scale):
                    return False
    return True


@dataclass
class InvarianceFlags:
    ad_h_invariant: bool
    nu_invariant: bool
    nu_fixes_Z: bool


def check_invariance(d, nu, omega, z):
    """ad_h-invariance and nu-invariance of Omega, and nu Z = Z."""
    L = d.algebra
    z = assert_central(d, z)
    exact = L.exact
    scale = 1.0 if exact else max(linalg.mat_max_abs(omega.matrix), 1.0)
    mb = d.m.basis
    k = len(mb)

    ad_ok = True
    for t in d.h.basis:
        coords = [d.m.coords(bracket(L, t, mv)) for mv in mb]
        for i in range(k):
            if not ad_ok:
                break
            ci = coords[i]
            for j in range(i + 1, k):
                term = sum(ci[r] * omega.matrix[r][j] for r in range(k) if ci[r])
                cj = coords[j]
                term = term + sum(omega.matrix[i][r] * cj[r] for r in range(k) if cj[r])
                if (exact and term != 0) or (not exact and abs(term) > L.tol * scale):
                    ad_ok = False
                    break
        if not ad_ok:
            break

    ncols = []
    for mv in mb:
        img = nu(mv)
        coords = d.m.coords(img)
        if coords is None:
            raise InvariantViolationError("nu does not preserve m")
        ncols.append(coords)
    nmat = linalg.transpose(ncols)
    pulled = linalg.mat_mul(linalg.transpose(nmat),
                            linalg.mat_mul(omega.matrix, nmat))
    nu_ok = linalg.mat_equal(pulled, omega.matrix, exact,
                             L.tol if exact else L.tol * max(scale, 1.0))

    fixed = linalg.mat_equal([nu(z)], [z], exact, L.tol)
    return InvarianceFlags(ad_ok, nu_ok, fixed)


def symplectic_verdict(L, nu):
    """Full pipeline: decomposition, injective search, form, all checks."""
    if not is_semisimple(L):
        raise NotSemisimpleError("the symplectic criterion requires semisimplicity")
    d = fitting_decomposition(nu)
    report = find_injective_element(d)
    if report.found is None:
        checks = SymplecticChecks(False, False, False, False, False)
        return SymplecticVerdict(False, None, None, checks, report, d)
    z = report.found
    omega = build_symplectic_form(d, z)
    flags = check_invariance(d, nu, omega, z)
    checks = SymplecticChecks(
        nondegenerate_on_m=omega.rank() == d.m.dim,
        closed_cocycle=check_cocycle(d, omega),
        ad_h_invariant=flags.ad_h_invariant,
        nu_invariant=flags.nu_invariant,
        nu_fixes_Z=flags.nu_fixes_Z,
    )
    if not checks.all_pass():
        raise InvariantViolationError(
            f"injective element found but a theorem-implied check failed: {checks}")
    return SymplecticVerdict(True, z, omega, checks, report, d)


def check_complex_structure(d, j_matrix, omega):
    """Verify J^2 = -id, commutation with ad_h on m, and metric positivity."""
    L = d.algebra
    k = d.m.dim
    if k % 2 == 1:
        raise DimensionError("m is odd-dimensional; no almost complex structure")
    if len(j_matrix) != k:
        raise DimensionError("J must act on m")
    exact = L.exact
    tol = L.tol
    jsq = linalg.mat_mul(j_matrix, j_matrix)
    minus_id = linalg.mat_scale(linalg.identity(k, exact), -1 if exact else -1.0)
    squares = linalg.mat_equal(jsq, minus_id, exact, tol)

    commutes = True
    for t in d.h.basis:
        tmat = ad_restricted_to_m(d, t)
        if not linalg.mat_equal(linalg.mat_mul(tmat, j_matrix),
                                linalg.mat_mul(j_matrix, tmat), exact,
                                tol if exact else tol * max(linalg.mat_max_abs(tmat), 1.0)):
            commutes = False
            break

    metric = linalg.mat_mul(omega.matrix, j_matrix)
    sym = linalg.mat_equal(metric, linalg.transpose(metric), exact,
                           tol if exact else tol * max(linalg.mat_max_abs(metric), 1.0))
    positive = False
    if sym:
        pos, neg, zero = linalg.symmetric_signature(metric, exact, tol)
        positive = pos == k
    return ComplexStructureCheck(j_matrix, commutes, squares, positive)


def calibrated_complex_structure(d, z):
    """Invariant J on m built from the rotation planes of ad_Z.

    ad_Z is block-semisimple on m with (ad_Z)^2 having rational negative
    eigenvalues -c^2 on each invariant plane; J rotates each plane by 90
    degrees, oriented so that omega(x, J x) > 0 for the form built from Z.
    Requires each c to be rational (true for the catalog's torus pairs).
    """
    L = d.algebra
    z = assert_central(d, z)
    a = ad_restricted_to_m(d, z)
    k = d.m.dim
    a2 = linalg.mat_mul(a, a)
    # minimal polynomial of a2, then its (all-rational) eigenvalues
    from .algebra import _min_poly

    coeffs = _min_poly(a2, L.exact, L.tol)
    lams = linalg.rational_roots(coeffs)
    blocks = []
    total = 0
    for lam in lams:
        shifted = linalg.mat_sub(a2, linalg.mat_scale(linalg.identity(k, L.exact), lam))
        ker = linalg.kernel_basis(shifted, L.exact, L.tol)
        if not ker:
            continue
        c2 = -lam
        c = rational_sqrt(Fraction(c2)) if L.exact else None
        if L.exact and c is None:
            raise ValueError("rotation speed not rational; calibrated J unavailable")
        if not L.exact:
            c = abs(c2) ** 0.5
        if c == 0:
            raise ValueError("ad_Z has kernel on m; no calibrated J")
        blocks.append((ker, c))
        total += len(ker)
    if total != k:
        raise ValueError("(ad_Z)^2 is not semisimple with rational spectrum on m")
    cols_in = []
    cols_out = []
    for ker, c in blocks:
        for v in ker:
            cols_in.append(v)
            av = linalg.mat_vec(a, v)
            cols_out.append([-x / c for x in av])
    s = linalg.transpose(cols_in)
    target = linalg.transpose(cols_out)
    s_inv = linalg.inverse(s, L.exact, L.tol)
    return linalg.mat_mul(target, s_inv)
