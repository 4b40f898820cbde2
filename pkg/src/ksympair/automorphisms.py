"""Finite-order automorphisms and the canonical decomposition g = h + m.

h is the fixed space ker(id - nu) and m the image of (id - nu); because nu
has finite order, the nilpotent Fitting part of (id - nu) collapses into the
kernel, so the two pieces are complementary.  Effectiveness and primality of
the resulting pair are decided here as well.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from . import linalg
from .algebra import LieAlgebra, Subspace, bracket, check_vector, is_simple
from .exceptions import (
    DimensionError,
    InvariantViolationError,
    NotAutomorphismError,
    NotSimpleError,
    OutOfRangeError,
    WrongOrderError,
)
log = logging.getLogger(__name__)

#: entrywise tolerance for "matrix power equals identity" on float paths
ORDER_TOL = 1e-8

#: bound on matrix-power loops when verifying orders
MAX_ORDER = 48


@dataclass
class FiniteOrderAutomorphism:
    """A validated automorphism nu with nu^order = id, order >= 2."""

    algebra: LieAlgebra
    matrix: list
    order: int

    def __call__(self, x):
        x = check_vector(self.algebra.dim, self.algebra.field, x)
        return linalg.mat_vec(self.matrix, x)

    def column(self, j):
        return [row[j] for row in self.matrix]

    def __repr__(self):
        return f"FiniteOrderAutomorphism(order={self.order}, dim={self.algebra.dim})"


def _is_identity(m, exact, tol):
    n = len(m)
    for i in range(n):
        for j in range(n):
            want = 1 if i == j else 0
            d = m[i][j] - want
            if (exact and d != 0) or (not exact and abs(d) > tol):
                return False
    return True


def make_automorphism(L, matrix, claimed_order, tol=None):
    """Validate bracket compatibility and the exact order of a matrix."""
    if tol is None:
        tol = L.tol
    if claimed_order > MAX_ORDER:
        raise OutOfRangeError(f"order {claimed_order} exceeds the cap {MAX_ORDER}")
    if claimed_order < 2:
        raise WrongOrderError(
            f"a k-symmetric pair needs order k >= 2, got {claimed_order}")
    matrix = [check_vector(L.dim, L.field, row) for row in matrix]
    if len(matrix) != L.dim:
        raise DimensionError("automorphism matrix must be square of the algebra dimension")
    if linalg.rank(matrix, L.exact, tol) != L.dim:
        raise NotAutomorphismError("matrix is not invertible")

    # bracket compatibility nu[x, y] = [nu x, nu y] on all basis pairs
    cols = linalg.transpose(matrix)
    scale = 1.0 if L.exact else max(linalg.mat_max_abs(matrix), 1.0) ** 2
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            sparse = L._adj[i].get(j, {})
            lhs = [0 if L.exact else 0.0] * L.dim
            for k, c in sparse.items():
                col = cols[k]
                for r in range(L.dim):
                    if col[r]:
                        lhs[r] = lhs[r] + c * col[r]
            rhs = bracket(L, cols[i], cols[j])
            diff = [a - b for a, b in zip(lhs, rhs)]
            if not linalg.vec_is_zero(diff, L.exact, tol, scale):
                raise NotAutomorphismError(
                    f"bracket compatibility fails on basis pair ({i + 1}, {j + 1})")

    power = linalg.identity(L.dim, L.exact)
    order_tol = ORDER_TOL if not L.exact else 0.0
    for j in range(1, claimed_order + 1):
        power = linalg.mat_mul(power, matrix)
        if _is_identity(power, L.exact, order_tol):
            if j < claimed_order:
                raise WrongOrderError(
                    f"matrix has order {j}, not the claimed {claimed_order}",
                    actual_order=j)
            return FiniteOrderAutomorphism(L, matrix, claimed_order)
    raise WrongOrderError(
        f"no power up to {claimed_order} equals the identity", actual_order=None)


@dataclass
class CanonicalDecomposition:
    """g = h + m for a finite-order automorphism, with both projections."""

    algebra: LieAlgebra
    nu: FiniteOrderAutomorphism
    h: Subspace
    m: Subspace
    proj_h: list
    proj_m: list
    k: int

    @property
    def pair_kind(self):
        return self.k

    def h_coords(self, v):
        return self.h.coords(v)

    def m_coords(self, v):
        return self.m.coords(v)

    def project_m(self, v):
        return linalg.mat_vec(self.proj_m, v)

    def project_h(self, v):
        return linalg.mat_vec(self.proj_h, v)

    def __repr__(self):
        return (f"CanonicalDecomposition(k={self.k}, dim h={self.h.dim}, "
                f"dim m={self.m.dim})")


def fitting_decomposition(nu):
    """h = ker(id - nu), m = im(id - nu), verified to satisfy the pair laws."""
    L = nu.algebra
    exact = L.exact
    tol = L.tol
    n = L.dim
    ident = linalg.identity(n, exact)
    a = linalg.mat_sub(ident, nu.matrix)
    h_basis = linalg.kernel_basis(a, exact, tol)
    m_basis = linalg.row_space(linalg.transpose(a), exact, tol)
    if len(h_basis) + len(m_basis) != n:
        raise InvariantViolationError("h and m do not span the algebra")
    # finite order forces ker A = ker A^2
    a2 = linalg.mat_mul(a, a)
    h2_basis = linalg.kernel_basis(a2, exact, tol)
    if not linalg.mat_equal(h_basis or [[]], h2_basis or [[]], exact, tol):
        raise InvariantViolationError("ker(id - nu) differs from ker((id - nu)^2)")

    h = Subspace(n, h_basis, L.field, tol)
    m = Subspace(n, m_basis, L.field, tol)
    for u in h.basis:
        for v in h.basis:
            if not h.contains(bracket(L, u, v)):
                raise InvariantViolationError("[h, h] not contained in h")
        for v in m.basis:
            if not m.contains(bracket(L, u, v)):
                raise InvariantViolationError("[h, m] not contained in m")

    cols = h.basis + m.basis
    s = linalg.transpose(cols)
    s_inv = linalg.inverse(s, exact, tol)
    d_h = linalg.identity(n, exact)
    for i in range(len(h.basis), n):
        d_h[i][i] = 0 if exact else 0.0
    proj_h = linalg.mat_mul(linalg.mat_mul(s, d_h), s_inv)
    proj_m = linalg.mat_sub(linalg.identity(n, exact), proj_h)
    return CanonicalDecomposition(L, nu, h, m, proj_h, proj_m, nu.order)


def _unit(n, j, exact):
    return [(1 if exact else 1.0) if i == j else (0 if exact else 0.0) for i in range(n)]


def _kernel_of_ad_into(L, domain, targets):
    """{x in span(domain) : [x, t] = 0 for all t in targets}, ambient coords."""
    exact = L.exact
    rows = []
    for t in targets:
        images = [bracket(L, b, t) for b in domain]
        for coord in range(L.dim):
            row = [img[coord] for img in images]
            if not linalg.vec_is_zero(row, exact, L.tol,
                                      1.0 if exact else max(linalg.mat_max_abs([row]), 1.0)):
                rows.append(row)
    if not rows:
        coeff_basis = linalg.identity(len(domain), exact)
    else:
        coeff_basis = linalg.kernel_basis(rows, exact, L.tol)
    vectors = []
    for coeffs in coeff_basis:
        v = [0 if exact else 0.0] * L.dim
        for c, b in zip(coeffs, domain):
            if c:
                v = [x + c * y for x, y in zip(v, b)]
        vectors.append(v)
    return linalg.row_space(vectors, exact, L.tol) if vectors else []


def is_effective(d):
    """No nonzero ideal of g sits inside h.

    Computed two ways that the theory says must agree: the stable core of
    the iteration n_{i+1} = {x in n_i : [x, g] in n_i} started at h, and the
    kernel of U -> ad(U) restricted to m on h.  Disagreement is a bug.
    """
    L = d.algebra
    exact = L.exact
    ambient = [_unit(L.dim, j, exact) for j in range(L.dim)]

    current = list(d.h.basis)
    while True:
        nxt = _kernel_of_ad_into_subspace(L, current, ambient)
        if len(nxt) == len(current):
            current = nxt
            break
        current = nxt
        if not current:
            break
    route_a = current

    route_b = _kernel_of_ad_into(L, d.h.basis, d.m.basis)

    same = linalg.mat_equal(route_a or [[]], route_b or [[]], exact, L.tol)
    if not same:
        raise InvariantViolationError(
            "maximal-ideal iteration and ad-kernel disagree on effectiveness")
    return len(route_a) == 0


def _kernel_of_ad_into_subspace(L, domain, targets):
    """{x in span(domain) : [x, t] in span(domain) for all t in targets}."""
    exact = L.exact
    if not domain:
        return []
    red, piv = linalg.rref(domain, exact, L.tol)
    rows = []
    for t in targets:
        rems = [linalg.reduce_vector(red, piv, bracket(L, b, t), exact, L.tol)
                for b in domain]
        for coord in range(L.dim):
            row = [rem[coord] for rem in rems]
            if not linalg.vec_is_zero(row, exact, L.tol,
                                      1.0 if exact else max(linalg.mat_max_abs([row]), 1.0)):
                rows.append(row)
    if not rows:
        return linalg.row_space(domain, exact, L.tol)
    coeff_basis = linalg.kernel_basis(rows, exact, L.tol)
    vectors = []
    for coeffs in coeff_basis:
        v = [0 if exact else 0.0] * L.dim
        for c, b in zip(coeffs, domain):
            if c:
                v = [x + c * y for x, y in zip(v, b)]
        vectors.append(v)
    return linalg.row_space(vectors, exact, L.tol) if vectors else []


def is_prime(d):
    """Effective and the h-components of [m, m] span all of h."""
    if not is_effective(d):
        return False
    L = d.algebra
    spans = []
    mb = d.m.basis
    for i in range(len(mb)):
        for j in range(i + 1, len(mb)):
            w = bracket(L, mb[i], mb[j])
            spans.append(d.project_h(w))
    if not spans:
        return d.h.dim == 0
    return len(linalg.row_space(spans, L.exact, L.tol)) == d.h.dim


def check_simple_implies_prime(L, nu):
    """Assert the simple => prime proposition on a concrete pair."""
    if not is_simple(L):
        raise NotSimpleError("the proposition applies to simple algebras only")
    verdict = is_prime(fitting_decomposition(nu))
    if not verdict:
        log.error("counterexample to simple => prime found: %r with order %d",
                  L, nu.order)
    return verdict
