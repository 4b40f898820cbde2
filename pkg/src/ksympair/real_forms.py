"""Cartan-type involutions, compactness, and compact <-> noncompact duality.

The dual of g along an order-2 automorphism sigma is g^sigma + sqrt(-1) m.
No imaginary unit is ever materialized: rebasing to an eigenbasis of sigma
and flipping the sign of the [minus, minus] structure constants is exactly
the effect of multiplying the minus basis by sqrt(-1), so all arithmetic
stays in the source field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .algebra import (
    LieAlgebra,
    Subspace,
    check_vector,
    is_semisimple,
    killing_form,
)
from .automorphisms import (
    FiniteOrderAutomorphism,
    fitting_decomposition,
    make_automorphism,
)
from .exceptions import (
    InvariantViolationError,
    NotSemisimpleError,
    PreconditionError,
)
from .symplectic import ad_restricted_to_m, center_of_h


def _half(x):
    if isinstance(x, int):
        return Fraction(x, 2)
    return x / 2


@dataclass
class InvolutionSplit:
    """Eigenspace data of an order-2 automorphism, refined along nu."""

    algebra: LieAlgebra
    sigma: FiniteOrderAutomorphism
    plus_space: Subspace
    minus_space: Subspace
    commutes_with_nu: bool
    nu: Optional[FiniteOrderAutomorphism] = None
    h1: Optional[Subspace] = None
    h2: Optional[Subspace] = None
    m1: Optional[Subspace] = None
    m2: Optional[Subspace] = None

    def refined_dims(self):
        if self.h1 is None:
            return None
        return (self.h1.dim, self.h2.dim, self.m1.dim, self.m2.dim)


@dataclass
class RealFormConstruction:
    """The dual algebra along an involution, with the transported data."""

    source: LieAlgebra
    split: InvolutionSplit
    dual: LieAlgebra
    dual_nu: Optional[FiniteOrderAutomorphism]
    basis_matrix: list  # columns: plus basis then minus basis, source coords
    plus_dim: int

    def dual_involution_matrix(self):
        """The transported sigma: +1 on the plus block, -1 on the minus block."""
        n = self.dual.dim
        exact = self.dual.exact
        m = linalg.identity(n, exact)
        for i in range(self.plus_dim, n):
            m[i][i] = -1 if exact else -1.0
        return m


def is_compact_form(L):
    """Negative-definite Killing form (the compact real forms)."""
    if not is_semisimple(L):
        raise NotSemisimpleError("compactness test requires a semisimple algebra")
    pos, neg, zero = killing_form(L).signature()
    return neg == L.dim


def make_involution_split(L, nu, sigma_matrix):
    """Split g into +-1 eigenspaces of sigma; refine along h and m_A.

    When sigma commutes with nu it must preserve both h and m_A (the Killing
    orthogonality argument); that is verified, and the four intersections
    h1, h2, m1, m2 are computed.
    """
    sigma = make_automorphism(L, sigma_matrix, 2)
    exact = L.exact
    ident = linalg.identity(L.dim, exact)
    plus = Subspace(L.dim, linalg.kernel_basis(
        linalg.mat_sub(ident, sigma.matrix), exact, L.tol), L.field, L.tol)
    minus = Subspace(L.dim, linalg.kernel_basis(
        linalg.mat_add(ident, sigma.matrix), exact, L.tol), L.field, L.tol)
    if plus.dim + minus.dim != L.dim:
        raise InvariantViolationError("sigma eigenspaces do not span the algebra")

    commutes = False
    refined = {}
    if nu is not None:
        commutes = linalg.mat_equal(
            linalg.mat_mul(sigma.matrix, nu.matrix),
            linalg.mat_mul(nu.matrix, sigma.matrix), exact, L.tol)
    if commutes:
        d = fitting_decomposition(nu)
        for name, space in (("h", d.h), ("m_A", d.m)):
            for v in space.basis:
                if not space.contains(sigma(v)):
                    raise InvariantViolationError(
                        f"sigma commutes with nu but does not preserve {name}")
        refined = {
            "h1": _intersection(L, d.h, plus),
            "h2": _intersection(L, d.h, minus),
            "m1": _intersection(L, d.m, plus),
            "m2": _intersection(L, d.m, minus),
        }
        if refined["h1"].dim + refined["h2"].dim != d.h.dim or \
           refined["m1"].dim + refined["m2"].dim != d.m.dim:
            raise InvariantViolationError("refined sigma split has wrong dimensions")
    return InvolutionSplit(L, sigma, plus, minus, commutes, nu, **refined)


def _intersection(L, a, b):
    rows = linalg.intersect_spans(a.basis, b.basis, L.exact, L.tol)
    return Subspace(L.dim, rows, L.field, L.tol)


def _derive_labels(L, vectors, prefix=""):
    labels = []
    for idx, v in enumerate(vectors):
        support = [i for i, x in enumerate(v) if x]
        if len(support) == 1 and v[support[0]] in (1, -1, 1.0, -1.0):
            sign = "" if v[support[0]] in (1, 1.0) else "-"
            labels.append(f"{prefix}{sign}{L.basis_labels[support[0]]}")
        else:
            labels.append(f"{prefix}v{idx + 1}")
    return labels


def dual_real_form(split):
    """g* = g^sigma + sqrt(-1) m by the structure-constant sign twist."""
    L = split.algebra
    if not is_semisimple(L):
        raise NotSemisimpleError("duality requires a semisimple source")
    p = split.plus_space.dim
    vectors = split.plus_space.basis + split.minus_space.basis
    from .algebra import change_basis

    rebased = change_basis(L, vectors)
    exact = L.exact
    scale = 1.0
    if not exact:
        scale = max((abs(c) for dd in rebased._pairs.values() for c in dd.values()),
                    default=0.0)
        scale = max(scale, 1.0)
    twisted = {}
    for (i, j), coeffs in rebased._pairs.items():
        nm = (i >= p) + (j >= p)
        out = {}
        for k, c in coeffs.items():
            km = k >= p
            if nm == 0 and not km:
                out[k] = c
            elif nm == 1 and km:
                out[k] = c
            elif nm == 2 and not km:
                out[k] = -c
            else:
                if (exact and c != 0) or (not exact and abs(c) > L.tol * scale):
                    raise InvariantViolationError(
                        "sigma eigenspace grading violated by the bracket")
        if out:
            twisted[(i, j)] = out
    labels = _derive_labels(L, split.plus_space.basis) + \
        _derive_labels(L, split.minus_space.basis, prefix="i*")
    try:
        dual = LieAlgebra(L.dim, twisted, L.field, labels, validate=True, tol=L.tol)
    except InvariantViolationError as exc:
        raise InvariantViolationError(f"dual algebra failed validation: {exc}") from exc

    basis_matrix = linalg.transpose(vectors)
    dual_nu = None
    if split.commutes_with_nu and split.nu is not None:
        inv = linalg.inverse(basis_matrix, exact, L.tol)
        transported = linalg.mat_mul(inv, linalg.mat_mul(split.nu.matrix, basis_matrix))
        dual_nu = make_automorphism(dual, transported, split.nu.order)
    return RealFormConstruction(L, split, dual, dual_nu, basis_matrix, p)


def complexify(L):
    """Realified complexification: dimension doubles, with i stored as an
    explicit operator in ``complex_structure``."""
    n = L.dim
    brackets = {}
    for (i, j), coeffs in L._pairs.items():
        brackets[(i, j)] = dict(coeffs)
        brackets[(i, n + j)] = {n + k: c for k, c in coeffs.items()}
        brackets[(j, n + i)] = {n + k: -c for k, c in coeffs.items()}
        brackets[(n + i, n + j)] = {k: -c for k, c in coeffs.items()}
    labels = list(L.basis_labels) + [f"i*{lbl}" for lbl in L.basis_labels]
    exact = L.exact
    jmat = linalg.zeros_mat(2 * n, 2 * n, exact)
    one = 1 if exact else 1.0
    for a in range(n):
        jmat[n + a][a] = one
        jmat[a][n + a] = -one
    return LieAlgebra(2 * n, brackets, L.field, labels,
                      complex_structure=jmat, validate=True, tol=L.tol)


def complexified_automorphism(Lc, nu):
    """Extend nu by complex linearity to the realified complexification."""
    n = nu.algebra.dim
    if Lc.dim != 2 * n:
        raise PreconditionError("complexified algebra has the wrong dimension")
    exact = Lc.exact
    big = linalg.zeros_mat(2 * n, 2 * n, exact)
    for i in range(n):
        for j in range(n):
            big[i][j] = nu.matrix[i][j]
            big[n + i][n + j] = nu.matrix[i][j]
    return make_automorphism(Lc, big, nu.order)


def embed_in_complexification(v, n=None):
    """Canonical embedding x -> x + 0*i of a vector into the realification."""
    return list(v) + [0] * len(v)


def transfer_injective_element(rc, d_source, z):
    """Move an injective element across the duality (the one-dimensional
    center argument).

    z is split into sigma-even and sigma-odd parts; both land in Z(h).  When
    dim Z(h) = 1 exactly one part is nonzero and its image in the dual pair
    is injective.  For larger centers the same component selection is
    attempted and the verification outcome reported, with no claim attached.
    Returns the transferred vector, or None when no component verifies.
    """
    L = rc.source
    if rc.dual_nu is None:
        raise PreconditionError("transfer needs sigma commuting with nu")
    z = check_vector(L.dim, L.field, z)
    # precondition: z is injective for the source pair
    if not d_source.h.contains(z):
        raise PreconditionError("element is not in h")
    zc = center_of_h(d_source)
    if not zc.contains(z):
        raise PreconditionError("element is not central in h")
    if d_source.m.dim and _kernel_dim(d_source, z) != 0:
        raise PreconditionError("element is not injective for the source pair")

    sigma = rc.split.sigma
    sz = sigma(z)
    h_even = [_half(a + b) for a, b in zip(z, sz)]
    h_odd = [_half(a - b) for a, b in zip(z, sz)]
    for comp in (h_even, h_odd):
        if any(comp) and not zc.contains(comp):
            raise InvariantViolationError("sigma component left the center of h")

    d_dual = fitting_decomposition(rc.dual_nu)
    zc_dual = center_of_h(d_dual)
    inv = linalg.inverse(rc.basis_matrix, L.exact, L.tol)
    p = rc.plus_dim
    n = L.dim
    for comp, block in ((h_even, "plus"), (h_odd, "minus")):
        if not any(comp):
            continue
        coords = linalg.mat_vec(inv, comp)
        lo, hi = (0, p) if block == "plus" else (p, n)
        outside = coords[:lo] + coords[hi:]
        if not linalg.vec_is_zero(outside, L.exact, L.tol,
                                  1.0 if L.exact else max(linalg.mat_max_abs([coords]), 1.0)):
            raise InvariantViolationError("sigma component spread across both blocks")
        candidate = coords
        if not zc_dual.contains(candidate):
            continue
        if d_dual.m.dim and _kernel_dim(d_dual, candidate) != 0:
            continue
        return candidate
    return None


def _kernel_dim(d, z):
    mat = ad_restricted_to_m(d, z)
    return d.m.dim - linalg.rank(mat, d.algebra.exact, d.algebra.tol)
