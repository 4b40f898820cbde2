"""Lie algebras as structure-constant tensors, with the basic structure theory.

The bracket data is held sparsely (most catalog algebras have very few
nonzero structure constants per basis pair), but the dense rank-3 tensor is
available through :attr:`LieAlgebra.structure` for tests and serialization.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .exceptions import (
    DimensionError,
    FieldError,
    InvariantViolationError,
    NotClosedError,
    PreconditionError,
)
from .scalars import (
    DEFAULT_TOL,
    COMPLEX_FLOAT,
    QSqrt3,
    RATIONAL,
    REAL_FLOAT,
    is_exact,
    scalar_to_float,
    simplify_exact,
)

_EXACT_TYPES = (int, Fraction, QSqrt3)


def _check_entry(marker, x):
    if marker == RATIONAL:
        if not isinstance(x, _EXACT_TYPES):
            raise FieldError(f"exact field expected, got {type(x).__name__}")
        return x
    if marker == REAL_FLOAT:
        if isinstance(x, (QSqrt3, Fraction)) or isinstance(x, complex):
            raise FieldError(f"real-float field expected, got {type(x).__name__}")
        return float(x)
    if marker == COMPLEX_FLOAT:
        if isinstance(x, (QSqrt3, Fraction)):
            raise FieldError(f"complex-float field expected, got {type(x).__name__}")
        return complex(x)
    raise FieldError(f"unknown field marker {marker!r}")


def check_vector(dim, marker, v):
    if len(v) != dim:
        raise DimensionError(f"vector length {len(v)} != dimension {dim}")
    if marker == RATIONAL:
        return [simplify_exact(_check_entry(marker, x)) for x in v]
    return [_check_entry(marker, x) for x in v]


class LieAlgebra:
    """A finite-dimensional Lie algebra over an exact or float scalar field.

    ``brackets`` maps index pairs (i, j) with i < j to sparse coefficient
    dicts {k: c} meaning [e_i, e_j] = sum c * e_k.  Antisymmetry is built
    into this storage; the Jacobi identity is verified at construction.

    ``complex_structure`` optionally stores the multiplication-by-i operator
    of a realified complex algebra.
    """

    def __init__(self, dim, brackets, field=RATIONAL, basis_labels=None,
                 complex_structure=None, validate=True, tol=DEFAULT_TOL):
        self.dim = dim
        self.field = field
        self.tol = tol
        if basis_labels is None:
            basis_labels = [f"e{i + 1}" for i in range(dim)]
        if len(basis_labels) != dim:
            raise DimensionError("one basis label per basis vector required")
        self.basis_labels = list(basis_labels)
        self.complex_structure = complex_structure
        self._pairs = {}
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise DimensionError(f"bad bracket index pair ({i}, {j})")
            cleaned = {}
            for k, c in coeffs.items():
                if not 0 <= k < dim:
                    raise DimensionError(f"bad bracket target index {k}")
                c = _check_entry(field, c)
                if c:
                    cleaned[k] = simplify_exact(c) if is_exact(field) else c
            if cleaned:
                self._pairs[(i, j)] = cleaned
        # adjacency: _adj[i][j] = sparse [e_i, e_j] for every ordered (i, j)
        self._adj = [dict() for _ in range(dim)]
        for (i, j), coeffs in self._pairs.items():
            self._adj[i][j] = coeffs
            self._adj[j][i] = {k: -c for k, c in coeffs.items()}
        self._structure = None
        self._killing = None
        self._semisimple = None
        if validate:
            self._validate_jacobi()

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_structure(cls, structure, field=RATIONAL, basis_labels=None,
                       complex_structure=None, validate=True, tol=DEFAULT_TOL):
        """Build from a dense rank-3 tensor c[i][j][k]; checks antisymmetry."""
        dim = len(structure)
        exact = is_exact(field)
        scale = 1.0
        if not exact:
            scale = max((abs(structure[i][j][k]) for i in range(dim)
                         for j in range(dim) for k in range(dim)), default=0.0)
            scale = max(scale, 1.0)
        brackets = {}
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    s = structure[i][j][k] + structure[j][i][k]
                    if (exact and s != 0) or (not exact and abs(s) > tol * scale):
                        raise InvariantViolationError(
                            f"structure constants not antisymmetric at ({i},{j},{k})")
        for i in range(dim):
            for j in range(i + 1, dim):
                coeffs = {k: structure[i][j][k] for k in range(dim) if structure[i][j][k]}
                if coeffs:
                    brackets[(i, j)] = coeffs
        return cls(dim, brackets, field, basis_labels, complex_structure, validate, tol)

    @property
    def structure(self):
        """Dense structure tensor c[i][j][k] as nested tuples."""
        if self._structure is None:
            zero = 0 if is_exact(self.field) else 0.0
            tens = []
            for i in range(self.dim):
                plane = []
                for j in range(self.dim):
                    row = [zero] * self.dim
                    for k, c in self._adj[i].get(j, {}).items():
                        row[k] = c
                    plane.append(tuple(row))
                tens.append(tuple(plane))
            self._structure = tuple(tens)
        return self._structure

    def pair_bracket(self, i, j):
        """Sparse [e_i, e_j] as a {k: coeff} dict."""
        return dict(self._adj[i].get(j, {}))

    def _compose(self, coeffs, l):
        """Sparse [sum_m coeffs[m] e_m, e_l]."""
        out = {}
        for m, cm in coeffs.items():
            row = self._adj[m].get(l)
            if row:
                for k, v in row.items():
                    out[k] = out.get(k, 0) + cm * v
        return {k: v for k, v in out.items() if v}

    def _validate_jacobi(self):
        exact = is_exact(self.field)
        scale = 1.0
        if not exact:
            scale = max((abs(c) for d in self._pairs.values() for c in d.values()),
                        default=0.0)
            scale = max(scale, 1.0)
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                cij = self._adj[i].get(j)
                for l in range(j + 1, self.dim):
                    acc = {}
                    for coeffs, tail in ((cij, l),
                                         (self._adj[j].get(l), i),
                                         (self._adj[l].get(i), j)):
                        if not coeffs:
                            continue
                        for k, v in self._compose(coeffs, tail).items():
                            acc[k] = acc.get(k, 0) + v
                    for k, v in acc.items():
                        if (exact and v != 0) or (not exact and abs(v) > self.tol * scale):
                            raise InvariantViolationError(
                                f"Jacobi identity fails on basis triple ({i},{j},{l})")

    # -- conversions ----------------------------------------------------------

    def to_float(self):
        """Copy of this algebra over the real-float field."""
        brackets = {pair: {k: scalar_to_float(c) for k, c in d.items()}
                    for pair, d in self._pairs.items()}
        cs = None
        if self.complex_structure is not None:
            cs = [[scalar_to_float(x) for x in row] for row in self.complex_structure]
        return LieAlgebra(self.dim, brackets, REAL_FLOAT, self.basis_labels,
                          cs, validate=False, tol=self.tol)

    @property
    def exact(self):
        return is_exact(self.field)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field!r})"


class Subspace:
    """A subspace of the coordinate space of an ambient algebra."""

    def __init__(self, parent_dim, basis, field=RATIONAL, tol=DEFAULT_TOL):
        self.parent_dim = parent_dim
        self.field = field
        self.tol = tol
        self.basis = [check_vector(parent_dim, field, v) for v in basis]
        exact = is_exact(field)
        self._rref, self._pivots = linalg.rref(self.basis, exact, tol) if self.basis else ([], [])
        if len(self._rref) != len(self.basis):
            raise PreconditionError("subspace basis vectors are linearly dependent")

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        v = check_vector(self.parent_dim, self.field, v)
        return linalg.in_span(self._rref, self._pivots, v, is_exact(self.field), self.tol)

    def _solver(self):
        # invert the pivot-column block of the basis once; solving then costs
        # one small mat-vec plus a full verification pass
        if not hasattr(self, "_solve_block"):
            block = [[row[p] for p in self._pivots] for row in self.basis]
            self._solve_block = linalg.inverse(
                linalg.transpose(block), is_exact(self.field), self.tol)
        return self._solve_block

    def coords(self, v):
        """Coefficients of v over this basis, or None if v is outside."""
        v = check_vector(self.parent_dim, self.field, v)
        exact = is_exact(self.field)
        if self.dim == 0:
            return [] if linalg.vec_is_zero(v, exact, self.tol) else None
        solve = self._solver()
        x = linalg.mat_vec(solve, [v[p] for p in self._pivots])
        scale = 1.0 if exact else max(max((abs(t) for t in v), default=0.0), 1.0)
        for c in range(self.parent_dim):
            acc = 0 if exact else 0.0
            for j in range(self.dim):
                if x[j]:
                    acc = acc + x[j] * self.basis[j][c]
            d = acc - v[c]
            if (exact and d != 0) or (not exact and abs(d) > self.tol * scale):
                return None
        return x

    def canonical(self):
        """Same subspace with the reduced-row-echelon basis."""
        return Subspace(self.parent_dim, self._rref, self.field, self.tol)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.parent_dim == other.parent_dim
                and linalg.mat_equal(self._rref or [[]], other._rref or [[]],
                                     is_exact(self.field), self.tol))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.parent_dim})"


class BilinearForm:
    """A symmetric or antisymmetric bilinear form given by its Gram matrix."""

    def __init__(self, matrix, symmetry, field=RATIONAL, tol=DEFAULT_TOL):
        if symmetry not in ("symmetric", "antisymmetric"):
            raise ValueError(f"unknown symmetry tag {symmetry!r}")
        self.matrix = [list(row) for row in matrix]
        self.symmetry = symmetry
        self.field = field
        self.tol = tol
        n = len(self.matrix)
        for row in self.matrix:
            if len(row) != n:
                raise DimensionError("form matrix must be square")
        sgn = 1 if symmetry == "symmetric" else -1
        exact = is_exact(field)
        scale = 1.0 if exact else max(linalg.mat_max_abs(self.matrix), 1.0)
        for i in range(n):
            for j in range(n):
                d = self.matrix[i][j] - sgn * self.matrix[j][i]
                if (exact and d != 0) or (not exact and abs(d) > tol * scale):
                    raise InvariantViolationError(
                        f"matrix does not match declared {symmetry} symmetry")

    @property
    def dim(self):
        return len(self.matrix)

    def __call__(self, u, v):
        return linalg.bilin(self.matrix, u, v)

    def rank(self):
        return linalg.rank(self.matrix, is_exact(self.field), self.tol)

    def signature(self):
        if self.symmetry != "symmetric":
            raise PreconditionError("signature requires a symmetric form")
        return linalg.symmetric_signature(self.matrix, is_exact(self.field), self.tol)

    def __repr__(self):
        return f"BilinearForm({self.symmetry}, dim={self.dim})"


# -- operations ---------------------------------------------------------------


def bracket(L, x, y):
    """[x, y] for coordinate vectors x, y."""
    x = check_vector(L.dim, L.field, x)
    y = check_vector(L.dim, L.field, y)
    out = [0 if L.exact else 0.0] * L.dim
    for i, xi in enumerate(x):
        if not xi:
            continue
        adj_i = L._adj[i]
        for j, yj in enumerate(y):
            if not yj or j == i:
                continue
            row = adj_i.get(j)
            if row:
                f = xi * yj
                for k, c in row.items():
                    out[k] = out[k] + f * c
    return out


def ad_matrix(L, x):
    """Matrix of ad_x = [x, .] in the basis of L (columns are [x, e_j])."""
    x = check_vector(L.dim, L.field, x)
    cols = []
    for j in range(L.dim):
        col = [0 if L.exact else 0.0] * L.dim
        for i, xi in enumerate(x):
            if not xi or i == j:
                continue
            row = L._adj[i].get(j)
            if row:
                for k, c in row.items():
                    col[k] = col[k] + xi * c
        cols.append(col)
    return linalg.transpose(cols)


def killing_form(L):
    """Killing form B(x, y) = trace(ad_x ad_y) as a symmetric BilinearForm."""
    if L._killing is not None:
        return L._killing
    zero = 0 if L.exact else 0.0
    n = L.dim
    mat = [[zero] * n for _ in range(n)]
    for i in range(n):
        adj_i = L._adj[i]
        for j in range(i, n):
            adj_j = L._adj[j]
            acc = zero
            for a, row in adj_i.items():
                for b, c in row.items():
                    back = adj_j.get(b)
                    if back:
                        ca = back.get(a)
                        if ca:
                            acc = acc + c * ca
            mat[i][j] = acc
            mat[j][i] = acc
    L._killing = BilinearForm(mat, "symmetric", L.field, L.tol)
    return L._killing


def center(L):
    """Center {x : [x, y] = 0 for all y} as a canonical Subspace."""
    rows = {}
    for i in range(L.dim):
        for j, coeffs in L._adj[i].items():
            for k, c in coeffs.items():
                rows.setdefault((j, k), {})[i] = c
    if not rows:
        return Subspace(L.dim, linalg.identity(L.dim, L.exact), L.field, L.tol)
    dense = []
    for key in sorted(rows):
        row = [0 if L.exact else 0.0] * L.dim
        for i, c in rows[key].items():
            row[i] = c
        dense.append(row)
    basis = linalg.kernel_basis(dense, L.exact, L.tol)
    return Subspace(L.dim, basis, L.field, L.tol)


def subalgebra_restriction(L, S):
    """Structure constants of L expressed in the basis of a closed subspace."""
    if S.parent_dim != L.dim:
        raise DimensionError("subspace does not live in the given algebra")
    k = S.dim
    brackets = {}
    for a in range(k):
        for b in range(a + 1, k):
            w = bracket(L, S.basis[a], S.basis[b])
            coords = S.coords(w)
            if coords is None:
                raise NotClosedError(
                    f"[v{a + 1}, v{b + 1}] leaves the subspace; not a subalgebra")
            coeffs = {m: c for m, c in enumerate(coords) if c}
            if coeffs:
                brackets[(a, b)] = coeffs
    labels = []
    for idx, v in enumerate(S.basis):
        support = [i for i, x in enumerate(v) if x]
        if len(support) == 1 and v[support[0]] in (1, -1, 1.0, -1.0):
            sign = "" if v[support[0]] in (1, 1.0) else "-"
            labels.append(sign + L.basis_labels[support[0]])
        else:
            labels.append(f"v{idx + 1}")
    return LieAlgebra(k, brackets, L.field, labels, validate=False, tol=L.tol)


def change_basis(L, vectors):
    """L expressed in a new full basis (a special case of restriction)."""
    S = Subspace(L.dim, vectors, L.field, L.tol)
    if S.dim != L.dim:
        raise DimensionError("change of basis needs a full basis")
    return subalgebra_restriction(L, S)


def is_semisimple(L):
    """Cartan's criterion: the Killing form has full rank."""
    if L._semisimple is None:
        L._semisimple = killing_form(L).rank() == L.dim
    return L._semisimple


def is_ideal(L, S):
    """True iff [L, S] is contained in S."""
    if S.parent_dim != L.dim:
        raise DimensionError("subspace does not live in the given algebra")
    for j in range(L.dim):
        for v in S.basis:
            w = bracket(L, [1 if i == j else 0 for i in range(L.dim)] if L.exact
                        else [1.0 if i == j else 0.0 for i in range(L.dim)], v)
            if not S.contains(w):
                return False
    return True


def restriction_of_form(F, S):
    """Gram matrix of a form on the basis of a subspace."""
    if F.dim != S.parent_dim:
        raise DimensionError("form and subspace dimensions differ")
    gram = [[F(u, v) for v in S.basis] for u in S.basis]
    return BilinearForm(gram, F.symmetry, F.field, F.tol)


def direct_sum(algebras, labels=None):
    """Direct sum with block-concatenated bases."""
    if not algebras:
        raise DimensionError("need at least one summand")
    field = algebras[0].field
    for a in algebras:
        if a.field != field:
            raise FieldError("all summands must share one field marker")
    dim = sum(a.dim for a in algebras)
    brackets = {}
    base = 0
    out_labels = []
    for idx, a in enumerate(algebras):
        for (i, j), coeffs in a._pairs.items():
            brackets[(base + i, base + j)] = {base + k: c for k, c in coeffs.items()}
        tag = labels[idx] if labels else f"@{idx + 1}"
        out_labels.extend(f"{lbl}{tag}" for lbl in a.basis_labels)
        base += a.dim
    return LieAlgebra(dim, brackets, field, out_labels, validate=False,
                      tol=algebras[0].tol)


def ideal_closure(L, vectors):
    """Smallest ideal containing the span of the given vectors."""
    exact = L.exact
    rows = linalg.row_space(vectors, exact, L.tol)
    queue = list(rows)
    red, piv = linalg.rref(rows, exact, L.tol) if rows else ([], [])
    while queue:
        v = queue.pop()
        for j in range(L.dim):
            w = bracket(L, v, [1 if i == j else 0 for i in range(L.dim)] if exact
                        else [1.0 if i == j else 0.0 for i in range(L.dim)])
            rem = linalg.reduce_vector(red, piv, w, exact, L.tol)
            if not linalg.vec_is_zero(rem, exact, L.tol,
                                      1.0 if exact else max(linalg.mat_max_abs([w]), 1.0)):
                red, piv = linalg.rref(red + [rem], exact, L.tol)
                queue.append(rem)
    return Subspace(L.dim, red, L.field, L.tol)


# -- simplicity ---------------------------------------------------------------


class _Echelon:
    """Incremental forward echelon over a fixed number of columns."""

    def __init__(self, ncols, exact=True, tol=DEFAULT_TOL):
        self.ncols = ncols
        self.exact = exact
        self.tol = tol
        self.rows = []  # (vector with pivot normalized to 1, pivot column)

    def _pivot_of(self, v, scale):
        if self.exact:
            return next((i for i, x in enumerate(v) if x != 0), None)
        best, bestval = None, self.tol * scale
        for i, x in enumerate(v):
            if abs(x) > bestval:
                best, bestval = i, abs(x)
        return best

    def reduce(self, v):
        """Remainder of v against the current rows."""
        w = list(v)
        for rvec, p in self.rows:
            f = w[p]
            if f:
                w = [x - f * y for x, y in zip(w, rvec)]
        return w

    def add(self, v):
        """Insert v; returns True if it increased the rank."""
        w = self.reduce(v)
        scale = 1.0 if self.exact else max(max((abs(x) for x in v), default=0.0), 1.0)
        p = self._pivot_of(w, scale)
        if p is None:
            return False
        piv = w[p]
        if isinstance(piv, int):
            piv = Fraction(piv)
        w = [x / piv for x in w]
        self.rows.append((w, p))
        return True

    @property
    def rank(self):
        return len(self.rows)

    def kernel(self):
        return linalg.kernel_basis([r for r, _ in self.rows], self.exact, self.tol) \
            if self.rows else linalg.identity(self.ncols, self.exact)


def _centroid_data(L):
    """Ideal generated by e_1, and the centroid via word parametrization.

    A centroid element phi (a linear map commuting with every ad_x) is
    determined by w = phi(e_1) as soon as the ideal generated by e_1 is the
    whole algebra: phi(A e_1) = A w for every product A of adjoint maps.
    Walking the ad-orbit of e_1 therefore yields, for every linear dependence
    among orbit vectors, a batch of linear constraints on w.

    Returns ``("ideal", subspace)`` when e_1 generates a proper ideal, else
    ``("centroid", word_vectors, word_ops, solutions)`` with ``solutions`` a
    basis for the admissible w.
    """
    n = L.dim
    exact = L.exact
    one = 1 if exact else 1.0
    zero = 0 if exact else 0.0
    e0 = [one if i == 0 else zero for i in range(n)]

    ad_sparse = []  # ad(e_j) as {col: {row: coeff}}
    for j in range(n):
        ad_sparse.append({i: L._adj[j].get(i, {}) for i in range(n) if L._adj[j].get(i)})

    def apply_ad(j, vec):
        out = [zero] * n
        cols = ad_sparse[j]
        for i, xi in enumerate(vec):
            if xi:
                col = cols.get(i)
                if col:
                    for k, c in col.items():
                        out[k] = out[k] + xi * c
        return out

    def apply_ad_mat(j, mat):
        return [apply_ad_row(j, mat, r) for r in range(n)]

    def apply_ad_row(j, mat, r):
        # row r of AD_j @ mat: sum over i of (AD_j)[r][i] * mat[i]
        out = [zero] * n
        for i, col in ad_sparse[j].items():
            c = col.get(r)
            if c:
                mi = mat[i]
                for t in range(n):
                    if mi[t]:
                        out[t] = out[t] + c * mi[t]
        return out

    words = [(e0, linalg.identity(n, exact))]
    span = _Echelon(n, exact, L.tol)
    span.add(e0)
    # track expressions of echelon rows over word indices alongside
    expr_rows = [{0: one}]

    constraints = _Echelon(n, exact, L.tol)
    queue = [0]
    qpos = 0
    while qpos < len(queue):
        widx = queue[qpos]
        qpos += 1
        wvec, wop = words[widx]
        for j in range(n):
            cand = apply_ad(j, wvec)
            if linalg.vec_is_zero(cand, exact, L.tol,
                                  1.0 if exact else max(linalg.mat_max_abs([wvec]), 1.0)):
                continue
            # reduce with dependency tracking
            v = list(cand)
            gamma = {}
            for (rvec, p), expr in zip(span.rows, expr_rows):
                f = v[p]
                if f:
                    v = [x - f * y for x, y in zip(v, rvec)]
                    for t, c in expr.items():
                        gamma[t] = gamma.get(t, 0) + f * c
            scale = 1.0 if exact else max(max((abs(x) for x in cand), default=0.0), 1.0)
            p = span._pivot_of(v, scale)
            cand_op = apply_ad_mat(j, wop)
            if p is not None:
                piv = v[p]
                if isinstance(piv, int):
                    piv = Fraction(piv)
                norm = [x / piv for x in v]
                span.rows.append((norm, p))
                new_expr = {t: -c / piv for t, c in gamma.items() if c}
                new_expr[len(words)] = 1 / piv
                expr_rows.append(new_expr)
                words.append((cand, cand_op))
                queue.append(len(words) - 1)
            else:
                # cand = sum gamma_t word_t: every row of the operator gap
                # constrains w
                for r in range(n):
                    row = list(cand_op[r])
                    for t, c in gamma.items():
                        if c:
                            op_t = words[t][1]
                            row = [x - c * y for x, y in zip(row, op_t[r])]
                    if not linalg.vec_is_zero(row, exact, L.tol,
                                              1.0 if exact else max(linalg.mat_max_abs([row]), 1.0)):
                        constraints.add(row)
                if len(words) == n and constraints.rank >= n - 1:
                    return ("centroid", words, [e0])
    if len(words) < n:
        return ("ideal", Subspace(L.dim, [r for r, _ in span.rows], L.field, L.tol))
    sols = constraints.kernel()
    return ("centroid", words, sols)


def _centroid_matrices(L, words, solutions):
    """Matrices of the centroid elements determined by each solution w."""
    n = L.dim
    u_cols = [wv for wv, _ in words[:n]]
    u_mat = linalg.transpose(u_cols)
    u_inv = linalg.inverse(u_mat, L.exact, L.tol)
    mats = []
    for w in solutions:
        v_cols = [linalg.mat_vec(op, w) for _, op in words[:n]]
        v_mat = linalg.transpose(v_cols)
        mats.append(linalg.mat_mul(v_mat, u_inv))
    return mats


def _min_poly(mat, exact=True, tol=DEFAULT_TOL):
    """Monic minimal polynomial coefficients [c0, .., c_{k-1}, 1]."""
    n = len(mat)
    powers = [linalg.identity(n, exact)]
    flat = [[x for row in powers[0] for x in row]]
    while True:
        nxt = linalg.mat_mul(powers[-1], mat)
        v = [x for row in nxt for x in row]
        coords = linalg.coords_in_basis(flat, v, exact, tol)
        if coords is not None:
            return [-c for c in coords] + [1]
        powers.append(nxt)
        flat.append(v)
        if len(powers) > n:
            raise InvariantViolationError("minimal polynomial search exceeded dimension")


def is_simple(L, _return_ideal=False):
    """Semisimple with no proper nonzero ideal.

    Uses the centroid of the adjoint module: a one-dimensional centroid
    certifies simplicity outright; otherwise rational eigenvalues of centroid
    elements split off verified proper ideals (realified complex algebras
    have a field centroid with no rational eigenvalues and stay simple).
    """
    if not is_semisimple(L):
        return (False, None) if _return_ideal else False
    data = _centroid_data(L)
    if data[0] == "ideal":
        return (False, data[1]) if _return_ideal else False
    _, words, sols = data
    if len(sols) <= 1:
        return (True, None) if _return_ideal else True
    mats = _centroid_matrices(L, words, sols)
    candidates = list(mats)
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            candidates.append(linalg.mat_add(mats[a], mats[b]))
            candidates.append(linalg.mat_sub(mats[a], mats[b]))
            candidates.append(linalg.mat_mul(mats[a], mats[b]))
    ident = linalg.identity(L.dim, L.exact)
    for cand in candidates:
        if not L.exact:
            break  # float centroids are not used for simplicity verdicts
        coeffs = _min_poly(cand, L.exact, L.tol)
        for lam in linalg.rational_roots(coeffs):
            shifted = linalg.mat_sub(cand, linalg.mat_scale(ident, lam))
            ker = linalg.kernel_basis(shifted, L.exact, L.tol)
            if 0 < len(ker) < L.dim:
                S = Subspace(L.dim, ker, L.field, L.tol)
                if is_ideal(L, S):
                    return (False, S) if _return_ideal else False
    return (True, None) if _return_ideal else True
