"""Dense linear algebra over exact scalars or floats.

Matrices are plain lists of lists.  Every routine takes an ``exact`` flag:
exact mode does field arithmetic with int/Fraction/QSqrt3 entries and decides
rank questions by literal zero tests; float mode pivots by magnitude and
treats entries below ``tol`` times the largest pivot candidate as zero.

Row-reduced echelon form is the canonical representative used for subspace
bases throughout the package, which keeps equality tests deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import DEFAULT_TOL, exact_sign


def _div(a, b):
    # int / int must not fall into float division
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _fabs(x):
    return abs(x)


def zeros_vec(n, exact=True):
    return [0 if exact else 0.0] * n


def zeros_mat(nrows, ncols, exact=True):
    z = 0 if exact else 0.0
    return [[z] * ncols for _ in range(nrows)]


def identity(n, exact=True):
    one = 1 if exact else 1.0
    m = zeros_mat(n, n, exact)
    for i in range(n):
        m[i][i] = one
    return m


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_vec(a, x):
    return [sum(row[j] * x[j] for j in range(len(x)) if x[j]) for row in a]


def mat_mul(a, b):
    # row-major accumulation skipping zero entries; catalog matrices are
    # sparse enough that this beats the dense triple loop by a wide margin
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * ncols
        for k, v in enumerate(row):
            if v:
                brow = b[k]
                for j, bv in enumerate(brow):
                    if bv:
                        acc[j] = acc[j] + v * bv
        out.append(acc)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    return [[s * x for x in row] for row in a]


def mat_pow(a, k):
    n = len(a)
    out = identity(n, exact=not isinstance(a[0][0], (float, complex)))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def vec_add(u, v):
    return [x + y for x, y in zip(u, v)]

def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]

def vec_scale(u, s):
    return [s * x for x in u]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def bilin(m, u, v):
    return dot(u, mat_vec(m, v))


def mat_max_abs(a):
    best = 0.0
    for row in a:
        for x in row:
            ax = abs(x)
            if ax > best:
                best = ax
    return best


def mat_equal(a, b, exact=True, tol=DEFAULT_TOL):
    if len(a) != len(b) or (a and len(a[0]) != len(b[0])):
        return False
    if exact:
        return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))
    scale = max(mat_max_abs(a), mat_max_abs(b), 1.0)
    return all(abs(x - y) <= tol * scale for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def vec_is_zero(v, exact=True, tol=DEFAULT_TOL, scale=1.0):
    if exact:
        return all(x == 0 for x in v)
    return all(abs(x) <= tol * scale for x in v)


def rref(rows, exact=True, tol=DEFAULT_TOL):
    """Reduced row echelon form.

    Returns ``(reduced_rows, pivot_cols)`` where ``reduced_rows`` holds only
    the nonzero rows, each normalized to a leading 1.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    scale = 1.0 if exact else max(mat_max_abs(m), 1.0)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        if exact:
            pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        else:
            pivot_row = max(range(r, nrows), key=lambda i: abs(m[i][c]))
            if abs(m[pivot_row][c]) <= tol * scale:
                pivot_row = None
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][c]
        m[r] = [_div(x, piv) for x in m[r]]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if (exact and f != 0) or (not exact and abs(f) > 0.0):
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a, exact=True, tol=DEFAULT_TOL):
    return len(rref(a, exact, tol)[1])


def reduce_vector(rref_rows, pivots, v, exact=True, tol=DEFAULT_TOL):
    """Remainder of v after elimination against an RREF basis."""
    w = list(v)
    for row, p in zip(rref_rows, pivots):
        f = w[p]
        if (exact and f != 0) or (not exact and abs(f) > 0.0):
            w = [x - f * y for x, y in zip(w, row)]
    return w


def in_span(rref_rows, pivots, v, exact=True, tol=DEFAULT_TOL):
    w = reduce_vector(rref_rows, pivots, v, exact, tol)
    scale = 1.0
    if not exact:
        scale = max(max((abs(x) for x in v), default=0.0), 1.0)
    return vec_is_zero(w, exact, tol, scale)


def kernel_basis(a, exact=True, tol=DEFAULT_TOL):
    """Canonical (RREF) basis of the null space of ``a``, as row vectors."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    red, pivots = rref(a, exact, tol)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = zeros_vec(ncols, exact)
        v[f] = 1 if exact else 1.0
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    if not basis:
        return []
    canon, _ = rref(basis, exact, tol)
    return canon


def row_space(rows, exact=True, tol=DEFAULT_TOL):
    """Canonical basis of the span of the given row vectors."""
    if not rows:
        return []
    red, _ = rref(rows, exact, tol)
    return red


def solve(a, b, exact=True, tol=DEFAULT_TOL):
    """One solution x of a x = b, or None if the system is inconsistent."""
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(aug, exact, tol)
    ncols = len(a[0]) if a else 0
    if ncols in pivots:
        return None
    x = zeros_vec(ncols, exact)
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return x


def coords_in_basis(basis_vectors, v, exact=True, tol=DEFAULT_TOL):
    """Coefficients expressing v over the given (row) basis, or None."""
    if not basis_vectors:
        return None if not vec_is_zero(v, exact, tol) else []
    at = transpose(basis_vectors)
    return solve(at, v, exact, tol)


def inverse(a, exact=True, tol=DEFAULT_TOL):
    n = len(a)
    aug = [list(row) + ident_row for row, ident_row in zip(a, identity(n, exact))]
    red, pivots = rref(aug, exact, tol)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def intersect_spans(u_rows, v_rows, exact=True, tol=DEFAULT_TOL):
    """Canonical basis of span(u) intersected with span(v)."""
    if not u_rows or not v_rows:
        return []
    nu, nv = len(u_rows), len(v_rows)
    ncols = len(u_rows[0])
    # alpha . u - beta . v = 0, unknowns (alpha, beta)
    sys_rows = []
    for c in range(ncols):
        sys_rows.append([u_rows[i][c] for i in range(nu)] + [-v_rows[j][c] for j in range(nv)])
    combos = kernel_basis(sys_rows, exact, tol)
    vectors = []
    for combo in combos:
        alpha = combo[:nu]
        vec = zeros_vec(ncols, exact)
        for coef, uvec in zip(alpha, u_rows):
            if coef:
                vec = [x + coef * y for x, y in zip(vec, uvec)]
        vectors.append(vec)
    nonzero = [v for v in vectors if not vec_is_zero(v, exact, tol)]
    return row_space(nonzero, exact, tol) if nonzero else []


def symmetric_signature(m, exact=True, tol=DEFAULT_TOL):
    """Signature (n_pos, n_neg, n_zero) of a symmetric matrix by congruence."""
    a = [list(row) for row in m]
    n = len(a)
    scale = 1.0 if exact else max(mat_max_abs(a), 1.0)

    def is_zero(x):
        return x == 0 if exact else abs(x) <= tol * scale

    pos = neg = 0
    for i in range(n):
        # choose a nonzero diagonal pivot, creating one if necessary
        piv = None
        if exact:
            piv = next((j for j in range(i, n) if a[j][j] != 0), None)
        else:
            piv = max(range(i, n), key=lambda j: abs(a[j][j]))
            if is_zero(a[piv][piv]):
                piv = None
        if piv is None:
            off = None
            for r in range(i, n):
                for c in range(r + 1, n):
                    if not is_zero(a[r][c]):
                        off = (r, c)
                        break
                if off:
                    break
            if off is None:
                break  # remaining block is zero
            r, c = off
            # row/col addition makes the (r, r) diagonal entry 2*a[r][c]
            for k in range(n):
                a[r][k] = a[r][k] + a[c][k]
            for k in range(n):
                a[k][r] = a[k][r] + a[k][c]
            piv = r
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            for row in a:
                row[i], row[piv] = row[piv], row[i]
        d = a[i][i]
        for j in range(i + 1, n):
            f = _div(a[j][i], d)
            if (exact and f == 0) or (not exact and is_zero(f)):
                continue
            for k in range(n):
                a[j][k] = a[j][k] - f * a[i][k]
            for k in range(n):
                a[k][j] = a[k][j] - f * a[k][i]
        s = exact_sign(d) if exact else (1 if d > 0 else -1)
        if s > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg, n - pos - neg


# -- small polynomial utilities (exact) --------------------------------------


def _divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def poly_eval(coeffs, x):
    """Evaluate a polynomial given by coefficients [c0, c1, ...] at x."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def rational_roots(coeffs):
    """All rational roots of a polynomial with Fraction coefficients."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    roots = []
    if coeffs[0] == 0:
        roots.append(Fraction(0))
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
    if len(coeffs) <= 1:
        return roots
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    a0, an = ints[0], ints[-1]
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and poly_eval(coeffs, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
