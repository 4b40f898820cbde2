"""Classical simple Lie algebras over exact rationals, with their standard
finite-order automorphisms and the small-rank classification-table harness.

Each family is realized by explicit matrices (anti-Hermitian for the compact
forms), structure constants are extracted exactly, and inner automorphisms
come from conjugation by torus elements.  For orders 2, 3, 4 and 6 the
rotation entries live in Q(sqrt 3) and everything stays exact; other orders
fall back to floats.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import linalg
from .algebra import LieAlgebra, direct_sum, is_simple
from .automorphisms import FiniteOrderAutomorphism, make_automorphism
from .exceptions import (
    DimensionError,
    InvariantViolationError,
    OutOfRangeError,
    PreconditionError,
    WrongOrderError,
)
from .real_forms import dual_real_form, make_involution_split
from .scalars import EXACT_ROOT_ORDERS, RATIONAL, root_of_unity, scalar_to_float

# -- exact complex matrices as (re, im) pairs; im may be None when real ------


def _rzeros(n):
    return [[0] * n for _ in range(n)]


def _cm(re, im=None):
    return (re, im)


def _cmul(a, b):
    are, aim = a
    bre, bim = b
    re = linalg.mat_mul(are, bre)
    if aim is not None and bim is not None:
        re = linalg.mat_sub(re, linalg.mat_mul(aim, bim))
    im = None
    parts = []
    if aim is not None:
        parts.append(linalg.mat_mul(aim, bre))
    if bim is not None:
        parts.append(linalg.mat_mul(are, bim))
    if parts:
        im = parts[0]
        if len(parts) == 2:
            im = linalg.mat_add(parts[0], parts[1])
    return (re, im)


def _csub(a, b):
    are, aim = a
    bre, bim = b
    re = linalg.mat_sub(are, bre)
    if aim is None and bim is None:
        im = None
    else:
        n = len(are)
        aim = aim if aim is not None else _rzeros(n)
        bim = bim if bim is not None else _rzeros(n)
        im = linalg.mat_sub(aim, bim)
    return (re, im)


def _ccommutator(a, b):
    return _csub(_cmul(a, b), _cmul(b, a))


def _cconj(a):
    re, im = a
    return (re, linalg.mat_scale(im, -1) if im is not None else None)


def _cflatten(a, size):
    re, im = a
    flat = [x for row in re for x in row]
    if im is None:
        flat += [0] * (size * size)
    else:
        flat += [x for row in im for x in row]
    return flat


def _cfloat(a, size):
    re, im = a
    ref = [[scalar_to_float(x) for x in row] for row in re]
    imf = [[scalar_to_float(x) for x in row] for row in im] if im is not None \
        else [[0.0] * size for _ in range(size)]
    return (ref, imf)


class _MatrixBasis:
    """Expresses matrices exactly over a fixed independent matrix basis."""

    def __init__(self, mats, size):
        self.mats = mats
        self.size = size
        self.k = len(mats)
        self.rows = [_cflatten(m, size) for m in mats]
        red, piv = linalg.rref(self.rows, True)
        if len(red) != self.k:
            raise InvariantViolationError("matrix basis is linearly dependent")
        self.pivots = piv[: self.k]
        pivot_block = [[row[p] for p in self.pivots] for row in self.rows]
        self._solve = linalg.inverse(linalg.transpose(pivot_block), True)
        self._float_rows = None

    def coords(self, mat):
        """Exact coefficients of ``mat`` over the basis, or None."""
        t = _cflatten(mat, self.size)
        tp = [t[p] for p in self.pivots]
        x = linalg.mat_vec(self._solve, tp)
        # verify on all coordinates, not only the pivots
        for c in range(len(t)):
            acc = 0
            for j in range(self.k):
                if x[j]:
                    acc = acc + x[j] * self.rows[j][c]
            if acc != t[c]:
                return None
        return x

    def coords_float(self, mat, tol):
        if self._float_rows is None:
            self._float_rows = [[scalar_to_float(x) for x in row] for row in self.rows]
        t = _cflatten(mat, self.size)
        t = [scalar_to_float(x) for x in t]
        sol = linalg.solve(linalg.transpose(self._float_rows), t, False, tol)
        return sol


def _structure_from_matrix_basis(mats, labels, size):
    basis = _MatrixBasis(mats, size)
    k = len(mats)
    brackets = {}
    for i in range(k):
        for j in range(i + 1, k):
            comm = _ccommutator(mats[i], mats[j])
            coords = basis.coords(comm)
            if coords is None:
                raise InvariantViolationError("matrix basis is not bracket-closed")
            entry = {t: c for t, c in enumerate(coords) if c}
            if entry:
                brackets[(i, j)] = entry
    return LieAlgebra(k, brackets, RATIONAL, labels, validate=True), basis


# -- matrix bases of the classical families ----------------------------------


def _su_matrices(n):
    mats, labels = [], []
    for j in range(n):
        for k in range(j + 1, n):
            re = _rzeros(n)
            re[j][k] = 1
            re[k][j] = -1
            mats.append(_cm(re))
            labels.append(f"X{j + 1}{k + 1}")
            im = _rzeros(n)
            im[j][k] = 1
            im[k][j] = 1
            mats.append(_cm(_rzeros(n), im))
            labels.append(f"Y{j + 1}{k + 1}")
    for j in range(n - 1):
        im = _rzeros(n)
        im[j][j] = 1
        im[j + 1][j + 1] = -1
        mats.append(_cm(_rzeros(n), im))
        labels.append(f"H{j + 1}")
    return mats, labels, n


def _so_matrices(n):
    mats, labels = [], []
    for j in range(n):
        for k in range(j + 1, n):
            re = _rzeros(n)
            re[j][k] = 1
            re[k][j] = -1
            mats.append(_cm(re))
            labels.append(f"L{j + 1}{k + 1}")
    return mats, labels, n


def _sp_matrices(n):
    """Compact sp(n) inside u(2n): blocks [[A, B], [-conj B, conj A]]."""
    m = 2 * n
    mats, labels = [], []
    for j in range(n):
        for k in range(j + 1, n):
            re = _rzeros(m)
            re[j][k] = 1
            re[k][j] = -1
            re[n + j][n + k] = 1
            re[n + k][n + j] = -1
            mats.append(_cm(re))
            labels.append(f"XA{j + 1}{k + 1}")
            im = _rzeros(m)
            im[j][k] = 1
            im[k][j] = 1
            im[n + j][n + k] = -1
            im[n + k][n + j] = -1
            mats.append(_cm(_rzeros(m), im))
            labels.append(f"YA{j + 1}{k + 1}")
    for j in range(n):
        im = _rzeros(m)
        im[j][j] = 1
        im[n + j][n + j] = -1
        mats.append(_cm(_rzeros(m), im))
        labels.append(f"D{j + 1}")
    for j in range(n):
        for k in range(j, n):
            re = _rzeros(m)
            re[j][n + k] = 1
            re[k][n + j] = 1
            re[n + j][k] = -1
            re[n + k][j] = -1
            mats.append(_cm(re))
            labels.append(f"U{j + 1}{k + 1}")
            im = _rzeros(m)
            im[j][n + k] = 1
            im[k][n + j] = 1
            im[n + j][k] = 1
            im[n + k][j] = 1
            mats.append(_cm(_rzeros(m), im))
            labels.append(f"V{j + 1}{k + 1}")
    return mats, labels, m


def _sl_matrices(n):
    mats, labels = [], []
    for j in range(n):
        for k in range(n):
            if j == k:
                continue
            re = _rzeros(n)
            re[j][k] = 1
            mats.append(_cm(re))
            labels.append(f"E{j + 1}{k + 1}")
    for j in range(n - 1):
        re = _rzeros(n)
        re[j][j] = 1
        re[j + 1][j + 1] = -1
        mats.append(_cm(re))
        labels.append(f"H{j + 1}")
    return mats, labels, n


# -- catalog entries -----------------------------------------------------------


@dataclass
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    standard_involutions: dict
    table_row: Optional[str]
    simple: bool
    family: str
    n: int
    mats: Optional[list] = None
    basis: Optional[_MatrixBasis] = None


class TorusWeights(NamedTuple):
    """Integer weights of a torus element, one per diagonal slot (complex
    families) or per rotation plane (real families), and the intended order."""

    weights: tuple
    order: int


_CACHE = {}


def _matrix_map_to_algebra_matrix(entry, fn):
    """Algebra-level matrix of a map given on the defining matrices."""
    cols = []
    for m in entry.mats:
        image = fn(m)
        coords = entry.basis.coords(image)
        if coords is None:
            raise InvariantViolationError("matrix map does not preserve the algebra")
        cols.append(coords)
    return linalg.transpose(cols)


def _conj_by_unit_diag(mat, phases):
    """t M t^{-1} for t = diag of unit complex numbers given as (cos, sin)."""
    re, im = mat
    n = len(re)
    out_re = _rzeros(n)
    out_im = _rzeros(n)
    any_im = False
    for j in range(n):
        cj, sj = phases[j]
        for k in range(n):
            a = re[j][k]
            b = im[j][k] if im is not None else 0
            if not a and not b:
                continue
            ck, sk = phases[k]
            # factor = phase_j * conj(phase_k)
            fc = cj * ck + sj * sk
            fs = sj * ck - cj * sk
            out_re[j][k] = a * fc - b * fs
            out_im[j][k] = a * fs + b * fc
            if out_im[j][k]:
                any_im = True
    return (out_re, out_im if any_im else None)


def _conj_by_real(mat, t, t_inv):
    re, im = mat
    out_re = linalg.mat_mul(t, linalg.mat_mul(re, t_inv))
    out_im = linalg.mat_mul(t, linalg.mat_mul(im, t_inv)) if im is not None else None
    return (out_re, out_im)


def _sign_diag(size, minus_slots):
    t = linalg.identity(size, True)
    for s in minus_slots:
        t[s][s] = -1
    return t


def _block_rotation(size, exact_pairs):
    """Orthogonal matrix with 2x2 rotation blocks and a trailing 1 if odd."""
    t = linalg.identity(size, True)
    for b, (c, s) in enumerate(exact_pairs):
        t[2 * b][2 * b] = c
        t[2 * b][2 * b + 1] = -s
        t[2 * b + 1][2 * b] = s
        t[2 * b + 1][2 * b + 1] = c
    return t


def _quaternionic_j(n):
    j = _rzeros(n)
    for b in range(n // 2):
        j[2 * b][2 * b + 1] = -1
        j[2 * b + 1][2 * b] = 1
    return j


def _build_involutions(entry):
    """Named order-2 automorphisms: diagonal signatures plus the family's
    special involutions (complex conjugation, quaternionic twist, u(n))."""
    invs = {}
    fam, n = entry.family, entry.n
    if fam == "su":
        for p in range(1, n // 2 + 1):
            phases = [(-1 if j < p else 1, 0) for j in range(n)]
            mat = _matrix_map_to_algebra_matrix(
                entry, lambda m, ph=phases: _conj_by_unit_diag(m, ph))
            invs[f"diag{p}"] = make_automorphism(entry.algebra, mat, 2)
        mat = _matrix_map_to_algebra_matrix(entry, _cconj)
        invs["conjugation"] = make_automorphism(entry.algebra, mat, 2)
        if n >= 4 and n % 2 == 0:
            jm = _quaternionic_j(n)
            jt = linalg.transpose(jm)
            mat = _matrix_map_to_algebra_matrix(
                entry, lambda m: _conj_by_real(_cconj(m), jm, jt))
            invs["quaternionic"] = make_automorphism(entry.algebra, mat, 2)
    elif fam == "so":
        for p in range(1, n // 2 + 1):
            t = _sign_diag(n, range(n - p, n))
            mat = _matrix_map_to_algebra_matrix(
                entry, lambda m, tt=t: _conj_by_real(m, tt, tt))
            invs[f"diag{p}"] = make_automorphism(entry.algebra, mat, 2)
    elif fam == "sp":
        for p in range(1, n // 2 + 1):
            slots = list(range(p)) + list(range(n, n + p))
            t = _sign_diag(2 * n, slots)
            mat = _matrix_map_to_algebra_matrix(
                entry, lambda m, tt=t: _conj_by_real(m, tt, tt))
            invs[f"diag{p}"] = make_automorphism(entry.algebra, mat, 2)
        phases = [(0, 1)] * n + [(0, -1)] * n
        mat = _matrix_map_to_algebra_matrix(
            entry, lambda m: _conj_by_unit_diag(m, phases))
        invs["u(n)"] = make_automorphism(entry.algebra, mat, 2)
    elif fam == "sl":
        def neg_transpose(m):
            re, im = m
            out_re = [[-re[j][i] for j in range(len(re))] for i in range(len(re))]
            out_im = None
            if im is not None:
                out_im = [[-im[j][i] for j in range(len(im))] for i in range(len(im))]
            return (out_re, out_im)

        mat = _matrix_map_to_algebra_matrix(entry, neg_transpose)
        invs["cartan"] = make_automorphism(entry.algebra, mat, 2)
    return invs


def _build_entry(family, n, builder):
    key = (family, n)
    if key in _CACHE:
        return _CACHE[key]
    mats, labels, size = builder(n)
    algebra, basis = _structure_from_matrix_basis(mats, labels, size)
    name = f"{family}{n}" + ("r" if family == "sl" else "")
    entry = CatalogEntry(name, algebra, {}, None, False, family, n, mats, basis)
    entry.simple = is_simple(algebra)
    entry.standard_involutions = _build_involutions(entry)
    _CACHE[key] = entry
    return entry


def build_su(n):
    if n < 2:
        raise OutOfRangeError("su(n) needs n >= 2")
    if n > 6:
        raise OutOfRangeError("su(n) capped at n = 6 at desk scale")
    return _build_entry("su", n, _su_matrices)


def build_so(n):
    if not 3 <= n <= 8:
        raise OutOfRangeError("so(n) supported for 3 <= n <= 8")
    return _build_entry("so", n, _so_matrices)


def build_sp(n):
    if not 1 <= n <= 3:
        raise OutOfRangeError("sp(n) supported for 1 <= n <= 3")
    return _build_entry("sp", n, _sp_matrices)


def build_sl_real(n):
    if not 2 <= n <= 4:
        raise OutOfRangeError("sl(n, R) supported for 2 <= n <= 4")
    return _build_entry("sl", n, _sl_matrices)


CATALOG_NAMES = ("su2", "su3", "su4", "so5", "so6", "so7", "so8",
                 "sp2", "sp3", "sl2r", "sl3r", "sl4r")


def get_entry(name):
    """Catalog entry by CLI name (su2..su4, so3..so8, sp1..sp3, sl2r..sl4r)."""
    name = name.strip().lower()
    for fam, fn in (("su", build_su), ("so", build_so), ("sp", build_sp)):
        if name.startswith(fam) and name[len(fam):].isdigit():
            return fn(int(name[len(fam):]))
    if name.startswith("sl") and name.endswith("r") and name[2:-1].isdigit():
        return build_sl_real(int(name[2:-1]))
    raise OutOfRangeError(f"unknown catalog algebra {name!r}")


# -- automorphisms from torus elements ----------------------------------------


def _expected_weight_count(family, n):
    if family in ("su", "sp"):
        return n
    return n // 2


def inner_automorphism_from_torus(entry, torus):
    """Ad of the diagonal/block torus element with the given weights.

    The true order of the induced automorphism (a divisor of the requested
    one) is what gets validated; an identity action is rejected.
    """
    w = tuple(int(x) for x in torus.weights)
    k = int(torus.order)
    if k < 1:
        raise OutOfRangeError("torus order must be positive")
    if k > 48:
        raise OutOfRangeError("torus order capped at 48")
    fam, n = entry.family, entry.n
    if len(w) != _expected_weight_count(fam, n):
        raise DimensionError(
            f"{fam}({n}) takes {_expected_weight_count(fam, n)} weights, got {len(w)}")
    exact = k in EXACT_ROOT_ORDERS
    algebra = entry.algebra if exact else entry.algebra.to_float()

    if fam in ("su", "sp"):
        exps = list(w) if fam == "su" else list(w) + [-x for x in w]
        phases = [root_of_unity(e, k) for e in exps]
        transform = lambda m: _conj_by_unit_diag(m, phases)
    else:
        pairs = [root_of_unity(b, k) for b in w]
        t = _block_rotation(entry.basis.size, pairs)
        if not exact:
            t = [[scalar_to_float(x) for x in row] for row in t]
        t_inv = linalg.transpose(t)
        transform = lambda m: _conj_by_real(m, t, t_inv)

    cols = []
    for m in entry.mats:
        mm = m if exact else _cfloat(m, entry.basis.size)
        image = transform(mm)
        if exact:
            coords = entry.basis.coords(image)
        else:
            coords = entry.basis.coords_float(image, algebra.tol)
        if coords is None:
            raise InvariantViolationError("torus conjugation left the algebra")
        cols.append(coords)
    ad = linalg.transpose(cols)

    # true order divides k
    power = linalg.identity(algebra.dim, algebra.exact)
    order = None
    for j in range(1, k + 1):
        power = linalg.mat_mul(power, ad)
        if _power_is_identity(power, algebra):
            order = j
            break
    if order is None:
        raise InvariantViolationError("torus automorphism order does not divide k")
    if order < 2:
        raise WrongOrderError("torus element acts as the identity", actual_order=1)
    return make_automorphism(algebra, ad, order)


def _power_is_identity(m, algebra):
    n = len(m)
    tol = 1e-8
    for i in range(n):
        for j in range(n):
            want = 1 if i == j else 0
            d = m[i][j] - want
            if (algebra.exact and d != 0) or (not algebra.exact and abs(d) > tol):
                return False
    return True


def permutation_automorphism(entries, cycle_length):
    """Direct sum of identical algebras with the cyclic block permutation."""
    if cycle_length < 2:
        raise WrongOrderError("a cyclic permutation pair needs k >= 2 copies")
    if len(entries) != cycle_length:
        raise DimensionError("number of copies must equal the cycle length")
    first = entries[0].algebra
    for e in entries[1:]:
        if e.algebra.structure != first.structure:
            raise PreconditionError("all summands must carry identical structure constants")
    total = direct_sum([e.algebra for e in entries])
    d = first.dim
    k = cycle_length
    exact = total.exact
    perm = linalg.zeros_mat(k * d, k * d, exact)
    one = 1 if exact else 1.0
    for c in range(k):
        dest = (c + 1) % k
        for i in range(d):
            perm[dest * d + i][c * d + i] = one
    nu = make_automorphism(total, perm, k)
    return total, nu


# -- table generation -----------------------------------------------------------


class TableRow(NamedTuple):
    entry: CatalogEntry
    nu: FiniteOrderAutomorphism
    expected_symplectic: bool


def _with_row(entry, desc):
    return dataclasses.replace(entry, table_row=desc)


def _table1_rows(max_rank):
    rows = []
    seen = set()

    def push(entry, weights, desc):
        # weights are canonical (sorted ascending), so equal tuples are the
        # only true duplicates; equal fixed-space dimensions do occur across
        # genuinely distinct rows (so(5) at a = 1, 2) and must be kept
        key = (entry.name, tuple(weights))
        if key in seen:
            return
        seen.add(key)
        nu = inner_automorphism_from_torus(entry, TorusWeights(weights, 3))
        rows.append(TableRow(_with_row(entry, desc), nu, True))

    for n in range(2, max_rank + 2):  # rank of su(n) is n - 1
        entry = build_su(n)
        for a in range(0, n // 3 + 1):
            for b in range(max(a, 1), n + 1):
                c = n - a - b
                if c < b:
                    continue
                weights = (0,) * a + (1,) * b + (2,) * c
                push(entry, weights,
                     f"SU({n})/Z{n} : S(U({a})xU({b})xU({c})), (a,b,c)=({a},{b},{c})")
    for r in range(1, max_rank + 1):  # rank of so(2r+1) is r
        entry = build_so(2 * r + 1)
        for a in range(1, r + 1):
            weights = (1,) * a + (0,) * (r - a)
            push(entry, weights,
                 f"SO({2 * r + 1}) : U({a})xSO({2 * (r - a) + 1}), a={a}")
    for n in range(2, min(3, max_rank) + 1):  # rank of sp(n) is n
        entry = build_sp(n)
        for a in range(1, n + 1):
            weights = (1,) * a + (0,) * (n - a)
            push(entry, weights,
                 f"Sp({n})/Z2 : U({a})xSp({n - a}), a={a}")
    for r in range(3, max_rank + 1):  # rank of so(2r) is r, table needs r >= 3
        entry = build_so(2 * r)
        for a in range(1, r + 1):
            weights = (1,) * a + (0,) * (r - a)
            push(entry, weights,
                 f"SO({2 * r})/Z2 : U({a})xSO({2 * (r - a)}), a={a}")
    return rows


def _dual_row(entry, nu, inv_name, inv, base_desc, prefix):
    from .algebra import killing_form

    split = make_involution_split(entry.algebra, nu, inv.matrix)
    if not split.commutes_with_nu:
        return None
    rc = dual_real_form(split)
    pos, neg, _ = killing_form(rc.dual).signature()
    desc = f"{prefix} dual of [{base_desc}] via {inv_name}; " \
           f"Killing signature ({pos},{neg})".strip()
    desc = desc.strip()
    dual_entry = CatalogEntry(
        name=f"{entry.name}*{inv_name}",
        algebra=rc.dual,
        standard_involutions={},
        table_row=desc,
        simple=entry.simple,
        family=entry.family,
        n=entry.n,
    )
    return TableRow(dual_entry, rc.dual_nu, True), rc


def _table2_rows(max_rank):
    rows = []
    for row in _table1_rows(max_rank):
        for inv_name, inv in row.entry.standard_involutions.items():
            made = _dual_row(row.entry, row.nu, inv_name, inv,
                             row.entry.table_row, "")
            if made is not None:
                rows.append(made[0])
    return rows


def _table3_rows(max_rank):
    rows = []
    for n in (2, 4):
        if n - 1 > max_rank:
            continue
        entry = build_sl_real(n)
        nu = inner_automorphism_from_torus(entry, TorusWeights((1,) * (n // 2), 3))
        desc = f"SL({n},R)/Z2 : SL({n // 2},C)xT1"
        rows.append(TableRow(_with_row(entry, desc), nu, True))
    if max_rank >= 3:
        su4 = build_su(4)
        nu = inner_automorphism_from_torus(su4, TorusWeights((0, 1, 2, 2), 3))
        inv = su4.standard_involutions["quaternionic"]
        made = _dual_row(su4, nu, "quaternionic", inv,
                         "SU(4)/Z4 : S(U(1)xU(1)xU(2))", "SL(2,H)/Z2 :")
        if made is None:
            raise InvariantViolationError(
                "quaternionic involution must commute with the (0,1,2,2) torus")
        rows.append(made[0])
        so6 = build_so(6)
        for a in (1, 2):
            nu = inner_automorphism_from_torus(
                so6, TorusWeights((1,) * a + (0,) * (3 - a), 3))
            for p in (1, 3):
                inv = so6.standard_involutions.get(f"diag{p}")
                if inv is None:
                    continue
                made = _dual_row(so6, nu, f"diag{p}", inv,
                                 f"SO(6)/Z2 : U({a})xSO({6 - 2 * a}), a={a}",
                                 f"SO({6 - p},{p})/Z2 outer :")
                if made is not None:
                    rows.append(made[0])
    return rows


def generate_table_rows(table, max_rank):
    """Rows of the small-rank classification tables, each expected symplectic."""
    if table not in (1, 2, 3):
        raise OutOfRangeError("table must be 1, 2 or 3")
    if not 1 <= max_rank <= 3:
        raise OutOfRangeError("max_rank must be between 1 and 3")
    if table == 1:
        return _table1_rows(max_rank)
    if table == 2:
        return _table2_rows(max_rank)
    return _table3_rows(max_rank)
