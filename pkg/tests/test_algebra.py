from fractions import Fraction

import pytest

import ksympair as K
from ksympair import linalg
from ksympair.algebra import BilinearForm, LieAlgebra, Subspace


def _unit(n, j):
    return [1 if i == j else 0 for i in range(n)]


def abelian(n):
    return LieAlgebra(n, {})


# -- bracket ------------------------------------------------------------------


def test_su2_bracket_matches_matrix_commutators(su2):
    """Independent oracle: commutators of the Pauli-derived 2x2 matrices."""
    mats = {
        0: [[0, 1], [-1, 0]],          # X12
        1: [[0, 1j], [1j, 0]],         # Y12
        2: [[1j, 0], [0, -1j]],        # H1
    }
    L = su2.algebra
    flat = [[m[r][c] for r in range(2) for c in range(2)] for m in
            (mats[0], mats[1], mats[2])]

    def express(m):
        target = [m[r][c] for r in range(2) for c in range(2)]
        rows = [[complex(x) for x in row] for row in flat]
        sol = linalg.solve(linalg.transpose(rows), target, exact=False, tol=1e-12)
        return sol

    for i in range(3):
        for j in range(3):
            a, b = mats[i], mats[j]
            comm = [[sum(a[r][k] * b[k][c] - b[r][k] * a[k][c] for k in range(2))
                     for c in range(2)] for r in range(2)]
            expected = express(comm)
            got = K.bracket(L, _unit(3, i), _unit(3, j))
            for x, y in zip(expected, got):
                assert abs(x - complex(y)) < 1e-9


def test_bracket_antisymmetry_and_bilinearity(su3):
    L = su3.algebra
    x = [1, 2, 0, -1, 0, 3, 1, 1]
    assert K.bracket(L, x, x) == [0] * 8
    assert K.bracket(L, _unit(8, 0), [0] * 8) == [0] * 8
    y = [0, 1, 1, 0, 2, 0, 0, -1]
    left = K.bracket(L, x, y)
    right = [-v for v in K.bracket(L, y, x)]
    assert left == right


def test_bracket_input_validation(su2):
    with pytest.raises(K.DimensionError):
        K.bracket(su2.algebra, [1, 0], [0, 1, 0])
    with pytest.raises(K.FieldError):
        K.bracket(su2.algebra, [1.5, 0.0, 0.0], [0, 1, 0])


# -- killing form ---------------------------------------------------------------


def test_killing_su2_diagonal(su2):
    b = K.killing_form(su2.algebra)
    assert b.matrix == [[-8, 0, 0], [0, -8, 0], [0, 0, -8]]


def test_killing_su_n_is_2n_times_trace_form(su2, su3):
    # oracle B(X, Y) = 2n tr(XY) for the defining representation of su(n)
    from ksympair.catalog import _cmul

    for entry, n in ((su2, 2), (su3, 3)):
        b = K.killing_form(entry.algebra)
        for i, mi in enumerate(entry.mats):
            for j, mj in enumerate(entry.mats):
                re, im = _cmul(mi, mj)
                tr = sum(re[t][t] for t in range(len(re)))
                assert b.matrix[i][j] == 2 * n * tr


def test_killing_abelian_zero():
    b = K.killing_form(abelian(1))
    assert b.matrix == [[0]]


def test_killing_su3_negative_definite(su3):
    assert K.killing_form(su3.algebra).signature() == (0, 8, 0)


def test_killing_ad_invariance(su3):
    L = su3.algebra
    b = K.killing_form(L)
    for i in range(L.dim):
        for j in range(L.dim):
            for k in range(L.dim):
                lhs = b(K.bracket(L, _unit(8, i), _unit(8, j)), _unit(8, k))
                rhs = b(_unit(8, i), K.bracket(L, _unit(8, j), _unit(8, k)))
                assert lhs == rhs


def test_killing_block_diagonal_on_sums(su2):
    total = K.direct_sum([su2.algebra, su2.algebra])
    b = K.killing_form(total)
    for i in range(3):
        for j in range(3, 6):
            assert b.matrix[i][j] == 0
    assert [row[:3] for row in b.matrix[:3]] == K.killing_form(su2.algebra).matrix


# -- center ---------------------------------------------------------------------


def test_center_simple_is_zero(su2):
    assert K.center(su2.algebra).dim == 0


def test_center_of_u1_plus_su2(su2):
    total = K.direct_sum([abelian(1), su2.algebra])
    c = K.center(total)
    assert c.dim == 1
    assert c.basis[0] == [1, 0, 0, 0]


def test_center_abelian_everything():
    assert K.center(abelian(3)).dim == 3


# -- subalgebra restriction -------------------------------------------------------


def test_cartan_restriction_is_abelian(su3):
    L = su3.algebra
    cartan = Subspace(8, [_unit(8, 6), _unit(8, 7)])
    h = K.subalgebra_restriction(L, cartan)
    assert h.dim == 2
    assert h._pairs == {}
    assert h.basis_labels == ["H1", "H2"]


def test_full_restriction_is_identity(su2):
    L = su2.algebra
    full = Subspace(3, [_unit(3, i) for i in range(3)])
    again = K.subalgebra_restriction(L, full)
    assert again.structure == L.structure


def test_restriction_not_closed(su2):
    L = su2.algebra  # [H1, X12] = 2 Y12 leaves span{H1, X12}
    s = Subspace(3, [_unit(3, 2), _unit(3, 0)])
    with pytest.raises(K.NotClosedError):
        K.subalgebra_restriction(L, s)


# -- semisimplicity, ideals, simplicity -------------------------------------------


def test_is_semisimple(su2, su3):
    assert K.is_semisimple(su3.algebra)
    assert not K.is_semisimple(abelian(2))
    assert K.is_semisimple(K.direct_sum([su2.algebra, su2.algebra]))


def test_is_ideal(su2, su3):
    total = K.direct_sum([su2.algebra, su2.algebra])
    first = Subspace(6, [_unit(6, i) for i in range(3)])
    assert K.is_ideal(total, first)
    cartan = Subspace(8, [_unit(8, 6), _unit(8, 7)])
    assert not K.is_ideal(su3.algebra, cartan)
    assert K.is_ideal(su2.algebra, Subspace(3, []))


def test_is_simple(su2, su3, su4):
    assert su2.simple and su3.simple and su4.simple
    assert K.is_simple(su3.algebra)
    assert not K.is_simple(K.direct_sum([su2.algebra, su2.algebra]))
    assert not K.is_simple(abelian(2))
    assert not K.build_so(4).simple
    # realified complex simple algebra: centroid is a field, still simple
    assert K.is_simple(K.complexify(su2.algebra))


def test_ideal_closure(su2):
    total = K.direct_sum([su2.algebra, su2.algebra])
    closure = K.ideal_closure(total, [_unit(6, 0)])
    assert closure.dim == 3
    assert K.is_ideal(total, closure)


# -- form restriction --------------------------------------------------------------


def test_restrict_killing_to_cartan(su3):
    b = K.killing_form(su3.algebra)
    cartan = Subspace(8, [_unit(8, 6), _unit(8, 7)])
    r = K.restriction_of_form(b, cartan)
    assert r.dim == 2
    assert r.signature() == (0, 2, 0)


def test_restriction_change_of_basis_oracle(su3):
    """Restriction Gram must match the block of the rebased Killing matrix."""
    L = su3.algebra
    vecs = [_unit(8, 6), _unit(8, 7)]
    complement = [_unit(8, i) for i in range(6)]
    rebased = K.change_basis(L, vecs + complement)
    full = K.killing_form(rebased).matrix
    direct = K.restriction_of_form(K.killing_form(L), Subspace(8, vecs)).matrix
    assert [row[:2] for row in full[:2]] == direct


def test_restrict_to_zero_subspace(su2):
    r = K.restriction_of_form(K.killing_form(su2.algebra), Subspace(3, []))
    assert r.matrix == []


def test_restriction_dimension_mismatch(su2, su3):
    with pytest.raises(K.DimensionError):
        K.restriction_of_form(K.killing_form(su3.algebra), Subspace(3, [_unit(3, 0)]))


# -- types ---------------------------------------------------------------------------


def test_structure_tensor_antisymmetry(su3):
    c = su3.algebra.structure
    n = len(c)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert c[i][j][k] == -c[j][i][k]


def test_from_structure_round_trip(su2):
    L = su2.algebra
    rebuilt = LieAlgebra.from_structure(L.structure, basis_labels=L.basis_labels)
    assert rebuilt.structure == L.structure


def test_from_structure_rejects_non_antisymmetric():
    c = [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]
    with pytest.raises(K.InvariantViolationError):
        LieAlgebra.from_structure(c)


def test_jacobi_validation_failure():
    # [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = -e3 for this table
    bad = {(0, 1): {2: 1}, (0, 2): {0: 1}}
    with pytest.raises(K.InvariantViolationError):
        LieAlgebra(3, bad)


def test_subspace_validation():
    with pytest.raises(K.PreconditionError):
        Subspace(2, [[1, 0], [2, 0]])
    with pytest.raises(K.DimensionError):
        Subspace(2, [[1, 0, 0]])
    s = Subspace(3, [[1, 1, 0], [0, 1, 0]])
    assert s.contains([3, 5, 0])
    assert not s.contains([0, 0, 1])
    assert s.coords([1, 3, 0]) == [Fraction(1), Fraction(2)]
    assert s.canonical() == s


def test_bilinear_form_symmetry_validation():
    with pytest.raises(K.InvariantViolationError):
        BilinearForm([[0, 1], [1, 0]], "antisymmetric")
    f = BilinearForm([[0, 1], [-1, 0]], "antisymmetric")
    assert f([1, 0], [0, 1]) == 1


def test_field_marker_enforced():
    with pytest.raises(K.FieldError):
        LieAlgebra(2, {(0, 1): {0: 0.5}})  # float scalar under exact marker
    fl = LieAlgebra(2, {(0, 1): {0: 0.5}}, field=K.REAL_FLOAT)
    with pytest.raises(K.FieldError):
        K.bracket(fl, [Fraction(1, 2), 0], [0, 1])


def test_to_float_preserves_structure(su2):
    fl = su2.algebra.to_float()
    assert fl.field == K.REAL_FLOAT
    assert fl.structure[0][1][2] == pytest.approx(
        float(su2.algebra.structure[0][1][2]))


def test_semisimple_implies_trivial_center(su2, su3, sp2):
    for entry in (su2, su3, sp2):
        assert K.is_semisimple(entry.algebra)
        assert K.center(entry.algebra).dim == 0


def test_complex_float_marker(su2):
    src = su2.algebra
    brackets = {pair: {k: complex(v) for k, v in d.items()}
                for pair, d in src._pairs.items()}
    lc = LieAlgebra(3, brackets, field=K.COMPLEX_FLOAT)
    out = K.bracket(lc, [1 + 0j, 0j, 0j], [0j, 1 + 0j, 0j])
    assert out == [0j, 0j, (2 + 0j)]
    b = K.killing_form(lc)
    assert abs(b.matrix[0][0] - (-8 + 0j)) < 1e-9
    assert b.rank() == 3
    with pytest.raises(K.FieldError):
        K.bracket(lc, [Fraction(1), 0, 0], [0, 1, 0])
