import pytest

import ksympair as K
from ksympair import linalg
from ksympair.algebra import Subspace
from ksympair.automorphisms import fitting_decomposition
from ksympair.real_forms import (
    complexified_automorphism,
    complexify,
    dual_real_form,
    embed_in_complexification,
    is_compact_form,
    make_involution_split,
    transfer_injective_element,
)
from ksympair.symplectic import center_of_h, find_injective_element


def _unit(n, j):
    return [1 if i == j else 0 for i in range(n)]


# -- compactness -------------------------------------------------------------


def test_compactness(su2, su3, sl2r):
    assert is_compact_form(su3.algebra)
    assert not is_compact_form(sl2r.algebra)
    assert is_compact_form(K.direct_sum([su2.algebra, su2.algebra]))
    with pytest.raises(K.NotSemisimpleError):
        is_compact_form(K.LieAlgebra(2, {}))


def test_sl2r_signature(sl2r):
    assert K.killing_form(sl2r.algebra).signature() == (2, 1, 0)


# -- involution splits ----------------------------------------------------------


def test_su3_diag_split(su3, su3_torus_pair):
    _, nu = su3_torus_pair
    sigma = su3.standard_involutions["diag1"]
    split = make_involution_split(su3.algebra, nu, sigma.matrix)
    assert (split.plus_space.dim, split.minus_space.dim) == (4, 4)
    assert split.commutes_with_nu
    assert split.refined_dims() == (2, 0, 2, 4)


def test_identity_sigma_rejected(su3, su3_torus_pair):
    _, nu = su3_torus_pair
    with pytest.raises(K.WrongOrderError):
        make_involution_split(su3.algebra, nu, linalg.identity(8))


def test_non_commuting_split(su3, su3_torus_pair):
    # complex conjugation inverts an order-3 inner torus, it never commutes
    _, nu = su3_torus_pair
    sigma = su3.standard_involutions["conjugation"]
    split = make_involution_split(su3.algebra, nu, sigma.matrix)
    assert not split.commutes_with_nu
    assert split.refined_dims() is None


def test_split_without_nu(su3):
    sigma = su3.standard_involutions["diag1"]
    split = make_involution_split(su3.algebra, None, sigma.matrix)
    assert not split.commutes_with_nu
    assert split.plus_space.dim == 4


# -- duality ------------------------------------------------------------------------


def test_dual_of_su3_is_su21(su3, su3_torus_pair):
    _, nu = su3_torus_pair
    split = make_involution_split(su3.algebra, nu,
                                  su3.standard_involutions["diag1"].matrix)
    rc = dual_real_form(split)
    assert K.killing_form(rc.dual).signature() == (4, 4, 0)
    assert rc.dual_nu is not None and rc.dual_nu.order == 3


def test_su21_compact_part_restriction(su3, su3_torus_pair):
    # ambient Killing of the dual restricted to the g^sigma block is the
    # negative-definite form of the maximal compact subalgebra
    _, nu = su3_torus_pair
    split = make_involution_split(su3.algebra, nu,
                                  su3.standard_involutions["diag1"].matrix)
    rc = dual_real_form(split)
    compact_block = Subspace(8, [_unit(8, i) for i in range(rc.plus_dim)])
    r = K.restriction_of_form(K.killing_form(rc.dual), compact_block)
    assert r.signature() == (0, 4, 0)


def test_dual_of_su2_is_sl2r(su2):
    nu = K.inner_automorphism_from_torus(su2, K.TorusWeights((0, 1), 3))
    split = make_involution_split(su2.algebra, nu,
                                  su2.standard_involutions["diag1"].matrix)
    rc = dual_real_form(split)
    assert K.killing_form(rc.dual).signature() == (2, 1, 0)


def test_dual_labels_mark_rotated_basis(su2):
    split = make_involution_split(su2.algebra, None,
                                  su2.standard_involutions["diag1"].matrix)
    rc = dual_real_form(split)
    assert any(lbl.startswith("i*") for lbl in rc.dual.basis_labels)


def test_dual_twice_restores_structure(su2, su3, su3_torus_pair):
    _, nu3 = su3_torus_pair
    cases = [(su3.algebra, nu3, su3.standard_involutions["diag1"].matrix)]
    nu2 = K.inner_automorphism_from_torus(su2, K.TorusWeights((0, 1), 3))
    cases.append((su2.algebra, nu2, su2.standard_involutions["diag1"].matrix))
    for L, nu, sigma in cases:
        split = make_involution_split(L, nu, sigma)
        rc = dual_real_form(split)
        split2 = make_involution_split(rc.dual, rc.dual_nu,
                                       rc.dual_involution_matrix())
        rc2 = dual_real_form(split2)
        adapted = K.change_basis(L, split.plus_space.basis + split.minus_space.basis)
        assert rc2.dual.structure == adapted.structure


def test_dual_requires_semisimple():
    flat = K.LieAlgebra(2, {})
    sigma = [[1, 0], [0, -1]]
    split = make_involution_split(flat, None, sigma)
    with pytest.raises(K.NotSemisimpleError):
        dual_real_form(split)


def test_dual_killing_orthogonality_persists(su3, su3_torus_pair):
    # h and m_A stay B-orthogonal after transport to the dual
    _, nu = su3_torus_pair
    split = make_involution_split(su3.algebra, nu,
                                  su3.standard_involutions["diag1"].matrix)
    rc = dual_real_form(split)
    d = fitting_decomposition(rc.dual_nu)
    b = K.killing_form(rc.dual)
    for hv in d.h.basis:
        for mv in d.m.basis:
            assert b(hv, mv) == 0


# -- complexification ------------------------------------------------------------------


def test_complexify_su2(su2):
    lc = complexify(su2.algebra)
    assert lc.dim == 6
    assert K.killing_form(lc).signature() == (3, 3, 0)
    assert lc.complex_structure is not None
    j = lc.complex_structure
    assert linalg.mat_equal(linalg.mat_mul(j, j),
                            linalg.mat_scale(linalg.identity(6), -1))


def test_complexify_multiplication_by_i_is_bilinear(su2):
    lc = complexify(su2.algebra)
    j = lc.complex_structure
    for a in range(6):
        for b in range(6):
            lhs = K.bracket(lc, linalg.mat_vec(j, _unit(6, a)), _unit(6, b))
            rhs = linalg.mat_vec(j, K.bracket(lc, _unit(6, a), _unit(6, b)))
            assert lhs == rhs


def test_complexify_abelian():
    lc = complexify(K.LieAlgebra(1, {}))
    assert lc.dim == 2
    assert lc._pairs == {}


def test_complexify_su3(su3):
    lc = complexify(su3.algebra)
    assert lc.dim == 16
    assert K.killing_form(lc).signature() == (8, 8, 0)


def test_complexified_pair_keeps_injectivity(su2_sphere_pair):
    L, nu = su2_sphere_pair
    d = fitting_decomposition(nu)
    z = find_injective_element(d).found
    lc = complexify(L)
    nuc = complexified_automorphism(lc, nu)
    dc = fitting_decomposition(nuc)
    zc = embed_in_complexification(z)
    assert center_of_h(dc).contains(zc)
    from ksympair.symplectic import ad_restricted_to_m

    mat = ad_restricted_to_m(dc, zc)
    assert linalg.rank(mat) == dc.m.dim


# -- transfer of injective elements ------------------------------------------------------


def test_transfer_sp2(sp2, sp2_pair):
    L, nu = sp2_pair
    d = fitting_decomposition(nu)
    z = find_injective_element(d).found
    split = make_involution_split(L, nu, sp2.standard_involutions["diag1"].matrix)
    rc = dual_real_form(split)
    moved = transfer_injective_element(rc, d, z)
    assert moved is not None


def test_transfer_fixed_z_equals_image(sp2, sp2_pair):
    # sigma fixes the diagonal center element, so the transfer is the
    # identity on coordinates after the basis change
    L, nu = sp2_pair
    d = fitting_decomposition(nu)
    z = find_injective_element(d).found
    split = make_involution_split(L, nu, sp2.standard_involutions["diag1"].matrix)
    rc = dual_real_form(split)
    assert linalg.mat_equal([split.sigma(z)], [z])
    moved = transfer_injective_element(rc, d, z)
    inv = linalg.inverse(rc.basis_matrix)
    assert moved == linalg.mat_vec(inv, z)


def test_transfer_odd_component_branch(su2, su2_sphere_pair):
    # Ad of the Weyl element maps H -> -H: sigma(Z) = -Z, the odd part carries
    L, nu = su2_sphere_pair
    d = fitting_decomposition(nu)
    z = find_injective_element(d).found
    weyl = [[1, 0, 0], [0, -1, 0], [0, 0, -1]]  # X -> X, Y -> -Y, H -> -H
    split = make_involution_split(L, nu, weyl)
    assert split.commutes_with_nu
    rc = dual_real_form(split)
    assert linalg.mat_equal([split.sigma(z)], [[-x for x in z]])
    moved = transfer_injective_element(rc, d, z)
    assert moved is not None


def test_transfer_report_mode_dim2(su3, su3_torus_pair):
    # center of h is 2-dimensional: outside the lemma hypothesis, the
    # component selection still runs and reports its outcome
    L, nu = su3_torus_pair
    d = fitting_decomposition(nu)
    z = find_injective_element(d).found
    split = make_involution_split(L, nu, su3.standard_involutions["diag1"].matrix)
    rc = dual_real_form(split)
    assert center_of_h(d).dim == 2
    moved = transfer_injective_element(rc, d, z)
    assert moved is not None


def test_transfer_preconditions(sp2, sp2_pair, su3, su3_torus_pair):
    L, nu = sp2_pair
    d = fitting_decomposition(nu)
    split = make_involution_split(L, nu, sp2.standard_involutions["diag1"].matrix)
    rc = dual_real_form(split)
    with pytest.raises(K.PreconditionError):
        transfer_injective_element(rc, d, [0] * L.dim)  # not injective
    # non-commuting sigma gives no dual_nu, transfer refuses
    L3, nu3 = su3_torus_pair
    split3 = make_involution_split(L3, nu3,
                                   su3.standard_involutions["conjugation"].matrix)
    rc3 = dual_real_form(split3)
    d3 = fitting_decomposition(nu3)
    z3 = find_injective_element(d3).found
    with pytest.raises(K.PreconditionError):
        transfer_injective_element(rc3, d3, z3)


def test_dual_signature_bookkeeping(su4, sp2, so5):
    # compact source: the dual Killing form has dim(minus) positive and
    # dim(plus) negative directions
    for entry in (su4, sp2, so5):
        assert is_compact_form(entry.algebra)
        for name, inv in entry.standard_involutions.items():
            split = make_involution_split(entry.algebra, None, inv.matrix)
            rc = dual_real_form(split)
            pos, neg, zero = K.killing_form(rc.dual).signature()
            assert (pos, neg, zero) == (
                split.minus_space.dim, split.plus_space.dim, 0), (entry.name, name)
