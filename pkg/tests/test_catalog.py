from fractions import Fraction

import pytest

import ksympair as K
from ksympair import linalg
from ksympair.catalog import CATALOG_NAMES, get_entry
from ksympair.scalars import QSqrt3


EXPECTED_DIMS = {
    "su2": 3, "su3": 8, "su4": 15,
    "so5": 10, "so6": 15, "so7": 21, "so8": 28,
    "sp2": 10, "sp3": 21,
    "sl2r": 3, "sl3r": 8, "sl4r": 15,
}


@pytest.mark.parametrize("name,dim", sorted(EXPECTED_DIMS.items()))
def test_catalog_dimensions(name, dim):
    entry = get_entry(name)
    assert entry.algebra.dim == dim
    assert entry.simple


def test_compact_series_negative_definite():
    for name in ("su2", "su3", "su4", "so5", "so6", "sp2"):
        entry = get_entry(name)
        pos, neg, zero = K.killing_form(entry.algebra).signature()
        assert (pos, neg, zero) == (0, entry.algebra.dim, 0), name


def test_sl_series_is_split():
    assert K.killing_form(get_entry("sl2r").algebra).signature() == (2, 1, 0)
    assert K.killing_form(get_entry("sl3r").algebra).signature() == (5, 3, 0)


def test_so4_flagged_non_simple():
    entry = K.build_so(4)
    assert not entry.simple
    assert K.is_semisimple(entry.algebra)


def test_sp2_matches_so5_profile():
    # both rank-2 compact forms of dimension 10
    a, b = get_entry("sp2").algebra, get_entry("so5").algebra
    assert a.dim == b.dim == 10
    assert K.killing_form(a).signature() == K.killing_form(b).signature()


def test_out_of_range_bounds():
    with pytest.raises(K.OutOfRangeError):
        K.build_su(1)
    with pytest.raises(K.OutOfRangeError):
        K.build_so(9)
    with pytest.raises(K.OutOfRangeError):
        K.build_sp(4)
    with pytest.raises(K.OutOfRangeError):
        K.build_sl_real(5)
    with pytest.raises(K.OutOfRangeError):
        get_entry("e8")


def test_involution_inventory():
    assert set(get_entry("su3").standard_involutions) == {"diag1", "conjugation"}
    assert set(get_entry("su4").standard_involutions) == {
        "diag1", "diag2", "conjugation", "quaternionic"}
    assert set(get_entry("sp2").standard_involutions) == {"diag1", "u(n)"}
    assert set(get_entry("so5").standard_involutions) == {"diag1", "diag2"}
    assert set(get_entry("sl3r").standard_involutions) == {"cartan"}


def test_sl_cartan_involution_fixes_so_n():
    entry = get_entry("sl3r")
    sigma = entry.standard_involutions["cartan"]
    fixed = linalg.kernel_basis(
        linalg.mat_sub(linalg.identity(8), sigma.matrix))
    assert len(fixed) == 3  # so(3) inside sl(3, R)


# -- torus automorphisms ----------------------------------------------------------


def test_su3_torus_orders():
    su3 = get_entry("su3")
    nu = K.inner_automorphism_from_torus(su3, K.TorusWeights((0, 1, 2), 3))
    assert nu.order == 3
    with pytest.raises(K.WrongOrderError):
        K.inner_automorphism_from_torus(su3, K.TorusWeights((0, 0, 0), 3))
    with pytest.raises(K.WrongOrderError):
        K.inner_automorphism_from_torus(su3, K.TorusWeights((1, 1, 1), 3))


def test_weight_count_validation():
    su3 = get_entry("su3")
    with pytest.raises(K.DimensionError):
        K.inner_automorphism_from_torus(su3, K.TorusWeights((0, 1), 3))
    so5 = get_entry("so5")
    with pytest.raises(K.DimensionError):
        K.inner_automorphism_from_torus(so5, K.TorusWeights((0, 1, 1), 3))


@pytest.mark.parametrize("name,weights,dim_h", [
    ("su3", (0, 1, 2), 2),   # S(U(1)^3): full torus
    ("su3", (0, 0, 1), 4),   # S(U(2)xU(1))
    ("su2", (0, 1), 1),      # the sphere pair at order 2
    ("so5", (1, 0), 4),      # U(1)xSO(3)
    ("so5", (1, 1), 4),      # U(2)
    ("sp2", (1, 0), 4),      # U(1)xSp(1)
])
def test_fixed_space_dimensions(name, weights, dim_h):
    entry = get_entry(name)
    order = 2 if name == "su2" else 3
    nu = K.inner_automorphism_from_torus(entry, K.TorusWeights(weights, order))
    d = K.fitting_decomposition(nu)
    assert d.h.dim == dim_h


def test_su_fixed_space_dimension_formula():
    """dim h = a^2 + b^2 + c^2 - 1 for weights grouped as (a, b, c)."""
    for n, parts in ((3, [(0, 1, 2), (1, 1, 1)]), (4, [(0, 1, 3), (0, 2, 2), (1, 1, 2)])):
        entry = get_entry(f"su{n}")
        for (a, b, c) in parts:
            weights = (0,) * a + (1,) * b + (2,) * c
            nu = K.inner_automorphism_from_torus(entry, K.TorusWeights(weights, 3))
            d = K.fitting_decomposition(nu)
            assert d.h.dim == a * a + b * b + c * c - 1, (n, a, b, c)


def test_order3_entries_are_exact():
    su3 = get_entry("su3")
    nu = K.inner_automorphism_from_torus(su3, K.TorusWeights((0, 1, 2), 3))
    assert nu.algebra.exact
    kinds = {type(x) for row in nu.matrix for x in row}
    assert kinds <= {int, Fraction, QSqrt3}
    assert any(isinstance(x, QSqrt3) and x.b != 0 for row in nu.matrix for x in row)


def test_order5_falls_back_to_floats():
    su2 = get_entry("su2")
    nu = K.inner_automorphism_from_torus(su2, K.TorusWeights((0, 1), 5))
    assert nu.order == 5
    assert nu.algebra.field == K.REAL_FLOAT
    v = K.symplectic_verdict(nu.algebra, nu)
    assert v.is_symplectic


def test_torus_order_divides_requested():
    # weights (0, 2) at k = 4 give an order-2 action
    su2 = get_entry("su2")
    nu = K.inner_automorphism_from_torus(su2, K.TorusWeights((0, 2), 4))
    assert nu.order == 2


# -- permutation fixtures -----------------------------------------------------------


def test_permutation_validation(su2, su3):
    with pytest.raises(K.WrongOrderError):
        K.permutation_automorphism([su2], 1)
    with pytest.raises(K.DimensionError):
        K.permutation_automorphism([su2] * 3, 2)
    with pytest.raises(K.PreconditionError):
        K.permutation_automorphism([su2, su3], 2)


def test_permutation_pair(cyclic3_pair):
    total, nu = cyclic3_pair
    assert total.dim == 9
    assert nu.order == 3
    assert K.is_semisimple(total)


# -- table generation ------------------------------------------------------------------


def test_table_bounds():
    with pytest.raises(K.OutOfRangeError):
        K.generate_table_rows(4, 2)
    with pytest.raises(K.OutOfRangeError):
        K.generate_table_rows(1, 4)
    with pytest.raises(K.OutOfRangeError):
        K.generate_table_rows(1, 0)


def test_table1_rank2_contents():
    rows = K.generate_table_rows(1, 2)
    names = [r.entry.name for r in rows]
    assert names.count("su3") == 2   # (0,1,2) and (1,1,1) partitions
    assert names.count("so5") == 2   # a = 1, 2
    assert names.count("sp2") == 2   # a = 1, 2
    assert all(r.expected_symplectic for r in rows)
    assert all(r.entry.table_row for r in rows)


def test_table1_rank1():
    rows = K.generate_table_rows(1, 1)
    assert {r.entry.name for r in rows} == {"su2", "so3"}


def test_table2_rank2_contains_su21():
    rows = K.generate_table_rows(2, 2)
    su3_duals = [r for r in rows if r.entry.name.startswith("su3*")]
    assert su3_duals
    for row in su3_duals:
        assert "signature (4,4)" in row.entry.table_row
    assert all(r.nu is not None for r in rows)


def test_table3_rank2_is_sl2_only():
    rows = K.generate_table_rows(3, 2)
    assert [r.entry.name for r in rows] == ["sl2r"]


def test_table3_rank3_has_quaternionic_dual():
    rows = K.generate_table_rows(3, 3)
    names = [r.entry.name for r in rows]
    assert "sl4r" in names
    assert "su4*quaternionic" in names


def test_catalog_names_resolve():
    for name in CATALOG_NAMES:
        entry = get_entry(name)
        assert entry.name == name


def test_float_su3_order5_pipeline():
    su3 = get_entry("su3")
    nu = K.inner_automorphism_from_torus(su3, K.TorusWeights((0, 1, 4), 5))
    assert nu.order == 5
    d = K.fitting_decomposition(nu)
    assert (d.h.dim, d.m.dim) == (2, 6)
    v = K.symplectic_verdict(nu.algebra, nu)
    assert v.is_symplectic and v.checks.all_pass()
