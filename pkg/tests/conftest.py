import pytest

import ksympair as K


@pytest.fixture(scope="session")
def su2():
    return K.build_su(2)


@pytest.fixture(scope="session")
def su3():
    return K.build_su(3)


@pytest.fixture(scope="session")
def su4():
    return K.build_su(4)


@pytest.fixture(scope="session")
def sp2():
    return K.build_sp(2)


@pytest.fixture(scope="session")
def so5():
    return K.build_so(5)


@pytest.fixture(scope="session")
def sl2r():
    return K.build_sl_real(2)


@pytest.fixture(scope="session")
def su3_torus_pair(su3):
    """su(3) with the order-3 inner automorphism fixing the full torus."""
    nu = K.inner_automorphism_from_torus(su3, K.TorusWeights((0, 1, 2), 3))
    return su3.algebra, nu


@pytest.fixture(scope="session")
def su2_sphere_pair(su2):
    """su(2) with the order-2 inner automorphism (the sphere pair)."""
    nu = K.inner_automorphism_from_torus(su2, K.TorusWeights((0, 1), 2))
    return su2.algebra, nu


@pytest.fixture(scope="session")
def cyclic3_pair(su2):
    """Three copies of su(2) with the cyclic permutation, order 3."""
    return K.permutation_automorphism([su2] * 3, 3)


@pytest.fixture(scope="session")
def cyclic2_pair(su2):
    """Two copies of su(2) with the swap, order 2."""
    return K.permutation_automorphism([su2] * 2, 2)


@pytest.fixture(scope="session")
def sp2_pair(sp2):
    """sp(2) with the order-3 torus automorphism, h = u(1) + sp(1)."""
    nu = K.inner_automorphism_from_torus(sp2, K.TorusWeights((1, 0), 3))
    return sp2.algebra, nu
