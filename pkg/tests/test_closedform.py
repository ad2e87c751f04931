import pytest
from hypothesis import given, settings, strategies as st

from jetlink.algebra import AZPoly, SkeinElement, ZPoly, coeff_a, partitions_of
from jetlink.closedform import (
    NotSharp,
    basic_product_ruling_poly,
    bracket,
    certificate_search_space,
    find_certificate,
    find_certificate_2graded,
    load_homfly_coefficients,
    psi,
    r2_switchless,
    recover_ruling_poly,
    sharpness,
    switchless_count,
    symmetric_matrices,
)
from jetlink.front import a_lambda, a_lambda_oriented, maslov_from_orientation, random_front, unknot
from jetlink.ruling import has_ruling, ruling_polynomial


def test_bracket_values():
    assert bracket(0) == ZPoly({-2: 1})
    assert bracket(1) == ZPoly({0: 1})
    assert bracket(2) == ZPoly({0: 2, 2: 1})
    assert bracket(3) == ZPoly({0: 3, 2: 4, 4: 1})
    with pytest.raises(ValueError):
        bracket(-1)


def test_symmetric_matrices():
    assert list(symmetric_matrices((2, 2))) == [{(0, 1): 2}]
    assert len(list(symmetric_matrices((1, 1, 1, 1)))) == 3
    assert list(symmetric_matrices((3,))) == []
    assert list(symmetric_matrices((2, 1, 1))) == [{(0, 1): 1, (0, 2): 1, (1, 2): 0}]


def test_prefactor_exponent():
    # one part: no matrices; two parts: the bracket itself
    assert basic_product_ruling_poly((4,)) == ZPoly()
    assert basic_product_ruling_poly(()) == ZPoly({0: 1})
    assert basic_product_ruling_poly((4, 4)) == bracket(4)
    assert basic_product_ruling_poly((2, 1, 1)) == ZPoly({1: 1})


@pytest.mark.parametrize("lam", [lam for n in range(1, 7) for lam in partitions_of(n)])
def test_closed_form_matches_enumeration(lam):
    assert basic_product_ruling_poly(lam) == ruling_polynomial(a_lambda(lam))


@pytest.mark.parametrize("lam", [(1, 1), (2, 2), (2, 2, 1, 1), (3, 3, 1, 1), (1, 1, 1, 1), (2, 1)])
def test_switchless_count_matches_enumeration(lam):
    # basic products have no cusps, so switchless rulings are the z^0 term
    assert ruling_polynomial(a_lambda(lam))[0] == switchless_count(lam)


def test_switchless_formula():
    assert switchless_count((1, 1)) == 1
    assert switchless_count((2, 2, 2, 2)) == 4 * 3
    assert switchless_count((3, 1)) == 0


def test_psi_and_recovery_on_unknot():
    F = SkeinElement.parse("1*a^1*z^-1 + -1*a^-1*z^-1 + 1")
    assert psi(F) == AZPoly.parse("1*a^1*z^-1 + -1*a^-1*z^-1 + 1")
    assert recover_ruling_poly(unknot()) == ZPoly({-1: 1})


def test_psi_replaces_basis_elements():
    F = SkeinElement.parse("1*a^-1*A_2*A_2 + 2*A_2*A_1*A_1")
    assert psi(F) == AZPoly.from_z(bracket(2), -1) + AZPoly.from_z(ZPoly({1: 2}))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_recovery_on_random_fronts(seed):
    d = random_front(seed, 7)
    assert recover_ruling_poly(d) == ruling_polynomial(d)


def test_sharpness_of_example_links(L1, L2):
    assert sharpness(*L1[:2]) == (True, (2, 1), 1, 1)
    assert sharpness(*L2[:2]) == (True, (), 2, 2)


def test_unsharp_front():
    d = a_lambda((2, 1))
    # A_2 A_1 is sharp via the certificate (2, 1)
    assert sharpness(d)[:2] == (True, (2, 1))
    for seed in range(200):
        front = random_front(seed, 8)
        sharp = sharpness(front)[0]
        assert sharp == has_ruling(front, generalized=True)


def test_certificate_search():
    assert find_certificate({(2, 1): ZPoly({0: 1})}) == (2, 1)
    assert find_certificate({(): ZPoly({0: 1})}) == ()
    with pytest.raises(NotSharp):
        find_certificate({})
    space = certificate_search_space({(2, 2, 1): 1})
    assert space[0] == ()
    assert (2, 2, 2, 1, 1, 1) in space
    assert all(max(lam, default=0) <= 2 for lam in space)


def test_two_graded_switchless():
    assert r2_switchless((2,), (2,)) == 2
    assert r2_switchless((1, 1), (1, 1)) == 2
    assert r2_switchless((2,), (1,)) == 0
    d, o = a_lambda_oriented((2,), (2,))
    assert ruling_polynomial(d, 2, maslov_from_orientation(d, o))[0] == r2_switchless((2,), (2,))


def test_two_graded_certificate():
    coeff = load_homfly_coefficients({"terms": [{"pos": [1], "neg": [], "poly": {"terms": [{"z": 0, "c": 1}]}}]})
    assert find_certificate_2graded(coeff) == ((), (1,))
    assert coeff_a(AZPoly.mono(-1, 2), -1) == ZPoly({2: 1})
