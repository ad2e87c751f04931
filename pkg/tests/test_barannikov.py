import pytest
from hypothesis import given, strategies as st

from jetlink.barannikov import (
    NotSquareZero,
    NotStrictlyUpperTriangular,
    PreconditionViolated,
    all_complexes,
    as_matrix,
    b_tau,
    brute_force_taus,
    degrees_respected,
    homology_rank,
    inverse_unit_upper,
    matmul,
    pairing,
    swap_allows_same,
    swap_check,
    unit_upper_matrices,
    verify_pairing,
)


def test_small_pairing():
    D = as_matrix([[0, 1, 1], [0, 0, 0], [0, 0, 0]])
    pr = pairing(D)
    assert pr.tau == (1, 0, 2)
    assert verify_pairing(D, pr)
    assert pr.pairs() == [(0, 1)]
    assert pr.fixed() == [2]


def test_zero_and_empty():
    assert pairing(as_matrix([[0, 0], [0, 0]])).tau == (0, 1)
    assert pairing(()).tau == ()


def test_input_validation():
    with pytest.raises(NotStrictlyUpperTriangular):
        pairing([[1, 0], [0, 0]])
    with pytest.raises(NotStrictlyUpperTriangular):
        pairing([[0, 1, 0], [0, 0, 1]])
    with pytest.raises(NotSquareZero):
        pairing([[0, 1, 0], [0, 0, 1], [0, 0, 0]])


def test_b_tau_is_its_own_normal_form():
    for tau in [(1, 0, 3, 2), (3, 2, 1, 0), (0, 2, 1, 3)]:
        assert pairing(b_tau(tau)).tau == tau


def test_inverse():
    for P in unit_upper_matrices(3):
        assert matmul(P, inverse_unit_upper(P)) == tuple(tuple(int(i == j) for j in range(3)) for i in range(3))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_uniqueness_and_homology(n):
    for D in all_complexes(n):
        pr = pairing(D)
        assert brute_force_taus(D) == {pr.tau}
        assert homology_rank(D) == len(pr.fixed())


def _conj_complexes():
    # random square-zero complexes: conjugate a B_tau by a unit upper matrix
    taus = st.integers(2, 7).flatmap(
        lambda n: st.permutations(range(n)).map(lambda perm: _involution_from(perm))
    )
    return taus


def _involution_from(perm):
    tau = list(range(len(perm)))
    for a, b in zip(perm[::2], perm[1::2]):
        if (a + b) % 3:
            tau[a], tau[b] = b, a
    return tuple(tau)


@given(_conj_complexes(), st.randoms(use_true_random=False))
def test_conjugated_normal_forms_recover_tau(tau, rnd):
    n = len(tau)
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            P[i][j] = rnd.randint(0, 1)
    P = as_matrix(P)
    D = matmul(matmul(inverse_unit_upper(P), b_tau(tau)), P)
    assert pairing(D).tau == tau


def test_swap_check():
    D = as_matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    res = swap_check(D, 1)
    assert res["tau"] == (2, 1, 0)
    assert res["tau_prime"] == (0, 2, 1)
    assert res["relation"] == "conjugate" and res["allowed"]
    with pytest.raises(PreconditionViolated):
        swap_check(as_matrix([[0, 1], [0, 0]]), 1)
    with pytest.raises(PreconditionViolated):
        swap_check(D, 3)


def test_swap_outcomes_lie_in_the_allowed_set():
    for n in range(2, 5):
        for D in all_complexes(n):
            for k in range(1, n):
                if not D[k - 1][k]:
                    assert swap_check(D, k)["allowed"]


def test_same_tau_cases():
    assert swap_allows_same((3, 2, 1, 0), 3)  # nested
    assert swap_allows_same((1, 0, 3, 2), 2)  # disjoint
    assert swap_allows_same((0, 1), 1)  # both fixed
    assert not swap_allows_same((2, 3, 0, 1), 2)  # interlaced


def test_degree_labels():
    D = as_matrix([[0, 1], [0, 0]])
    assert degrees_respected(D, [1, 0])
    assert not degrees_respected(D, [0, 0])
    assert degrees_respected(D, [0, 1], p=2)
