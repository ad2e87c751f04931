import pytest

from jetlink.algebra import ZPoly
from jetlink.front import Cross, FrontDiagram, LeftCusp, RightCusp, a_lambda, a_lambda_oriented, basic_front, maslov_from_orientation, unknot
from jetlink.ruling import (
    Ruling,
    RulingInvalid,
    TooManyStrands,
    certificate_has_ruling,
    decompose,
    enumerate_rulings,
    gnr_to_lambda,
    has_ruling,
    involution_from_json,
    involution_to_json,
    involutions,
    ruling_from_involutions,
    ruling_polynomial,
    switch_allowed,
    validate_ruling,
)


@pytest.mark.parametrize(
    "lam, poly",
    [
        ((2, 2), {0: 2, 2: 1}),
        ((2, 1, 1), {1: 1}),
        ((3, 2, 1), {1: 2, 3: 1}),
        ((2, 2, 1, 1), {0: 2, 2: 3}),
        ((3, 3), {0: 3, 2: 4, 4: 1}),
        ((5,), {}),
        ((2, 1), {}),
    ],
)
def test_ruling_polynomials_of_basic_products(lam, poly):
    assert ruling_polynomial(a_lambda(lam)) == ZPoly(poly)


def test_unknot_has_one_ruling():
    assert ruling_polynomial(unknot()) == ZPoly({-1: 1})


def test_two_switch_rulings_of_a5a5():
    rs = enumerate_rulings(a_lambda((5, 5)))
    assert sum(1 for r in rs if len(r.switches) == 2) == 20


def test_every_enumerated_ruling_validates():
    d = a_lambda((3, 2, 1))
    for gen in (False, True):
        for r in enumerate_rulings(d, generalized=gen):
            assert validate_ruling(d, r, generalized=gen)


def test_validator_rejects_broken_rulings():
    d = a_lambda((2, 2))
    r = enumerate_rulings(d)[0]
    with pytest.raises(RulingInvalid):
        validate_ruling(d, Ruling(r.rhos, r.switches + (0,)), generalized=False)
    with pytest.raises(RulingInvalid):
        validate_ruling(d, Ruling(((0, 1, 2, 3),) + r.rhos[1:], r.switches), generalized=False)
    with pytest.raises(RulingInvalid):
        validate_ruling(d, Ruling(r.rhos[:1], r.switches), generalized=False)


def test_generalized_rulings_allow_fixed_strands():
    assert not has_ruling(basic_front(1))
    assert has_ruling(basic_front(1), generalized=True)
    (r,) = enumerate_rulings(basic_front(1), generalized=True)
    assert r.has_fixed_points()


def test_normality_condition():
    # strands 2 and 3 swap, pairs (1,3),(2,4) are interlaced: not normal
    assert not switch_allowed((2, 3, 0, 1), 1, False)
    # nested and disjoint pairs may switch
    assert switch_allowed((3, 2, 1, 0), 2, False)
    assert switch_allowed((1, 0, 3, 2), 1, False)
    # a fixed strand next to a paired one only in generalized rulings
    assert not switch_allowed((0, 2, 1), 0, False)
    assert switch_allowed((0, 2, 1), 0, True)
    assert not switch_allowed((0, 1), 0, True)


def test_involutions():
    assert len(list(involutions(4, False))) == 3
    assert len(list(involutions(3, True))) == 4
    rho = (2, 1, 0, 3)
    assert involution_to_json(rho) == [[1, 3], [2], [4]]
    assert involution_from_json([[1, 3], [2], [4]]) == rho


def test_two_graded_rulings_use_the_orientation_potential():
    d, o = a_lambda_oriented((1,), (1,))
    mu = maslov_from_orientation(d, o)
    assert ruling_polynomial(d, p=2, mu=mu) == ZPoly({0: 1})
    same = a_lambda((1, 1))
    assert ruling_polynomial(same, p=2, mu=maslov_from_orientation(same)) == ZPoly()


def test_strand_limit():
    with pytest.raises(TooManyStrands):
        enumerate_rulings(a_lambda((9, 9)))


def test_ruling_from_involutions_reads_switches():
    d = a_lambda((2, 2))
    for r in enumerate_rulings(d):
        assert ruling_from_involutions(d, r.rhos, generalized=False).switches == r.switches


def test_decomposition_of_the_example_link(L1):
    d, o, _ = L1
    rs = enumerate_rulings(d, generalized=True)
    assert rs
    lams = {gnr_to_lambda(d, r)[0] for r in rs}
    assert lams == {(2, 1)}
    for r in rs:
        parts = decompose(d, r)
        fixed = [c for c in parts if c.partner is None]
        assert sorted(c.winding for c in fixed) == [1, 2]
        assert certificate_has_ruling(d, (2, 1), (), o)
    assert not certificate_has_ruling(d, (), (), o)


def test_json_shape():
    d = FrontDiagram(2, (LeftCusp(1), Cross(2), Cross(2), RightCusp(1)))
    for r in enumerate_rulings(d, generalized=True):
        js = r.to_json(d)
        assert set(js) == {"seed", "switches", "j"}
        assert all(1 <= s <= d.M for s in js["switches"])
    assert RightCusp(1).kind == "right_cusp"
