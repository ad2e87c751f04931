import random

import pytest
from hypothesis import given, settings, strategies as st

from jetlink.algebra import SkeinElement, a_degree, a_shift
from jetlink.front import a_lambda, a_lambda_oriented, product, random_front, tb, unknot, writhe
from jetlink.skein import (
    ASC,
    BudgetExceeded,
    Cap,
    Cup,
    DESC,
    SCross,
    SmoothDiagram,
    cap_slide,
    cup_slide,
    curl,
    from_front,
    kauffman_D,
    kauffman_F,
    loop_value,
    r2_pair,
    r3_sides,
    resolve,
    tb_upper_bound,
)

A = SkeinElement({((), 1, 0): 1})
Z = SkeinElement({((), 0, 1): 1})


def test_unknot_is_the_loop_value():
    assert kauffman_F(unknot()) == loop_value()
    assert kauffman_D(SmoothDiagram(0, (Cup(1), Cap(1)))) == loop_value()


def test_basic_products_are_basis_elements():
    for lam in [(1,), (3,), (2, 1), (2, 2), (3, 1, 1)]:
        d = a_lambda(lam)
        assert kauffman_D(from_front(d)) == SkeinElement.basis(lam)
        assert kauffman_F(d) == a_shift(SkeinElement.basis(lam), -writhe(d))


def test_reversed_factor_changes_only_the_writhe_normalization():
    d, o = a_lambda_oriented((2,), (1,))
    assert kauffman_F(d, o) == a_shift(SkeinElement.basis((2, 1)), -1)


def test_curls():
    a1 = SkeinElement.basis((1,))
    assert kauffman_D(SmoothDiagram(1, curl(1, True))) == A * a1
    assert kauffman_D(SmoothDiagram(1, curl(1, False))) == a_shift(a1, -1)


def test_disjoint_circle_multiplies_by_loop_value():
    d = SmoothDiagram(2, (SCross(1, ASC), Cup(3), Cap(3)))
    assert kauffman_D(d) == loop_value() * kauffman_D(SmoothDiagram(2, (SCross(1, ASC),)))


def test_skein_relation_at_a_crossing():
    rng = random.Random(11)
    checked = 0
    for seed in range(200):
        s = from_front(random_front(seed, 7))
        cross = [t for t, ev in enumerate(s.events) if ev.kind == "cross"]
        if not cross:
            continue
        t = rng.choice(cross)
        ev = s.events[t]
        pre, post = s.events[:t], s.events[t + 1 :]
        desc = SmoothDiagram(s.seam_strands, pre + (SCross(ev.k, DESC),) + post)
        asc = SmoothDiagram(s.seam_strands, pre + (SCross(ev.k, ASC),) + post)
        straight = SmoothDiagram(s.seam_strands, pre + post)
        turn = SmoothDiagram(s.seam_strands, pre + (Cap(ev.k), Cup(ev.k)) + post)
        assert kauffman_D(desc) - kauffman_D(asc) == Z * (kauffman_D(straight) - kauffman_D(turn))
        checked += 1
    assert checked > 50


def test_regular_isotopy_local_moves():
    base = SmoothDiagram(3, (SCross(2, ASC),))
    for k in (1, 2):
        ins = r2_pair(k, ASC)
        assert kauffman_D(SmoothDiagram(3, base.events + ins)) == kauffman_D(base)
    for h in [(0, 1, 2), (2, 0, 1), (1, 2, 0)]:
        one, two = r3_sides(1, h)
        assert kauffman_D(SmoothDiagram(3, base.events + one)) == kauffman_D(SmoothDiagram(3, base.events + two))
    for over in (True, False):
        old, new = cup_slide(1, over)
        # close the slid cup with a cap
        assert kauffman_D(SmoothDiagram(1, old + (Cap(2),))) == kauffman_D(SmoothDiagram(1, new + (Cap(2),)))
        old, new = cap_slide(1, over)
        assert kauffman_D(SmoothDiagram(1, (Cup(2),) + old)) == kauffman_D(SmoothDiagram(1, (Cup(2),) + new))


def test_resolution_marks_front_crossings():
    # the descending strand is on top, so a single-component front crossing from
    # a basic front is met first on its over strand
    res = resolve(from_front(a_lambda((3,))))
    assert res.first_bad is None
    assert all(res.good.values())


def test_budget_is_enforced():
    s = from_front(random_front(90, 8))
    with pytest.raises(BudgetExceeded):
        kauffman_D(SmoothDiagram(2, (SCross(1, ASC), SCross(1, ASC), Cup(1), Cap(2))), budget=1)
    kauffman_D(s, budget=10**6)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_product_is_multiplicative(s1, s2):
    k, l = random_front(s1, 4), random_front(s2, 4)
    assert kauffman_F(product(k, l)) == kauffman_F(k) * kauffman_F(l)


def test_thurston_bennequin_estimate():
    for seed in range(200):
        d = random_front(seed, 8)
        F = kauffman_F(d)
        assert tb(d) <= tb_upper_bound(d) == -a_degree(F)
