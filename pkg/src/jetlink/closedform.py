"""Closed formulas for ruling polynomials of basic-front products, the
specialization of the skein invariant to ruling polynomials, and
Thurston-Bennequin sharpness certificates.
"""

from __future__ import annotations

import itertools
import json
from math import comb, factorial
from typing import Iterable, Mapping

from .algebra import AZPoly, SkeinElement, ZPoly, a_degree, coeff_a, multiplicities, partition, partition_concat


class NotSharp(ValueError):
    pass


def bracket(m: int) -> ZPoly:
    """``<m> = sum_{k<m} C(m+k, 2k+1) z^(2k)``, with ``<0> = z^-2``."""
    if m < 0:
        raise ValueError("bracket needs m >= 0")
    if m == 0:
        return ZPoly({-2: 1})
    return ZPoly({2 * k: comb(m + k, 2 * k + 1) for k in range(m)})


def symmetric_matrices(rows: tuple):
    """Symmetric nonnegative integer matrices, zero diagonal, with the given row sums.

    Yields dicts ``{(i, j): b_ij}`` for ``i < j``.
    """
    n = len(rows)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    left = list(rows)
    entries = {}

    def rec(t):
        if t == len(pairs):
            if all(v == 0 for v in left):
                yield dict(entries)
            return
        i, j = pairs[t]
        # once every pair touching row i is placed, its remainder must be 0
        last_for_i = all(p[0] != i and p[1] != i for p in pairs[t + 1 :])
        hi = min(left[i], left[j])
        lo = left[i] if last_for_i else 0
        for b in range(lo, hi + 1):
            left[i] -= b
            left[j] -= b
            entries[(i, j)] = b
            yield from rec(t + 1)
            left[i] += b
            left[j] += b
        entries.pop((i, j), None)

    if n == 1:
        if rows[0] == 0:
            yield {}
        return
    yield from rec(0)


def basic_product_ruling_poly(lam: Iterable[int]) -> ZPoly:
    """1-graded ruling polynomial of ``A_lam`` from the symmetric-matrix sum.

    The prefactor is ``z^(n(n-2))`` for ``n`` parts.
    """
    lam = tuple(lam)
    if any(p < 1 for p in lam):
        raise ValueError("parts must be positive")
    n = len(lam)
    if n == 0:
        return ZPoly({0: 1})
    total = ZPoly()
    for b in symmetric_matrices(lam):
        term = ZPoly({0: 1})
        for v in b.values():
            term = term * bracket(v)
        total = total + term
    return total * ZPoly({n * (n - 2): 1})


def _double_factorial_odd(a: int) -> int:
    """``(2a - 1)!!``, with the empty product for a = 0."""
    out = 1
    for k in range(1, 2 * a, 2):
        out *= k
    return out


def switchless_count(mu: Iterable[int]) -> int:
    """Number of switchless rulings of ``A_mu``."""
    out = 1
    for k, mult in multiplicities(mu).items():
        if mult % 2:
            return 0
        a = mult // 2
        out *= k**a * _double_factorial_odd(a)
    return out


_psi_cache: dict = {}


def _ruling_poly_cached(lam: tuple) -> ZPoly:
    if lam not in _psi_cache:
        _psi_cache[lam] = basic_product_ruling_poly(lam)
    return _psi_cache[lam]


def psi(s: SkeinElement) -> AZPoly:
    """Replace each basis element ``A_lam`` by the ruling polynomial of ``A_lam``."""
    out = AZPoly()
    for lam, coeff in s.by_partition().items():
        out = out + coeff * AZPoly.from_z(_ruling_poly_cached(lam))
    return out


def recover_ruling_poly(d, o=None, budget=None) -> ZPoly:
    """Coefficient of ``a^(-tb)`` in the specialized skein invariant."""
    from .front import tb
    from .skein import DEFAULT_BUDGET, kauffman_F

    F = kauffman_F(d, o, budget or DEFAULT_BUDGET)
    return coeff_a(psi(F), -tb(d, o))


def _multiplicity_space(n: int, hi: int):
    """Partitions with parts <= n, each size occurring 0..hi times, by size then lex."""
    cands = []
    for mults in itertools.product(range(hi + 1), repeat=n):
        parts = []
        for size in range(n, 0, -1):
            parts += [size] * mults[size - 1]
        cands.append(tuple(parts))
    return sorted(cands, key=lambda lam: (sum(lam), lam))


def certificate_search_space(coeff: Mapping) -> list:
    """The finite candidate set: parts bounded by the largest part present, each
    size occurring at most ``2m - 1`` times where ``2m - 1`` covers every
    multiplicity present."""
    keys = [partition(mu) for mu in coeff]
    n = max((max(mu) for mu in keys if mu), default=1)
    top = max((c for mu in keys for c in multiplicities(mu).values()), default=0)
    m = max(1, (top + 2) // 2)
    return _multiplicity_space(n, 2 * m - 1)


def find_certificate(coeff: Mapping) -> tuple:
    """Least ``lam`` with ``sum_mu a_mu C(mu . lam) != 0``.

    ``coeff`` maps partitions to z-polynomials (the ``a^(-tb)`` coefficient of F);
    ``a_mu`` is the coefficient of the lowest z-power present overall.
    """
    coeff = {partition(mu): p for mu, p in coeff.items() if p}
    if not coeff:
        raise NotSharp("coefficient is zero")
    k = min(p.min_degree() for p in coeff.values())
    a = {mu: p[k] for mu, p in coeff.items() if p[k]}
    for lam in certificate_search_space(a):
        if sum(c * switchless_count(partition_concat(mu, lam)) for mu, c in a.items()):
            return lam
    raise NotSharp("no certificate in the search space")


def sharpness(d, o=None, budget=None):
    """``(is_sharp, certificate or None, tb, -deg_a F)``."""
    from .front import tb
    from .skein import DEFAULT_BUDGET, kauffman_F

    F = kauffman_F(d, o, budget or DEFAULT_BUDGET)
    t = tb(d, o)
    bound = -a_degree(F)
    if t != bound:
        return False, None, t, bound
    lead = coeff_a(F, -t).z_coefficients()
    return True, find_certificate(lead), t, bound


def r2_switchless(alpha: Iterable[int], beta: Iterable[int]) -> int:
    """Switchless 2-graded count for ``A_alpha A_{-beta}``."""
    ma, mb = multiplicities(alpha), multiplicities(beta)
    out = 1
    for k in set(ma) | set(mb):
        x, y = ma.get(k, 0), mb.get(k, 0)
        if x != y:
            return 0
        out *= k**x * factorial(x)
    return out


def find_certificate_2graded(coeff: Mapping) -> tuple:
    """Least ``(mu, nu)`` with ``sum b_(alpha,beta) r2(alpha.mu, beta.nu) != 0``.

    ``coeff`` maps ``(alpha, beta)`` to z-polynomials.  Candidates have parts up
    to the largest part present and each multiplicity between 0 and the
    largest multiplicity present.
    """
    coeff = {(partition(a), partition(b)): p for (a, b), p in coeff.items() if p}
    if not coeff:
        raise NotSharp("coefficient is zero")
    k = min(p.min_degree() for p in coeff.values())
    b = {ab: p[k] for ab, p in coeff.items() if p[k]}
    parts = [x for ab in b for side in ab for x in side]
    n = max(parts, default=1)
    m = max((c for ab in b for side in ab for c in multiplicities(side).values()), default=0)
    m = max(m, 1)
    space = _multiplicity_space(n, m)
    pairs = sorted(itertools.product(space, space), key=lambda mn: (sum(mn[0]) + sum(mn[1]), mn))
    for mu, nu in pairs:
        if sum(c * r2_switchless(partition_concat(al, mu), partition_concat(be, nu)) for (al, be), c in b.items()):
            return mu, nu
    raise NotSharp("no certificate in the search space")


def load_homfly_coefficients(obj) -> dict:
    """Parse ``{"terms":[{"pos":[..],"neg":[..],"poly":{z-poly}}]}``."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    out: dict = {}
    for t in obj["terms"]:
        key = (partition(t.get("pos", ())), partition(t.get("neg", ())))
        out[key] = out.get(key, ZPoly()) + ZPoly.from_json(t["poly"])
    return out
