"""Normal and generalized normal rulings of fronts.

An involution of the strands of one interval is stored as a tuple ``rho`` of
0-based images (``rho[i] == i`` marks a fixed strand).  A ruling assigns one
involution to every interval; ``rhos[0]`` is the involution at the seam.
Switches are 0-based event indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .algebra import ZPoly
from .front import (
    CROSS,
    LEFT_CUSP,
    RIGHT_CUSP,
    STRAIGHT,
    FrontDiagram,
    MaslovPotential,
    a_lambda_oriented,
    maslov,
    maslov_from_orientation,
    product_oriented,
    segment_map,
    trace_components,
)

MAX_STRANDS = 16


class TooManyStrands(ValueError):
    pass


class RulingInvalid(ValueError):
    pass


class NotGeneralizedRuling(ValueError):
    pass


@dataclass(frozen=True)
class Ruling:
    rhos: tuple  # one involution per interval
    switches: tuple  # sorted 0-based crossing event indices
    generalized: bool = False
    p: int = 1

    @property
    def seed(self) -> tuple:
        return self.rhos[0]

    def j(self, d: FrontDiagram) -> int:
        return len(self.switches) - sum(1 for e in d.events if e.kind == RIGHT_CUSP)

    def has_fixed_points(self) -> bool:
        return any(r[i] == i for r in self.rhos for i in range(len(r)))

    def to_json(self, d: FrontDiagram | None = None) -> dict:
        out = {"seed": involution_to_json(self.seed), "switches": [e + 1 for e in self.switches]}
        if d is not None:
            out["j"] = self.j(d)
        return out


def involution_to_json(rho) -> list:
    """1-based cycles: pairs ``[i, j]`` and fixed strands ``[i]``."""
    out = []
    for i, r in enumerate(rho):
        if r == i:
            out.append([i + 1])
        elif i < r:
            out.append([i + 1, r + 1])
    return out


def involution_from_json(cycles, n: int | None = None) -> tuple:
    size = n if n is not None else sum(len(c) for c in cycles)
    rho = list(range(size))
    for c in cycles:
        if len(c) == 2:
            i, j = c[0] - 1, c[1] - 1
            rho[i], rho[j] = j, i
    return tuple(rho)


def involutions(n: int, fixed_ok: bool, compatible=None):
    """All involutions of ``range(n)``; ``compatible(i, j)`` filters pairs ``i < j``."""
    rho = [None] * n

    def rec(i):
        while i < n and rho[i] is not None:
            i += 1
        if i == n:
            yield tuple(rho)
            return
        if fixed_ok:
            rho[i] = i
            yield from rec(i + 1)
            rho[i] = None
        for j in range(i + 1, n):
            if rho[j] is None and (compatible is None or compatible(i, j)):
                rho[i], rho[j] = j, i
                yield from rec(i + 1)
                rho[i] = rho[j] = None

    yield from rec(0)


def _conj(rho, a, b):
    s = {a: b, b: a}
    new = list(rho)
    for i, r in enumerate(rho):
        new[s.get(i, i)] = s.get(r, r)
    return tuple(new)


def _after_left_cusp(rho, a):
    f = lambda i: i if i < a else i + 2
    new = [None] * (len(rho) + 2)
    for i, r in enumerate(rho):
        new[f(i)] = f(r)
    new[a], new[a + 1] = a + 1, a
    return tuple(new)


def _after_right_cusp(rho, a):
    g = lambda i: i if i < a else i - 2
    return tuple(g(r) for i, r in enumerate(rho) if i not in (a, a + 1))


def switch_allowed(rho, a: int, generalized: bool) -> bool:
    """Normality for a switch of strands ``a, a+1`` (0-based) under ``rho``."""
    b = a + 1
    ra, rb = rho[a], rho[b]
    fa, fb = ra == a, rb == b
    if fa and fb:
        return False
    if not fa and not fb:
        return rb < ra < a or (ra < a and b < rb) or b < rb < ra
    if not generalized:
        return False
    return (fa and rb > b) or (ra < a and fb)


def _default_potential(d: FrontDiagram, p: int) -> MaslovPotential:
    if p == 1:
        return MaslovPotential(1, {seg: 0 for seg in segment_map(d.components())})
    return maslov(d, p)


def _graded_pair(mu, m, i, j) -> bool:
    """Pair of 0-based positions ``i < j`` on interval ``m``: upper = lower + 1."""
    if mu.p == 1:
        return True
    return (mu(m, i + 1) - mu(m, j + 1) - 1) % mu.p == 0


def _pairs_graded(mu, m, rho, positions) -> bool:
    for i in positions:
        r = rho[i]
        if r == i:
            continue
        lo, hi = min(i, r), max(i, r)
        if not _graded_pair(mu, m, lo, hi):
            return False
    return True


def enumerate_rulings(
    d: FrontDiagram,
    generalized: bool = False,
    p: int = 1,
    mu: MaslovPotential | None = None,
    max_strands: int = MAX_STRANDS,
    limit: int | None = None,
) -> list[Ruling]:
    """Every (generalized) normal ruling of ``d``, p-graded with respect to ``mu``."""
    counts = d.validate()
    if max(counts) > max_strands:
        raise TooManyStrands(f"{max(counts)} strands exceeds the limit {max_strands}")
    if mu is None:
        mu = _default_potential(d, p)
    elif mu.p != p:
        raise ValueError(f"potential is mod {mu.p}, rulings requested mod {p}")
    M = d.M
    out: list[Ruling] = []
    n0 = counts[0]
    seeds = involutions(n0, generalized, lambda i, j: _graded_pair(mu, 0, i, j))
    for seed in seeds:
        if M == 0:
            out.append(Ruling((seed,), (), generalized, p))
            continue
        stack = [(0, seed, (seed,), ())]
        while stack:
            e, rho, hist, sw = stack.pop()
            if e == M:
                if rho == seed:
                    out.append(Ruling(hist[:-1], sw, generalized, p))
                    if limit is not None and len(out) >= limit:
                        return out
                continue
            ev = d.events[e]
            a = ev.k - 1
            nxt = (e + 1) % M
            if ev.kind == LEFT_CUSP:
                new = _after_left_cusp(rho, a)
                stack.append((e + 1, new, hist + (new,), sw))
            elif ev.kind == RIGHT_CUSP:
                if rho[a] == a + 1:
                    new = _after_right_cusp(rho, a)
                    stack.append((e + 1, new, hist + (new,), sw))
            else:
                if rho[a] == a + 1:
                    continue
                conj = _conj(rho, a, a + 1)
                if conj == rho:
                    stack.append((e + 1, rho, hist + (rho,), sw))
                    continue
                if switch_allowed(rho, a, generalized) and _pairs_graded(mu, nxt, rho, (a, a + 1)):
                    stack.append((e + 1, rho, hist + (rho,), sw + (e,)))
                stack.append((e + 1, conj, hist + (conj,), sw))
    return sorted(out, key=lambda r: (r.rhos, r.switches))


def ruling_polynomial(
    d: FrontDiagram,
    p: int = 1,
    mu: MaslovPotential | None = None,
    generalized: bool = False,
    max_strands: int = MAX_STRANDS,
) -> ZPoly:
    """Sum of ``z^(#switches - #right cusps)`` over rulings."""
    terms: dict = {}
    rc = sum(1 for e in d.events if e.kind == RIGHT_CUSP)
    for r in enumerate_rulings(d, generalized, p, mu, max_strands):
        j = len(r.switches) - rc
        terms[j] = terms.get(j, 0) + 1
    return ZPoly(terms)


def has_ruling(d, generalized=False, p=1, mu=None, max_strands=MAX_STRANDS) -> bool:
    return bool(enumerate_rulings(d, generalized, p, mu, max_strands, limit=1))


def validate_ruling(
    d: FrontDiagram,
    r: Ruling,
    generalized: bool = True,
    p: int = 1,
    mu: MaslovPotential | None = None,
) -> bool:
    """Check every transition rule; raises :class:`RulingInvalid` with the reason."""
    counts = d.validate()
    M = d.M
    if mu is None:
        mu = _default_potential(d, p)
    nint = max(M, 1)
    if len(r.rhos) != nint:
        raise RulingInvalid(f"{len(r.rhos)} involutions for {nint} intervals")
    for m, rho in enumerate(r.rhos):
        if len(rho) != counts[m]:
            raise RulingInvalid(f"interval {m}: involution on {len(rho)} strands, expected {counts[m]}")
        for i, x in enumerate(rho):
            if not 0 <= x < len(rho) or rho[x] != i:
                raise RulingInvalid(f"interval {m}: not an involution")
            if x == i and not generalized:
                raise RulingInvalid(f"interval {m}: fixed point {i + 1} in a normal ruling")
    if not _pairs_graded(mu, 0, r.rhos[0], range(counts[0])):
        raise RulingInvalid("seam involution is not graded")
    switches = set(r.switches)
    for e, ev in enumerate(d.events):
        rho, new = r.rhos[e], r.rhos[(e + 1) % M]
        a = ev.k - 1
        if ev.kind == LEFT_CUSP:
            want = _after_left_cusp(rho, a)
            if new != want:
                raise RulingInvalid(f"event {e + 1}: left cusp rule fails")
        elif ev.kind == RIGHT_CUSP:
            if rho[a] != a + 1:
                raise RulingInvalid(f"event {e + 1}: right cusp strands are not paired")
            if new != _after_right_cusp(rho, a):
                raise RulingInvalid(f"event {e + 1}: right cusp rule fails")
        else:
            if rho[a] == a + 1:
                raise RulingInvalid(f"event {e + 1}: paired strands cross")
            conj = _conj(rho, a, a + 1)
            is_switch = e in switches
            if conj == rho:
                if is_switch or new != rho:
                    raise RulingInvalid(f"event {e + 1}: crossing of two fixed strands")
            elif is_switch:
                if new != rho:
                    raise RulingInvalid(f"event {e + 1}: switch changes the involution")
                if not switch_allowed(rho, a, generalized):
                    raise RulingInvalid(f"event {e + 1}: switch violates normality")
                if not _pairs_graded(mu, (e + 1) % M, rho, (a, a + 1)):
                    raise RulingInvalid(f"event {e + 1}: switch pairs are not graded")
            elif new != conj:
                raise RulingInvalid(f"event {e + 1}: crossing rule fails")
        if ev.kind != CROSS and e in switches:
            raise RulingInvalid(f"event {e + 1}: switch at a cusp")
    return True


def ruling_from_involutions(d: FrontDiagram, rhos, generalized=True, p=1) -> Ruling:
    """Assemble a ruling from its involutions, reading switches off the crossings."""
    M = d.M
    sw = []
    for e, ev in enumerate(d.events):
        if ev.kind == CROSS:
            a = ev.k - 1
            rho, new = rhos[e], rhos[(e + 1) % M]
            if new == rho and _conj(rho, a, a + 1) != rho:
                sw.append(e)
    return Ruling(tuple(tuple(r) for r in rhos), tuple(sw), generalized, p)


# ---------------------------------------------------------------------------
# decompositions


@dataclass
class DecompositionComponent:
    index: int
    winding: int
    segments: list  # [(m, i)] of the original front
    origin: tuple  # original component indices met
    partner: int | None  # component paired by the ruling; None when fixed
    seam_positions: tuple = field(default=())


class _Straight:
    kind = STRAIGHT

    def __init__(self, k):
        self.k = k


def decompose(d: FrontDiagram, r: Ruling) -> list[DecompositionComponent]:
    """Components of the front obtained by resolving every switch into two parallel strands."""
    counts = d.validate()
    sw = set(r.switches)
    events = [(_Straight(ev.k) if e in sw else ev) for e, ev in enumerate(d.events)]
    comps = trace_components(d.seam_strands, events, counts)
    orig = segment_map(d.components())
    owner = {}
    for c in comps:
        for m, i, _ in c.segments:
            owner[(m, i)] = c.index
    out = []
    for c in comps:
        m, i = c.basepoint
        rho = r.rhos[m]
        partner = None if rho[i - 1] == i - 1 else owner[(m, rho[i - 1] + 1)]
        segs = [(mm, ii) for mm, ii, _ in c.segments]
        out.append(
            DecompositionComponent(
                c.index,
                c.winding,
                segs,
                tuple(sorted({orig[s][0] for s in segs})),
                partner,
                tuple(sorted(ii for mm, ii in segs if mm == 0)),
            )
        )
    return out


def gnr_to_lambda(d: FrontDiagram, r: Ruling, mu: MaslovPotential | None = None):
    """Partition(s) of the fixed-strand windings of a generalized ruling.

    Returns ``(lam, neg)``.  With a mod-2 potential ``mu``, fixed components
    whose potential is 0 need a leftward partner and go to ``neg``; all others
    go to ``lam``.  Without a graded potential ``neg`` is empty.
    """
    parts, neg = [], []
    for c in decompose(d, r):
        if c.partner is not None:
            continue
        if c.winding <= 0:
            raise NotGeneralizedRuling("fixed-strand component does not wind positively")
        if mu is not None and mu.p == 2 and mu(*c.segments[0]) == 0:
            neg.append(c.winding)
        else:
            parts.append(c.winding)
    return tuple(sorted(parts, reverse=True)), tuple(sorted(neg, reverse=True))


def certificate_front(d: FrontDiagram, lam, neg=(), o=None):
    """``d * A_lam * A_{-neg}`` with its induced orientation."""
    a, oa = a_lambda_oriented(lam, neg)
    if o is None:
        o = tuple(1 for _ in d.components())
    return product_oriented(d, o, a, oa)


def certificate_has_ruling(d: FrontDiagram, lam, neg=(), o=None, p: int = 1) -> bool:
    """Whether ``d * A_lam * A_{-neg}`` has a normal ruling (2-graded by orientation if p == 2)."""
    prod, po = certificate_front(d, lam, neg, o)
    mu = maslov_from_orientation(prod, po) if p == 2 else None
    return has_ruling(prod, False, p, mu)
