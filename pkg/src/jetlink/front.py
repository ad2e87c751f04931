"""Annular front diagrams.

A front is a seam strand count plus a sequence of events read left to right
around the circle.  Strand positions are 1-based and numbered from the top.

Intervals are indexed ``0 .. M-1``.  Interval 0 contains the seam; event ``e``
(0-based) sits between interval ``e`` and interval ``(e + 1) % M``.  A strand
segment is a pair ``(interval, position)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

CROSS = "cross"
LEFT_CUSP = "left_cusp"
RIGHT_CUSP = "right_cusp"
KINDS = (CROSS, LEFT_CUSP, RIGHT_CUSP)
# a resolved crossing: both strands pass straight through (used by decompositions)
STRAIGHT = "straight"


class FrontError(ValueError):
    """Structured validation failure; ``code`` names the defect."""

    def __init__(self, code: str, message: str, event: int | None = None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.event = event


class NoMaslovPotential(ValueError):
    """The cusp rule cannot be satisfied mod p on some component."""

    def __init__(self, component: int, defect: int, p: int):
        super().__init__(
            f"component {component}: cusp rule sums to {defect} around the loop, not 0 mod {p}"
        )
        self.component = component
        self.defect = defect


class InconsistentSeed(ValueError):
    pass


class UnknownComponent(KeyError):
    pass


@dataclass(frozen=True)
class FrontEvent:
    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FrontError("BadEvent", f"unknown event kind {self.kind!r}")

    def to_json(self) -> dict:
        return {"type": self.kind, "k": self.k}


def Cross(k: int) -> FrontEvent:
    return FrontEvent(CROSS, k)


def LeftCusp(k: int) -> FrontEvent:
    return FrontEvent(LEFT_CUSP, k)


def RightCusp(k: int) -> FrontEvent:
    return FrontEvent(RIGHT_CUSP, k)


def _delta(kind: str) -> int:
    return {CROSS: 0, LEFT_CUSP: 2, RIGHT_CUSP: -2}[kind]


def running_counts(seam: int, events: Sequence) -> list[int]:
    """Strand counts ``N(0), ..., N(M)`` without requiring the count to close up.

    ``events`` may be any objects with ``kind`` and ``k``; smooth ``cup`` and
    ``cap`` events count like left and right cusps.
    """
    if seam < 0:
        raise FrontError("NegativeStrandCount", f"seam strand count {seam} is negative")
    counts = [seam]
    n = seam
    for e, ev in enumerate(events):
        kind = _front_kind(ev.kind)
        if ev.k < 1:
            raise FrontError("EventOutOfRange", f"event {e}: position {ev.k} < 1", e)
        if kind == LEFT_CUSP:
            if ev.k > n + 1:
                raise FrontError("EventOutOfRange", f"event {e}: left cusp at {ev.k} with {n} strands", e)
            n += 2
        else:
            if n < 2 and kind == RIGHT_CUSP:
                raise FrontError("NegativeStrandCount", f"event {e}: right cusp with {n} strands", e)
            if ev.k + 1 > n:
                raise FrontError("EventOutOfRange", f"event {e}: {kind} at {ev.k} with {n} strands", e)
            if kind == RIGHT_CUSP:
                n -= 2
        counts.append(n)
    return counts


def strand_counts(seam: int, events: Sequence) -> list[int]:
    """Strand counts ``N(0), ..., N(M)``; the last must equal the seam count."""
    counts = running_counts(seam, events)
    if counts[-1] != seam:
        raise FrontError("SeamMismatch", f"strand count returns to {counts[-1]}, seam has {seam}")
    return counts


def _front_kind(kind: str) -> str:
    return {"cup": LEFT_CUSP, "cap": RIGHT_CUSP}.get(kind, kind)


# ---------------------------------------------------------------------------
# strand traversal shared by fronts and smooth diagrams


def step(events: Sequence, counts: Sequence[int], m: int, i: int, direction: int):
    """Move from segment ``(m, i)`` in ``direction`` through the adjacent event.

    Returns ``(m2, i2, direction2, info)``.  ``info`` is ``(event, kind)`` where
    kind is ``"pass"``, ``"down"`` or ``"up"`` (the last two for cusps, naming
    the vertical direction of travel through the cusp).
    """
    M = len(events)
    if direction > 0:
        e = m
        ev = events[e]
        kind = _front_kind(ev.kind)
        k = ev.k
        nxt = (e + 1) % M
        if kind == STRAIGHT:
            return nxt, i, 1, (e, "pass")
        if kind == CROSS:
            if i == k:
                return nxt, k + 1, 1, (e, "pass")
            if i == k + 1:
                return nxt, k, 1, (e, "pass")
            return nxt, i, 1, (e, "pass")
        if kind == LEFT_CUSP:
            return nxt, (i + 2 if i >= k else i), 1, (e, "pass")
        if i == k:
            return e, k + 1, -1, (e, "down")
        if i == k + 1:
            return e, k, -1, (e, "up")
        return nxt, (i - 2 if i > k + 1 else i), 1, (e, "pass")
    e = (m - 1) % M
    ev = events[e]
    kind = _front_kind(ev.kind)
    k = ev.k
    if kind == STRAIGHT:
        return e, i, -1, (e, "pass")
    if kind == CROSS:
        if i == k:
            return e, k + 1, -1, (e, "pass")
        if i == k + 1:
            return e, k, -1, (e, "pass")
        return e, i, -1, (e, "pass")
    if kind == RIGHT_CUSP:
        return e, (i + 2 if i >= k else i), -1, (e, "pass")
    if i == k:
        return m, k + 1, 1, (e, "down")
    if i == k + 1:
        return m, k, 1, (e, "up")
    return e, (i - 2 if i > k + 1 else i), -1, (e, "pass")


@dataclass
class Component:
    """One closed component traversed from its canonical basepoint in +x."""

    index: int
    segments: list  # [(m, i, direction)] in traversal order
    winding: int
    down_cusps: int
    up_cusps: int
    events: list = field(default_factory=list)  # [(event, kind)] in traversal order

    @property
    def basepoint(self):
        return self.segments[0][:2]

    @property
    def cusps(self) -> int:
        return self.down_cusps + self.up_cusps


def trace_components(seam: int, events: Sequence, counts: Sequence[int] | None = None) -> list[Component]:
    """All components in canonical order (by lex-smallest segment)."""
    if counts is None:
        counts = strand_counts(seam, events)
    M = len(events)
    if M == 0:
        return [Component(i - 1, [(0, i, 1)], 1, 0, 0) for i in range(1, seam + 1)]
    seen = set()
    comps = []
    for m in range(M):
        for i in range(1, counts[m] + 1):
            if (m, i) in seen:
                continue
            segs = []
            evs = []
            winding = down = up = 0
            cm, ci, cd = m, i, 1
            while True:
                seen.add((cm, ci))
                segs.append((cm, ci, cd))
                nm, ni, nd, info = step(events, counts, cm, ci, cd)
                evs.append(info)
                e, how = info
                if how == "down":
                    down += 1
                elif how == "up":
                    up += 1
                elif e == M - 1:
                    winding += cd
                cm, ci, cd = nm, ni, nd
                if (cm, ci) == (m, i):
                    break
            comps.append(Component(len(comps), segs, winding, down, up, evs))
    return comps


def segment_map(comps: Iterable[Component]) -> dict:
    """``(m, i) -> (component index, canonical direction)``."""
    out = {}
    for c in comps:
        for m, i, d in c.segments:
            out[(m, i)] = (c.index, d)
    return out


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class FrontDiagram:
    seam_strands: int
    events: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))

    @property
    def M(self) -> int:
        return len(self.events)

    def validate(self) -> list[int]:
        """Strand counts ``N(0..M)``; raises :class:`FrontError` on defects."""
        return strand_counts(self.seam_strands, self.events)

    def counts(self) -> list[int]:
        return self.validate()

    def interval_counts(self) -> list[int]:
        """Strand count of each interval ``0 .. max(M, 1) - 1``."""
        c = self.validate()
        return c[: max(self.M, 1)]

    def components(self) -> list[Component]:
        return trace_components(self.seam_strands, self.events, self.validate())

    def max_strands(self) -> int:
        return max(self.validate())

    def to_json(self, orientation=None, maslov=None) -> dict:
        out = {"seam_strands": self.seam_strands, "events": [e.to_json() for e in self.events]}
        if orientation is not None:
            out["orientation"] = {"components": ["+" if s > 0 else "-" for s in orientation]}
        if maslov is not None:
            out["maslov"] = maslov
        return out

    @classmethod
    def from_json(cls, obj) -> "FrontDiagram":
        if isinstance(obj, str):
            obj = json.loads(obj)
        evs = [FrontEvent(e["type"], int(e["k"])) for e in obj.get("events", [])]
        return cls(int(obj["seam_strands"]), tuple(evs))

    def __repr__(self):
        evs = ", ".join(f"{ _SHORT[e.kind]}({e.k})" for e in self.events)
        return f"FrontDiagram({self.seam_strands}; [{evs}])"


_SHORT = {CROSS: "X", LEFT_CUSP: "L", RIGHT_CUSP: "R"}


def load_front(obj):
    """Parse front JSON; returns ``(diagram, orientation or None, Maslov data or None)``."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    d = FrontDiagram.from_json(obj)
    orient = None
    if "orientation" in obj:
        orient = tuple(1 if s == "+" else -1 for s in obj["orientation"]["components"])
        if len(orient) != len(d.components()):
            raise FrontError("BadOrientation", "orientation length differs from component count")
    return d, orient, obj.get("maslov")


def default_orientation(d: FrontDiagram) -> tuple[int, ...]:
    return tuple(1 for _ in d.components())


def _orientation(d: FrontDiagram, o) -> tuple[int, ...]:
    comps = d.components()
    if o is None:
        return tuple(1 for _ in comps)
    o = tuple(o)
    if len(o) != len(comps):
        raise FrontError("BadOrientation", f"{len(o)} orientation flags for {len(comps)} components")
    return o


def oriented_directions(d: FrontDiagram, o=None) -> dict:
    """``(m, i) -> +1/-1`` x-direction of each segment under orientation ``o``."""
    o = _orientation(d, o)
    return {(m, i): o[c] * cd for (m, i), (c, cd) in segment_map(d.components()).items()}


def crossing_sign(desc_over: bool, over_dir: int, under_dir: int) -> int:
    """Sign of an oriented crossing.

    The crossing of a front, where the descending strand is over, is positive
    exactly when both strands run the same x-direction.
    """
    same = 1 if over_dir == under_dir else -1
    return same if desc_over else -same


def crossing_signs(d: FrontDiagram, o=None) -> dict[int, int]:
    dirs = oriented_directions(d, o)
    out = {}
    for e, ev in enumerate(d.events):
        if ev.kind == CROSS:
            out[e] = crossing_sign(True, dirs[(e, ev.k)], dirs[(e, ev.k + 1)])
    return out


def writhe(d: FrontDiagram, o=None) -> int:
    return sum(crossing_signs(d, o).values())


def cusp_count(d: FrontDiagram) -> int:
    return sum(1 for e in d.events if e.kind != CROSS)


def tb(d: FrontDiagram, o=None) -> int:
    """Thurston-Bennequin number: writhe minus half the cusps."""
    return writhe(d, o) - cusp_count(d) // 2


def rotation(d: FrontDiagram, o=None, comp: int | None = None) -> Fraction:
    """Rotation number of one component, or of the whole link if ``comp`` is None."""
    o = _orientation(d, o)
    comps = d.components()
    if comp is not None:
        if not 0 <= comp < len(comps):
            raise UnknownComponent(comp)
        comps = [comps[comp]]
    total = Fraction(0)
    for c in comps:
        down, up = (c.down_cusps, c.up_cusps) if o[c.index] > 0 else (c.up_cusps, c.down_cusps)
        total += Fraction(down - up, 2)
    return total


def windings(d: FrontDiagram, o=None) -> list[int]:
    o = _orientation(d, o)
    return [o[c.index] * c.winding for c in d.components()]


# ---------------------------------------------------------------------------
# Maslov potentials


@dataclass(frozen=True)
class MaslovPotential:
    p: int
    values: dict  # (m, i) -> int in range(p)

    def __call__(self, m: int, i: int) -> int:
        return self.values[(m, i)]

    def seam_values(self) -> list[int]:
        return [self.values[(0, i)] for i in range(1, 1 + sum(1 for (m, _) in self.values if m == 0))]

    def to_json(self) -> dict:
        return {"p": self.p, "seam_values": self.seam_values()}


def _component_offsets(c: Component) -> list[int]:
    """Potential along the canonical traversal, relative to the basepoint value."""
    offs = []
    v = 0
    for t in range(len(c.segments)):
        offs.append(v)
        how = c.events[t][1] if t < len(c.events) else "pass"
        if how == "down":
            v -= 1
        elif how == "up":
            v += 1
    return offs, v


def maslov(d: FrontDiagram, p: int = 1, seam_values: Sequence[int] | None = None) -> MaslovPotential:
    """A Z/p Maslov potential, normalized to 0 at each basepoint unless seeded.

    Raises :class:`NoMaslovPotential` if some component has no potential mod p
    and :class:`InconsistentSeed` if ``seam_values`` contradict the cusp rule.
    """
    if p < 1:
        raise ValueError("modulus must be positive")
    counts = d.validate()
    comps = d.components()
    values = {}
    for c in comps:
        offs, total = _component_offsets(c)
        if total % p:
            raise NoMaslovPotential(c.index, total, p)
        base = 0
        if seam_values is not None:
            pinned = None
            for (m, i, _), off in zip(c.segments, offs):
                if m == 0 and i <= len(seam_values):
                    want = (seam_values[i - 1] - off) % p
                    if pinned is None:
                        pinned = want
                    elif pinned != want:
                        raise InconsistentSeed(
                            f"component {c.index}: seam values disagree at strand {i}"
                        )
            if pinned is not None:
                base = pinned
        for (m, i, _), off in zip(c.segments, offs):
            values[(m, i)] = (base + off) % p
    if seam_values is not None and len(seam_values) != counts[0]:
        raise InconsistentSeed(f"{len(seam_values)} seam values for {counts[0]} seam strands")
    return MaslovPotential(p, values)


def maslov_from_orientation(d: FrontDiagram, o=None) -> MaslovPotential:
    """The Z/2 potential: right-moving strands 0, left-moving strands 1."""
    dirs = oriented_directions(d, o)
    return MaslovPotential(2, {seg: (0 if v > 0 else 1) for seg, v in dirs.items()})


def check_maslov(d: FrontDiagram, mu: MaslovPotential) -> bool:
    """True iff ``mu`` is constant along strands and jumps by 1 at every cusp."""
    counts = d.validate()
    M = d.M
    if M == 0:
        return all((0, i) in mu.values for i in range(1, counts[0] + 1))
    for e, ev in enumerate(d.events):
        left, right = e, (e + 1) % M
        k = ev.k
        if ev.kind == CROSS:
            pairs = [(i, i) for i in range(1, counts[e] + 1) if i not in (k, k + 1)]
            pairs += [(k, k + 1), (k + 1, k)]
        elif ev.kind == LEFT_CUSP:
            pairs = [(i, i if i < k else i + 2) for i in range(1, counts[e] + 1)]
            if (mu(right, k) - mu(right, k + 1) - 1) % mu.p:
                return False
        else:
            pairs = [(i, i if i < k else i - 2) for i in range(1, counts[e] + 1) if i not in (k, k + 1)]
            if (mu(left, k) - mu(left, k + 1) - 1) % mu.p:
                return False
        for i, j in pairs:
            if (mu(left, i) - mu(right, j)) % mu.p:
                return False
    return True


# ---------------------------------------------------------------------------
# constructions


def basic_front(m: int) -> FrontDiagram:
    """The cusp-free front winding ``m`` times with crossings at 1..m-1."""
    if m < 1:
        raise ValueError("basic fronts need m >= 1")
    return FrontDiagram(m, tuple(Cross(k) for k in range(1, m)))


def product(k: FrontDiagram, l: FrontDiagram) -> FrontDiagram:
    """Stack ``k`` above ``l``: events of ``k``, then events of ``l`` shifted down."""
    k.validate()
    l.validate()
    s = k.seam_strands
    shifted = tuple(FrontEvent(e.kind, e.k + s) for e in l.events)
    return FrontDiagram(k.seam_strands + l.seam_strands, k.events + shifted)


def product_source(k: FrontDiagram, l: FrontDiagram):
    """Map each segment of ``product(k, l)`` to ``("k" | "l", segment)``."""
    p = product(k, l)
    ck, cl = k.validate(), l.validate()
    MK = k.M
    out = {}
    for t, n in enumerate(p.interval_counts()):
        for i in range(1, n + 1):
            if t < MK:
                out[(t, i)] = ("k", (t, i)) if i <= ck[t] else ("l", (0, i - ck[t]))
            else:
                s = k.seam_strands
                out[(t, i)] = ("k", (0, i)) if i <= s else ("l", (t - MK, i - s))
    return out


def product_oriented(k: FrontDiagram, ok, l: FrontDiagram, ol):
    """``product(k, l)`` with the orientation induced from ``ok`` and ``ol``."""
    p = product(k, l)
    src = product_source(k, l)
    dirs = {"k": oriented_directions(k, ok), "l": oriented_directions(l, ol)}
    orient = []
    for c in p.components():
        which, seg = src[c.basepoint]
        orient.append(dirs[which][seg])
    return p, tuple(orient)


def a_lambda_oriented(pos: Iterable[int] = (), neg: Iterable[int] = ()):
    """``A_pos A_{-neg}``: rightward factors for ``pos`` stacked above leftward ones."""
    d, o = FrontDiagram(0, ()), ()
    for part in pos:
        d, o = product_oriented(d, o, basic_front(part), (1,))
    for part in neg:
        d, o = product_oriented(d, o, basic_front(part), (-1,))
    return d, o


def a_lambda(lam: Iterable[int]) -> FrontDiagram:
    """Product of basic fronts ``A_{lam_1} ... A_{lam_l}``, first factor on top."""
    d = FrontDiagram(0, ())
    for part in lam:
        d = product(d, basic_front(part))
    return d


def unknot() -> FrontDiagram:
    return FrontDiagram(0, (LeftCusp(1), RightCusp(1)))


# ---------------------------------------------------------------------------
# Legendrian moves


def _fishtails(N: int):
    for k in range(1, N + 1):
        yield (LeftCusp(k + 1), Cross(k), RightCusp(k + 1))
        yield (LeftCusp(k), Cross(k + 1), RightCusp(k))


def _replacements(window: tuple, N: int):
    """Local rewrites of an event window whose left boundary has ``N`` strands."""
    out = []
    w = window
    n = len(w)
    if n >= 1:
        a = w[0]
        k = a.k
        if a.kind == LEFT_CUSP:
            if k >= 2:
                out.append((1, (LeftCusp(k - 1), Cross(k), Cross(k - 1))))
            if k <= N:
                out.append((1, (LeftCusp(k + 1), Cross(k), Cross(k + 1))))
        if a.kind == RIGHT_CUSP:
            if k >= 2:
                out.append((1, (Cross(k - 1), Cross(k), RightCusp(k - 1))))
            if k + 2 <= N:
                out.append((1, (Cross(k + 1), Cross(k), RightCusp(k + 1))))
    if n >= 3:
        a, b, c = w[:3]
        # inverse cusp moves
        if a.kind == LEFT_CUSP and b == Cross(a.k + 1) and c == Cross(a.k):
            out.append((3, (LeftCusp(a.k + 1),)))
        if a.kind == LEFT_CUSP and a.k >= 2 and b == Cross(a.k - 1) and c == Cross(a.k):
            out.append((3, (LeftCusp(a.k - 1),)))
        if c.kind == RIGHT_CUSP and a == Cross(c.k) and b == Cross(c.k + 1):
            out.append((3, (RightCusp(c.k + 1),)))
        if c.kind == RIGHT_CUSP and c.k >= 2 and a == Cross(c.k) and b == Cross(c.k - 1):
            out.append((3, (RightCusp(c.k - 1),)))
        # inverse fishtail
        if a.kind == LEFT_CUSP and c.kind == RIGHT_CUSP and a.k == c.k:
            if b == Cross(a.k - 1) or b == Cross(a.k + 1):
                out.append((3, ()))
        # triple point
        if a.kind == b.kind == c.kind == CROSS and a.k == c.k and abs(a.k - b.k) == 1:
            out.append((3, (b, a, b)))
    return out


def _tangle_signature(events: Sequence, N: int):
    """Arc connectivity of a short tangle plus which arcs meet at each crossing.

    Two event windows with equal signatures differ by a planar isotopy when no
    closed loop lies inside the window.
    """
    try:
        counts = running_counts(N, events)
    except FrontError:
        return None
    T = len(events)
    padded = list(events) + [Cross(10**9)]
    arc_of = {}
    crossings: dict = {}
    cusps: dict = {}
    ends = [(0, i) for i in range(1, N + 1)] + [(T, i) for i in range(1, counts[-1] + 1)]
    for start in ends:
        if start in arc_of:
            continue
        t, pos = start
        dirn = 1 if t == 0 else -1
        hits = []
        while True:
            t2, pos2, dirn2, (e, how) = step(padded, None, t, pos, dirn)
            if padded[e].kind == CROSS and pos in (padded[e].k, padded[e].k + 1):
                hits.append(e)
            if how != "pass":
                hits.append(-1)
            t, pos, dirn = t2, pos2, dirn2
            if (dirn > 0 and t == T) or (dirn < 0 and t == 0):
                break
        key = (min(start, (t, pos)), max(start, (t, pos)))
        arc_of[start] = arc_of[(t, pos)] = key
        for e in hits:
            if e < 0:
                cusps[key] = cusps.get(key, 0) + 1
            else:
                crossings.setdefault(e, []).append(key)
    pairs = sorted(tuple(sorted(v)) for v in crossings.values())
    return tuple(pairs), tuple(sorted(cusps.items()))


def _commutations(a: FrontEvent, b: FrontEvent, N: int):
    """Planar swaps of adjacent events ``a`` then ``b`` (left boundary count ``N``)."""
    if a.kind == LEFT_CUSP and b.kind == RIGHT_CUSP and a.k == b.k:
        return []
    sig = _tangle_signature((a, b), N)
    if sig is None:
        return []
    out = []
    for kb in range(b.k - 2, b.k + 3, 2):
        for ka in range(a.k - 2, a.k + 3, 2):
            if kb < 1 or ka < 1:
                continue
            cand = (FrontEvent(b.kind, kb), FrontEvent(a.kind, ka))
            if _tangle_signature(cand, N) == sig:
                out.append(cand)
    return out


def _moves(d: FrontDiagram, planar: bool):
    """Yield ``(diagram, interval map)`` for every move; the map sends each old
    interval untouched by the move to its index in the new diagram."""
    counts = d.validate()
    ev = d.events
    M = len(ev)
    seen = {d}

    def fresh(nd):
        if nd in seen:
            return False
        nd.validate()
        seen.add(nd)
        return True

    def local(t, used, repl):
        nd = FrontDiagram(d.seam_strands, ev[:t] + tuple(repl) + ev[t + used :])
        delta = len(repl) - used
        imap = {m: m for m in range(t + 1)}
        imap.update({m: m + delta for m in range(t + max(used, 1), M)})
        imap = {m: (v % nd.M if nd.M else 0) for m, v in imap.items() if m < max(M, 1)}
        return nd, imap

    for t in range(M + 1):
        N = counts[t]
        for fish in _fishtails(N):
            nd, imap = local(t, 0, fish)
            if fresh(nd):
                yield nd, imap
        for width in (1, 3):
            if t + width > M:
                continue
            for used, repl in _replacements(ev[t : t + width], N):
                nd, imap = local(t, used, repl)
                if fresh(nd):
                    yield nd, imap
    if planar:
        for t in range(M - 1):
            for cand in _commutations(ev[t], ev[t + 1], counts[t]):
                nd, imap = local(t, 2, cand)
                if fresh(nd):
                    yield nd, imap
        if M:
            nd = FrontDiagram(counts[1], ev[1:] + ev[:1])
            if fresh(nd):
                yield nd, {m: (m - 1) % M for m in range(M)}


def legendrian_moves(d: FrontDiagram, planar: bool = True) -> list[FrontDiagram]:
    """Every diagram one Legendrian Reidemeister move (or planar move) from ``d``.

    Moves: fishtail insertion/removal, a strand passing a cusp, the triple point
    move, and, when ``planar`` is set, swapping commuting neighbours and moving
    the seam past the first event.
    """
    return [nd for nd, _ in _moves(d, planar)]


def transport_orientation(d: FrontDiagram, o, nd: FrontDiagram, imap: dict):
    """Orientation of ``nd`` agreeing with ``(d, o)`` on the intervals in ``imap``.

    Returns None if some component of ``nd`` avoids every such interval.
    """
    dirs = oriented_directions(d, o)
    out = []
    for c in nd.components():
        back = {v: m for m, v in imap.items()}
        sign = None
        for m, i, cd in c.segments:
            if m in back and (back[m], i) in dirs:
                sign = dirs[(back[m], i)] * cd
                break
        if sign is None:
            return None
        out.append(sign)
    return tuple(out)


def oriented_moves(d: FrontDiagram, o=None, planar: bool = True) -> list:
    """``(diagram, orientation)`` for every move whose orientation transports."""
    o = _orientation(d, o)
    out = []
    for nd, imap in _moves(d, planar):
        o2 = transport_orientation(d, o, nd, imap)
        if o2 is not None:
            out.append((nd, o2))
    return out


def random_move(d: FrontDiagram, rng: random.Random, planar: bool = True) -> FrontDiagram:
    moves = legendrian_moves(d, planar)
    return rng.choice(moves) if moves else d


def random_oriented_move(d: FrontDiagram, o, rng: random.Random, planar: bool = True):
    moves = oriented_moves(d, o, planar)
    return rng.choice(moves) if moves else (d, _orientation(d, o))


def random_front(seed: int, max_events: int, max_seam: int = 3) -> FrontDiagram:
    """A random valid front with at most ``max_events`` events; deterministic in ``seed``."""
    rng = random.Random(seed)
    if max_events <= 0:
        return FrontDiagram(0, ())
    seam = rng.randint(0, min(max_seam, max_events))
    M = rng.randint(0, max_events)
    n = seam
    events = []
    for step_no in range(M):
        remaining = M - step_no - 1
        opts = []
        # only pick moves that keep the seam count reachable
        if abs(n + 2 - seam) // 2 <= remaining:
            opts += [LEFT_CUSP] * 2
        if n >= 2 and abs(n - 2 - seam) // 2 <= remaining:
            opts += [RIGHT_CUSP] * 2
        if n >= 2 and abs(n - seam) // 2 <= remaining:
            opts += [CROSS] * 3
        if not opts:
            break
        kind = rng.choice(opts)
        if kind == LEFT_CUSP:
            k = rng.randint(1, n + 1)
            n += 2
        else:
            k = rng.randint(1, n - 1)
            if kind == RIGHT_CUSP:
                n -= 2
        events.append(FrontEvent(kind, k))
    d = FrontDiagram(seam, tuple(events))
    d.validate()
    return d
