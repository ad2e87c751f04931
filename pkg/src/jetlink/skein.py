"""Kauffman skein evaluation of annular link diagrams.

A smooth diagram uses the same event model as a front, with cusps replaced
by cups and caps and every crossing carrying its over strand: ``"desc"`` when
the strand moving down the position order (k to k+1, left to right) is on top,
``"asc"`` otherwise.

Values live in the skein algebra, written in the basis ``A_lambda``.  The
evaluator switches the first bad crossing of the canonical resolution and
recurses on the switched diagram and both smoothings until every diagram is
descending; a descending diagram is read off componentwise.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from .algebra import SkeinElement, a_degree, a_shift
from .front import (
    CROSS,
    FrontDiagram,
    FrontError,
    LEFT_CUSP,
    crossing_sign,
    strand_counts,
    trace_components,
    writhe,
)

CUP = "cup"
CAP = "cap"
DESC = "desc"
ASC = "asc"

# Sign in  D(desc) - D(asc) = SR1_SIGN * z * (D(straight) - D(turnback)).
# The straight smoothing deletes the crossing; the turnback replaces it with a
# cap followed by a cup.  +1 is the convention under which a positive curl
# evaluates to a times the uncurled diagram.
SR1_SIGN = 1

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SmoothEvent:
    kind: str
    k: int
    over: str | None = None

    def __post_init__(self):
        if self.kind not in (CROSS, CUP, CAP):
            raise FrontError("BadEvent", f"unknown smooth event kind {self.kind!r}")
        if self.kind == CROSS and self.over not in (DESC, ASC):
            raise FrontError("BadEvent", f"crossing needs over in (desc, asc), got {self.over!r}")
        if self.kind != CROSS and self.over is not None:
            raise FrontError("BadEvent", "only crossings carry an over strand")

    def switched(self) -> "SmoothEvent":
        return SmoothEvent(CROSS, self.k, ASC if self.over == DESC else DESC)

    def to_json(self) -> dict:
        out = {"type": self.kind, "k": self.k}
        if self.over:
            out["over"] = self.over
        return out


def SCross(k: int, over: str = DESC) -> SmoothEvent:
    return SmoothEvent(CROSS, k, over)


def Cup(k: int) -> SmoothEvent:
    return SmoothEvent(CUP, k)


def Cap(k: int) -> SmoothEvent:
    return SmoothEvent(CAP, k)


@dataclass(frozen=True)
class SmoothDiagram:
    seam_strands: int
    events: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))

    def validate(self) -> list[int]:
        return strand_counts(self.seam_strands, self.events)

    def components(self):
        return trace_components(self.seam_strands, self.events, self.validate())

    def crossing_count(self) -> int:
        return sum(1 for e in self.events if e.kind == CROSS)

    def to_json(self) -> dict:
        return {"seam_strands": self.seam_strands, "events": [e.to_json() for e in self.events]}

    @classmethod
    def from_json(cls, obj) -> "SmoothDiagram":
        if isinstance(obj, str):
            obj = json.loads(obj)
        evs = [SmoothEvent(e["type"], int(e["k"]), e.get("over")) for e in obj.get("events", [])]
        return cls(int(obj["seam_strands"]), tuple(evs))


def from_front(d: FrontDiagram) -> SmoothDiagram:
    """Smooth cusps, and put the descending (lesser slope) strand on top."""
    d.validate()
    evs = []
    for ev in d.events:
        if ev.kind == CROSS:
            evs.append(SCross(ev.k, DESC))
        elif ev.kind == LEFT_CUSP:
            evs.append(Cup(ev.k))
        else:
            evs.append(Cap(ev.k))
    return SmoothDiagram(d.seam_strands, tuple(evs))


def loop_value() -> SkeinElement:
    """Value of a null-homotopic circle, ``(a - a^-1)/z + 1``."""
    return SkeinElement({((), 1, -1): 1, ((), -1, -1): -1, ((), 0, 0): 1})


# ---------------------------------------------------------------------------
# canonical resolution


def _is_over(ev: SmoothEvent, side_pos: int, direction: int) -> bool:
    """Whether a strand leaving position ``side_pos`` of the near interval is on top."""
    k = ev.k
    if direction > 0:
        return side_pos == (k if ev.over == DESC else k + 1)
    return side_pos == (k + 1 if ev.over == DESC else k)


@dataclass
class Resolution:
    """Canonical traversal data: components, and per crossing whether it is good."""

    components: list
    good: dict  # event index -> bool (first traversal on the over strand)
    first_bad: int | None


def resolve(s: SmoothDiagram) -> Resolution:
    comps = s.components()
    good = {}
    first_bad = None
    for c in comps:
        for (m, i, d), (e, how) in zip(c.segments, c.events):
            if not s.events or e in good:
                continue
            ev = s.events[e]
            if ev.kind != CROSS or i not in (ev.k, ev.k + 1):
                continue
            ok = _is_over(ev, i, d)
            good[e] = ok
            if not ok and first_bad is None:
                first_bad = e
    return Resolution(comps, good, first_bad)


def _descending_value(s: SmoothDiagram, comps) -> SkeinElement:
    owner = {}
    for c in comps:
        for m, i, d in c.segments:
            owner[(m, i)] = (c.index, d)
    self_writhe = [0] * len(comps)
    for e, ev in enumerate(s.events):
        if ev.kind != CROSS:
            continue
        ca, da = owner[(e, ev.k)]
        cb, db = owner[(e, ev.k + 1)]
        if ca != cb:
            continue
        self_writhe[ca] += crossing_sign(ev.over == DESC, da, db)
    value = SkeinElement.basis(())
    for c in comps:
        w = self_writhe[c.index]
        m = abs(c.winding)
        if m:
            value = value * SkeinElement({((m,), w - (m - 1), 0): 1})
        else:
            value = value * a_shift(loop_value(), w)
    return value


class _Evaluator:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0
        self.memo: dict = {}

    def __call__(self, s: SmoothDiagram) -> SkeinElement:
        key = (s.seam_strands, s.events)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"skein recursion exceeded {self.budget} nodes")
        res = resolve(s)
        e = res.first_bad
        if e is None:
            val = _descending_value(s, res.components)
        else:
            ev = s.events[e]
            before, after = s.events[:e], s.events[e + 1 :]
            switched = SmoothDiagram(s.seam_strands, before + (ev.switched(),) + after)
            straight = SmoothDiagram(s.seam_strands, before + after)
            turn = SmoothDiagram(s.seam_strands, before + (Cap(ev.k), Cup(ev.k)) + after)
            smooth = (self(straight) - self(turn)) * SkeinElement({((), 0, 1): SR1_SIGN})
            # D(desc) - D(asc) = smooth
            val = self(switched) + (smooth if ev.over == DESC else -smooth)
        self.memo[key] = val
        return val


def kauffman_D(s: SmoothDiagram, budget: int = DEFAULT_BUDGET) -> SkeinElement:
    """The class of ``s`` in the skein algebra, in the partition basis."""
    s.validate()
    return _Evaluator(budget)(s)


def kauffman_F(d: FrontDiagram, o=None, budget: int = DEFAULT_BUDGET) -> SkeinElement:
    """Normalized invariant ``a^(-writhe) * D`` of an oriented front."""
    return a_shift(kauffman_D(from_front(d), budget), -writhe(d, o))


def tb_upper_bound(d: FrontDiagram, o=None, budget: int = DEFAULT_BUDGET) -> int:
    return -a_degree(kauffman_F(d, o, budget))


# ---------------------------------------------------------------------------
# regular-isotopy moves used to test well-definedness


def r2_pair(k: int, first: str = DESC) -> tuple:
    """Two crossings of strands k, k+1 with the same strand on top both times."""
    second = ASC if first == DESC else DESC
    return (SCross(k, first), SCross(k, second))


def r3_sides(k: int, heights: Sequence[int]) -> tuple:
    """Both sides of a triple-point move on strands ``k, k+1, k+2``.

    ``heights`` ranks the strands that start at positions k, k+1, k+2
    (larger is higher).  Returns the two event windows.
    """
    hT, hM, hB = heights

    def c(pos, a, b):
        return SCross(pos, DESC if a > b else ASC)

    one = (c(k, hT, hM), c(k + 1, hT, hB), c(k, hM, hB))
    two = (c(k + 1, hM, hB), c(k, hT, hB), c(k + 1, hT, hM))
    return one, two


def cup_slide(k: int, over: bool) -> tuple:
    """``[Cup(k+1)]`` with a strand above becomes a cup below it plus two crossings."""
    o = ASC if over else DESC
    return (Cup(k + 1),), (Cup(k), SCross(k + 1, o), SCross(k, o))


def cap_slide(k: int, over: bool) -> tuple:
    """``[Cap(k+1)]`` with a strand above becomes two crossings then ``Cap(k)``."""
    o = DESC if over else ASC
    return (Cap(k + 1),), (SCross(k, o), SCross(k + 1, o), Cap(k))


def random_regular_move(s: SmoothDiagram, rng: random.Random):
    """Pick a random regular-isotopy rewrite.

    Returns the pair ``(left, right)`` of diagrams that must have equal value.
    Crossing pairs and triple points are inserted at a random place; cup and
    cap slides rewrite an existing cup or cap that has a strand above it.
    """
    counts = s.validate()
    evs = s.events
    slides = [t for t, ev in enumerate(evs) if ev.kind in (CUP, CAP) and ev.k >= 2]
    for _ in range(50):
        t = rng.randint(0, len(evs))
        N = counts[t]
        move = rng.choice(["r2", "r3", "slide"])
        if move == "r2" and N >= 2:
            k = rng.randint(1, N - 1)
            ins = r2_pair(k, rng.choice([DESC, ASC]))
            return s, SmoothDiagram(s.seam_strands, evs[:t] + ins + evs[t:])
        if move == "r3" and N >= 3:
            k = rng.randint(1, N - 2)
            h = [0, 1, 2]
            rng.shuffle(h)
            one, two = r3_sides(k, h)
            return (
                SmoothDiagram(s.seam_strands, evs[:t] + one + evs[t:]),
                SmoothDiagram(s.seam_strands, evs[:t] + two + evs[t:]),
            )
        if move == "slide" and slides:
            t = rng.choice(slides)
            ev = evs[t]
            make = cup_slide if ev.kind == CUP else cap_slide
            _, new = make(ev.k - 1, rng.random() < 0.5)
            return s, SmoothDiagram(s.seam_strands, evs[:t] + new + evs[t + 1 :])
    return s, s


def curl(k: int, positive: bool = True) -> tuple:
    """A one-crossing kink on strand ``k``."""
    return (Cup(k + 1), SCross(k, DESC if positive else ASC), Cap(k + 1))

