"""The splashed Chekanov-Eliashberg DGA of a front over F2.

Splash ``m`` (``1 <= m <= M``) sits on interval ``m % M`` and carries two
strictly upper-triangular matrices of generators ``X_m`` and ``Y_m``.  Event
``m`` (1-based) lies between splash ``m - 1`` and splash ``m``, with splash 0
identified with splash ``M``; a crossing contributes ``b_m`` and a right cusp
``c_m``.  A front with no events gets a single splash on its only interval.

Algebra elements are frozensets of words; a word is a tuple of generators and
the empty word is 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .barannikov import b_tau, pairing
from .front import CROSS, LEFT_CUSP, RIGHT_CUSP, FrontDiagram, MaslovPotential, check_maslov
from .ruling import RulingInvalid, Ruling, ruling_from_involutions, validate_ruling

DEFAULT_LIMIT = 22


class InvalidPotential(ValueError):
    pass


class StructureViolation(AssertionError):
    def __init__(self, gen, reason: str):
        super().__init__(f"{gen}: {reason}")
        self.gen = gen
        self.reason = reason


class RulingMismatch(ValueError):
    pass


class AugmentationInvalid(ValueError):
    pass


class TooLarge(RuntimeError):
    pass


_KIND_ORDER = {"x": 0, "y": 1, "b": 2, "c": 3}


@dataclass(frozen=True, order=False)
class Generator:
    kind: str  # "x", "y", "b" (crossing) or "c" (right cusp)
    m: int
    i: int = 0
    j: int = 0

    def sort_key(self):
        return (self.m, _KIND_ORDER[self.kind], self.i, self.j)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.kind in ("x", "y"):
            return f"{self.kind}^{self.m}_{self.i},{self.j}"
        return f"{self.kind}_{self.m}"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "m": self.m}
        if self.kind in ("x", "y"):
            out.update(i=self.i, j=self.j)
        return out


def parse_generator(s: str) -> Generator:
    kind, rest = s[0], s[1:]
    if kind in ("x", "y"):
        m, ij = rest.lstrip("^").split("_")
        i, j = ij.split(",")
        return Generator(kind, int(m), int(i), int(j))
    return Generator(kind, int(rest.lstrip("_")))


# ---------------------------------------------------------------------------
# F2 noncommutative polynomials


ZERO = frozenset()
ONE = frozenset({()})


def gen(g: Generator) -> frozenset:
    return frozenset({(g,)})


def add(*xs) -> frozenset:
    out = set()
    for x in xs:
        out ^= x
    return frozenset(out)


def mul(*xs) -> frozenset:
    out = ONE
    for x in xs:
        acc = set()
        for u in out:
            for v in x:
                acc ^= {u + v}
        out = frozenset(acc)
    return out


def _mat_zero(n):
    return [[ZERO] * n for _ in range(n)]


def _mat_id(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def _mat_add(A, B):
    return [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _mat_mul(A, B):
    n, k = len(A), len(B[0]) if B else 0
    inner = len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = set()
            for l in range(inner):
                if A[i][l] and B[l][j]:
                    acc ^= mul(A[i][l], B[l][j])
            row.append(frozenset(acc))
        out.append(row)
    return out


def format_element(x: frozenset) -> str:
    if not x:
        return "0"
    words = sorted(x, key=lambda w: (len(w), [g.sort_key() for g in w]))
    return " + ".join("1" if not w else "*".join(map(str, w)) for w in words)


# ---------------------------------------------------------------------------
# construction


@dataclass
class DGA:
    generators: list
    degree: dict  # Generator -> int mod p
    differential: dict  # Generator -> frozenset of words
    p: int
    mu: MaslovPotential
    splash_sizes: list  # N at splash m, index m-1

    def word_degree(self, w) -> int:
        return sum(self.degree[g] for g in w) % self.p

    def d(self, x: frozenset) -> frozenset:
        """Extend the differential to words by the (sign-free) Leibniz rule."""
        acc = set()
        for w in x:
            for t, g in enumerate(w):
                dg = self.differential[g]
                for v in dg:
                    acc ^= {w[:t] + v + w[t + 1 :]}
        return frozenset(acc)

    def Y(self, m: int) -> list:
        n = self.splash_sizes[m - 1]
        return [[gen(Generator("y", m, i + 1, j + 1)) if i < j else ZERO for j in range(n)] for i in range(n)]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "generators": [dict(g.to_json(), name=str(g), degree=self.degree[g]) for g in self.generators],
            "differential": {
                str(g): [[str(h) for h in w] for w in sorted(self.differential[g], key=lambda w: (len(w), [h.sort_key() for h in w]))]
                for g in self.generators
            },
        }


def _splash_interval(m: int, M: int) -> int:
    return m % M if M else 0


def _tilde_crossing(Y, k, b):
    n = len(Y)
    a = k - 1
    Yh = [row[:] for row in Y]
    Yh[a][a + 1] = ZERO
    B = _mat_id(n)
    Bi = _mat_id(n)
    B[a][a], B[a][a + 1], B[a + 1][a], B[a + 1][a + 1] = ZERO, ONE, ONE, b
    Bi[a][a], Bi[a][a + 1], Bi[a + 1][a], Bi[a + 1][a + 1] = b, ONE, ONE, ZERO
    return _mat_mul(_mat_mul(B, Yh), Bi)


def _tilde_left_cusp(Y, k):
    n = len(Y) + 2
    a = k - 1
    # J_k: n x (n-2) identity with columns k, k+1 removed
    src = [i if i < a else i - 2 for i in range(n)]
    out = _mat_zero(n)
    for i in range(n):
        for j in range(n):
            if i in (a, a + 1) or j in (a, a + 1):
                continue
            out[i][j] = Y[src[i]][src[j]]
    out[a][a + 1] = add(out[a][a + 1], ONE)
    return out


def _tilde_right_cusp(Y, k, c):
    n = len(Y) - 2
    a = k - 1  # 0-based index of strand k; strand k+1 is a + 1

    def tau(i):
        return i if i < a else i + 2

    out = _mat_zero(n)
    for i in range(n):
        for j in range(i + 1, n):
            v = Y[tau(i)][tau(j)]
            if i < a <= j:
                tj = tau(j)
                v = add(
                    v,
                    mul(Y[i][a + 1], Y[a][tj]),
                    mul(Y[i][a], c, Y[a][tj]),
                    mul(Y[i][a], c, c, Y[a + 1][tj]),
                    mul(Y[i][a + 1], c, Y[a + 1][tj]),
                )
            out[i][j] = v
    return out


def build(d: FrontDiagram, mu: MaslovPotential) -> DGA:
    """Generators, degrees and differential for ``d`` graded by ``mu``."""
    counts = d.validate()
    if not check_maslov(d, mu):
        raise InvalidPotential("potential is not a Maslov potential of this front")
    M = d.M
    p = mu.p
    nsplash = max(M, 1)
    sizes = [counts[_splash_interval(m, M)] for m in range(1, nsplash + 1)]
    gens: list = []
    degree: dict = {}
    diff: dict = {}

    def mu_at(m, i):
        return mu(_splash_interval(m, M), i)

    X, Y = {}, {}
    for m in range(1, nsplash + 1):
        n = sizes[m - 1]
        X[m] = _mat_zero(n)
        Y[m] = _mat_zero(n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                gx, gy = Generator("x", m, i, j), Generator("y", m, i, j)
                X[m][i - 1][j - 1] = gen(gx)
                Y[m][i - 1][j - 1] = gen(gy)
                degree[gx] = (mu_at(m, i) - mu_at(m, j)) % p
                degree[gy] = (mu_at(m, i) - mu_at(m, j) - 1) % p
                gens += [gx, gy]

    for m in range(1, nsplash + 1):
        prev = Y[m - 1] if m > 1 else Y[nsplash]
        if M == 0:
            Yt = prev
        else:
            ev = d.events[m - 1]
            k = ev.k
            if ev.kind == CROSS:
                g = Generator("b", m)
                degree[g] = (mu_at(m, k + 1) - mu_at(m, k)) % p
                diff[g] = prev[k - 1][k]
                gens.append(g)
                Yt = _tilde_crossing(prev, k, gen(g))
            elif ev.kind == LEFT_CUSP:
                Yt = _tilde_left_cusp(prev, k)
            else:
                g = Generator("c", m)
                degree[g] = 1 % p
                diff[g] = add(ONE, prev[k - 1][k])
                gens.append(g)
                Yt = _tilde_right_cusp(prev, k, gen(g))
        n = sizes[m - 1]
        IX = _mat_add(_mat_id(n), X[m])
        dX = _mat_add(_mat_mul(Y[m], IX), _mat_mul(IX, Yt))
        dY = _mat_mul(Y[m], Y[m])
        for i in range(n):
            for j in range(i + 1, n):
                diff[Generator("x", m, i + 1, j + 1)] = dX[i][j]
                diff[Generator("y", m, i + 1, j + 1)] = dY[i][j]
    gens.sort()
    return DGA(gens, degree, diff, p, mu, sizes)


def check_structure(g: DGA) -> dict:
    """Verify the grading and ``d^2 = 0`` on every generator."""
    for q in g.generators:
        dq = g.differential[q]
        want = (g.degree[q] - 1) % g.p
        for w in dq:
            if g.word_degree(w) != want:
                raise StructureViolation(q, f"term {'*'.join(map(str, w)) or '1'} has degree {g.word_degree(w)}, expected {want}")
        dd = g.d(dq)
        if dd:
            raise StructureViolation(q, f"d^2 = {format_element(dd)}")
    return {"generators": len(g.generators), "p": g.p, "d_squared_zero": True, "degree_minus_one": True}


# ---------------------------------------------------------------------------
# augmentations


def evaluate(x: frozenset, eps: Mapping) -> int:
    return sum(all(eps[h] for h in w) for w in x) % 2


def is_augmentation(g: DGA, eps: Mapping, p: int | None = None) -> bool:
    p = g.p if p is None else p
    if g.p % p:
        raise ValueError(f"DGA graded mod {g.p} cannot be checked mod {p}")
    missing = [q for q in g.generators if q not in eps]
    if missing:
        raise AugmentationInvalid(f"no value for {missing[0]}")
    for q in g.generators:
        if eps[q] and g.degree[q] % p:
            return False
        if evaluate(g.differential[q], eps):
            return False
    return True


def augmentation_matrix(g: DGA, eps: Mapping, m: int) -> tuple:
    n = g.splash_sizes[m - 1]
    return tuple(tuple(int(i < j and eps[Generator("y", m, i + 1, j + 1)]) for j in range(n)) for i in range(n))


def augmentation_from_gnr(g: DGA, d: FrontDiagram, r: Ruling) -> dict:
    """The augmentation attached to a generalized normal ruling."""
    try:
        validate_ruling(d, r, generalized=True, p=r.p, mu=reduce_potential(g.mu, r.p))
    except RulingInvalid as exc:
        raise RulingMismatch(str(exc)) from exc
    M = d.M
    eps = {q: 0 for q in g.generators}
    for m in range(1, len(g.splash_sizes) + 1):
        rho = r.rhos[_splash_interval(m, M)]
        B = b_tau(rho)
        n = len(rho)
        for i in range(n):
            for j in range(i + 1, n):
                eps[Generator("y", m, i + 1, j + 1)] = B[i][j]
    for e in r.switches:
        m = e + 1
        k = d.events[e].k
        a, b = k - 1, k
        eps[Generator("b", m)] = 1
        eps[Generator("x", m, k, k + 1)] = 1
        rho = r.rhos[_splash_interval(m, M)]
        ra, rb = rho[a], rho[b]
        if ra != a and rb != b and (rb < ra < a or b < rb < ra):
            lo, hi = sorted((ra, rb))
            eps[Generator("x", m, lo + 1, hi + 1)] = 1
    if not is_augmentation(g, eps, r.p):
        raise AssertionError("constructed assignment is not an augmentation")
    return eps


def reduce_potential(mu: MaslovPotential, p: int) -> MaslovPotential:
    if p == mu.p:
        return mu
    if mu.p % p:
        raise ValueError(f"cannot reduce a mod-{mu.p} potential mod {p}")
    return MaslovPotential(p, {k: v % p for k, v in mu.values.items()})


def gnr_from_augmentation(g: DGA, d: FrontDiagram, eps: Mapping, p: int | None = None) -> Ruling:
    """Read a generalized normal ruling off the canonical pairings of ``eps(Y_m)``."""
    p = g.p if p is None else p
    if not is_augmentation(g, eps, p):
        raise AugmentationInvalid("assignment does not annihilate the differential")
    M = d.M
    nint = max(M, 1)
    rhos = [None] * nint
    for m in range(1, len(g.splash_sizes) + 1):
        rhos[_splash_interval(m, M)] = pairing(augmentation_matrix(g, eps, m)).tau
    r = ruling_from_involutions(d, rhos, generalized=True, p=p)
    validate_ruling(d, r, generalized=True, p=p, mu=reduce_potential(g.mu, p))
    return r


def brute_force_augmentations(
    g: DGA, p: int | None = None, limit: int = DEFAULT_LIMIT, stop_after: int | None = None
) -> list:
    """All p-graded augmentations, by backtracking over degree-0 generators.

    ``stop_after`` caps the number returned, for existence queries.
    """
    p = g.p if p is None else p
    if g.p % p:
        raise ValueError(f"DGA graded mod {g.p} cannot be searched mod {p}")
    free = [q for q in g.generators if g.degree[q] % p == 0]
    if len(free) > limit:
        raise TooLarge(f"{len(free)} free generators exceeds the limit {limit}")
    index = {q: t for t, q in enumerate(free)}
    # each equation: set of monomials, a monomial being a bitmask of free variables
    eqs_by_ready: dict = {}
    for q in g.generators:
        monos = set()
        for w in g.differential[q]:
            if any(h not in index for h in w):
                continue
            mask = 0
            for h in w:
                mask |= 1 << index[h]
            monos ^= {mask}
        if not monos:
            continue
        union = 0
        for mk in monos:
            union |= mk
        ready = union.bit_length() - 1
        eqs_by_ready.setdefault(ready, []).append(tuple(monos))

    def holds(eq, val):
        return sum((mk & val) == mk for mk in eq) % 2 == 0

    if any(not holds(eq, 0) for eq in eqs_by_ready.get(-1, [])) or stop_after == 0:
        return []
    n = len(free)
    found = []

    def rec(t, val):
        if stop_after is not None and len(found) >= stop_after:
            return
        if t == n:
            found.append(val)
            return
        for bit in (0, 1):
            v2 = val | (bit << t)
            if all(holds(eq, v2) for eq in eqs_by_ready.get(t, ())):
                rec(t + 1, v2)

    rec(0, 0)
    out = []
    for val in found:
        eps = {q: 0 for q in g.generators}
        for q, t in index.items():
            eps[q] = val >> t & 1
        out.append(eps)
    return out


def augmentation_to_json(eps: Mapping) -> dict:
    return {str(q): int(v) for q, v in sorted(eps.items())}


def augmentation_from_json(obj) -> dict:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return {parse_generator(k): int(v) & 1 for k, v in obj.items()}
