"""Canonical pairings of complexes with an ordered basis over F2.

A complex is a strictly upper-triangular 0/1 matrix ``D`` with ``D^2 = 0`` in
row convention: ``d v_i = sum_j D[i][j] v_j``.  Indices are 0-based, except for
the swap position ``k`` in :func:`swap_check`, which is 1-based like the
strand positions it comes from.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class NotSquareZero(ValueError):
    pass


class NotStrictlyUpperTriangular(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


Matrix = tuple  # tuple of row tuples of 0/1


def as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) & 1 for x in row) for row in rows)


def zeros(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n, m = len(A), len(B[0]) if B else 0
    cols = list(zip(*B)) if B else []
    return tuple(tuple(sum(a & b for a, b in zip(row, col)) & 1 for col in cols) for row in A) if n else ()


def is_strictly_upper(D: Matrix) -> bool:
    return all(D[i][j] == 0 for i in range(len(D)) for j in range(i + 1))


def rank(D: Matrix) -> int:
    rows = [int("".join(map(str, r)) or "0", 2) for r in D]
    r = 0
    for bit in reversed(range(len(D[0]) if D else 0)):
        pivot = next((x for x in rows if x >> bit & 1), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        rows = [x ^ pivot if x >> bit & 1 else x for x in rows]
        r += 1
    return r


def check_complex(D: Matrix) -> Matrix:
    D = as_matrix(D)
    n = len(D)
    if any(len(row) != n for row in D):
        raise NotStrictlyUpperTriangular("matrix is not square")
    if not is_strictly_upper(D):
        raise NotStrictlyUpperTriangular("entries on or below the diagonal")
    if any(any(row) for row in matmul(D, D)):
        raise NotSquareZero("D^2 != 0")
    return D


def b_tau(tau, n: int | None = None) -> Matrix:
    """The 0/1 matrix with a 1 at ``(i, tau(i))`` whenever ``i < tau(i)``."""
    n = len(tau) if n is None else n
    return tuple(tuple(int(i < tau[i] == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Pairing:
    tau: tuple
    P: Matrix

    def pairs(self):
        return [(i, j) for i, j in enumerate(self.tau) if i < j]

    def fixed(self):
        return [i for i, j in enumerate(self.tau) if i == j]


def pairing(D) -> Pairing:
    """Canonical involution and a unit upper-triangular ``P`` with ``P D P^-1 = B_tau``.

    Rows are reduced from the last index up: each row's pivot is its lowest
    nonzero column, and earlier-reduced rows with the same pivot are added in.
    """
    D = check_complex(D)
    n = len(D)
    red = [list(D[i]) for i in range(n)]
    coef = [[int(i == j) for j in range(n)] for i in range(n)]
    owner: dict[int, int] = {}
    for i in reversed(range(n)):
        r, c = red[i], coef[i]
        while any(r):
            piv = r.index(1)
            if piv not in owner:
                owner[piv] = i
                break
            i2 = owner[piv]
            r[:] = [x ^ y for x, y in zip(r, red[i2])]
            c[:] = [x ^ y for x, y in zip(c, coef[i2])]
    tau = list(range(n))
    for piv, i in owner.items():
        tau[i], tau[piv] = piv, i
    P = [list(coef[i]) for i in range(n)]
    for piv, i in owner.items():
        P[piv] = list(red[i])
    result = Pairing(tuple(tau), as_matrix(P))
    if not verify_pairing(D, result):
        raise AssertionError("pairing certificate failed")
    return result


def verify_pairing(D, pr: Pairing) -> bool:
    """``P`` unit upper triangular and ``P D = B_tau P``."""
    D = as_matrix(D)
    n = len(D)
    P = pr.P
    if any(P[i][i] != 1 for i in range(n)) or any(P[i][j] for i in range(n) for j in range(i)):
        return False
    if any(pr.tau[pr.tau[i]] != i for i in range(n)):
        return False
    return matmul(P, D) == matmul(b_tau(pr.tau), P)


def homology_rank(D) -> int:
    D = as_matrix(D)
    n = len(D)
    r = rank(D) if n else 0
    return (n - r) - r


def all_complexes(n: int):
    """Every strictly upper-triangular n x n F2 matrix with square zero."""
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in itertools.product((0, 1), repeat=len(slots)):
        M = [[0] * n for _ in range(n)]
        for (i, j), b in zip(slots, bits):
            M[i][j] = b
        M = as_matrix(M)
        if not any(any(row) for row in matmul(M, M)):
            yield M


def unit_upper_matrices(n: int):
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in itertools.product((0, 1), repeat=len(slots)):
        M = [[int(i == j) for j in range(n)] for i in range(n)]
        for (i, j), b in zip(slots, bits):
            M[i][j] = b
        yield as_matrix(M)


def inverse_unit_upper(P: Matrix) -> Matrix:
    n = len(P)
    inv = [[int(i == j) for j in range(n)] for i in range(n)]
    # back substitution: P inv = I
    for i in reversed(range(n)):
        for j in range(i + 1, n):
            if P[i][j]:
                inv[i] = [x ^ y for x, y in zip(inv[i], inv[j])]
    return as_matrix(inv)


def brute_force_taus(D) -> set:
    """Involutions ``tau`` reachable as ``P D P^-1 = B_tau`` over all unit upper ``P``."""
    D = as_matrix(D)
    n = len(D)
    found = set()
    for P in unit_upper_matrices(n):
        C = matmul(matmul(P, D), inverse_unit_upper(P))
        tau = list(range(n))
        ok = True
        for i in range(n):
            ones = [j for j in range(n) if C[i][j]]
            if len(ones) > 1:
                ok = False
                break
            if ones:
                j = ones[0]
                if tau[j] != j or tau[i] != i:
                    ok = False
                    break
                tau[i], tau[j] = j, i
        if ok and C == b_tau(tau):
            found.add(tuple(tau))
    return found


def _conj_perm(tau, a):
    s = {a: a + 1, a + 1: a}
    out = list(tau)
    for i, t in enumerate(tau):
        out[s.get(i, i)] = s.get(t, t)
    return tuple(out)


def swap_allows_same(tau, k: int) -> bool:
    """Whether the swap of basis vectors k, k+1 (1-based) may leave ``tau`` unchanged."""
    a, b = k - 1, k
    ta, tb = tau[a], tau[b]
    nested_or_disjoint = tb < ta < a or (ta < a and b < tb) or b < tb < ta
    one_fixed = (ta < a and tb == b) or (ta == a and b < tb)
    both_fixed = ta == a and tb == b
    return nested_or_disjoint or one_fixed or both_fixed


def swap_check(D, k: int) -> dict:
    """Compare the canonical involutions before and after swapping basis vectors k, k+1."""
    D = check_complex(D)
    n = len(D)
    if not 1 <= k < n:
        raise PreconditionViolated(f"k={k} out of range for N={n}")
    a = k - 1
    if D[a][a + 1]:
        raise PreconditionViolated(f"d v_{k} has a v_{k + 1} term")
    perm = list(range(n))
    perm[a], perm[a + 1] = a + 1, a
    D2 = as_matrix([[D[perm[i]][perm[j]] for j in range(n)] for i in range(n)])
    tau = pairing(D).tau
    tau2 = pairing(D2).tau
    conj = _conj_perm(tau, a)
    if tau2 == conj:
        relation = "conjugate" if conj != tau else "both"
    elif tau2 == tau:
        relation = "same"
    else:
        relation = "violation"
    allowed = relation in ("conjugate", "both") or (relation == "same" and swap_allows_same(tau, k))
    return {"tau": tau, "tau_prime": tau2, "conjugate": conj, "relation": relation, "allowed": allowed}


def degrees_respected(D, degrees, p: int = 0) -> bool:
    """For ``d`` of degree -1 (mod p; p=0 means integers), paired indices differ by one."""
    D = as_matrix(D)
    mod = (lambda x: x % p) if p else (lambda x: x)
    tau = pairing(D).tau
    return all(mod(degrees[i] - degrees[j] - 1) == 0 for i, j in enumerate(tau) if i < j)
